#pragma once

#include <string>
#include <vector>

namespace jordan {

enum class ShiftedMethod { DirectSum, Recursion };

// Coefficients T~_p(r) of tan(pi x/2)/(pi x/2) in powers of r^2 - x^2:
//   T~_p(r) = sum_{n>=0} 1 / ((n + (1-r)/2)^p (n + (1+r)/2)^p).
struct ShiftedTable {
    double r = 0.0;
    std::vector<double> values;  // values[p-1] = T~_p(r)
    ShiftedMethod method = ShiftedMethod::Recursion;
    int requested_order = 0;
    // Set when validation against the direct sum failed; values then stop at the
    // last order that passed.
    bool truncated = false;
    std::string diagnostic;

    int order_max() const { return static_cast<int>(values.size()); }
    double at(int p) const;
};

double shifted_direct(double r, int p, double abs_tol);

// Riccati-derived quadratic recursion
//   T~_1 = (pi^2/2) tan(pi r/2)/(pi r/2)
//   r^2 T~_2 = pi^2 - 2 T~_1 + r^2 T~_1^2
//   (k+1) r^2 T~_{k+2} = -(4k+2) T~_{k+1} + r^2 sum_{j=0}^{k} T~_{j+1} T~_{k-j+1}
//                        + 4 sum_{j=0}^{k-1} T~_{j+1} T~_{k-j}
// with every entry checked against shifted_direct at max(1e-9 |value|, 1e-12).
ShiftedTable shifted_recursive(double r, int order_max);

// Raw recursion values without validation.
std::vector<double> shifted_recursion_values(double r, int order_max);

ShiftedTable shifted_direct_table(double r, int order_max);

}  // namespace jordan
