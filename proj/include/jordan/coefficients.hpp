#pragma once

#include <cstdint>
#include <vector>

#include "jordan/family.hpp"
#include "jordan/numeric.hpp"
#include "jordan/special_values.hpp"

namespace jordan {

inline constexpr int kDefaultOrderMax = 20;

enum class CoefficientMethod { ClosedForm, DirectSum };

// Immutable table of T_p, S_p, C_p or D_p for 1 <= p <= order_max.
// Construction enforces positivity, and for Tan the sandwich 2^-p < T_p <= 2^{1-p}
// (equality only at p = 1, where T_1 = 1).
class CoefficientTable {
  public:
    CoefficientTable(Family family, std::vector<double> values, CoefficientMethod method,
                     double accuracy);

    Family family() const { return family_; }
    int order_max() const { return static_cast<int>(values_.size()); }
    CoefficientMethod method() const { return method_; }
    // Bound on the absolute error of each entry.
    double accuracy() const { return accuracy_; }

    double at(int p) const;
    // Inner-series coefficient a_k = coeff_{k+1} / 4^{k+1}.
    double scaled(int k) const;

    // Test hook: copy with entry p multiplied by factor, bypassing the Tan sandwich.
    CoefficientTable corrupted(int p, double factor) const;

  private:
    CoefficientTable() = default;

    Family family_ = Family::Tan;
    std::vector<double> values_;
    CoefficientMethod method_ = CoefficientMethod::ClosedForm;
    double accuracy_ = 0.0;
};

// Closed form as a polynomial in pi^2: coefficient of pi^{2m} at index m, exact.
std::vector<Rational> closed_form_polynomial(Family family, int p, const EvenZetaCache& cache);

double coeff_closed(Family family, int p, const EvenZetaCache& cache);
WideReal coeff_closed_wide(Family family, int p, const EvenZetaCache& cache);

struct DirectSum {
    double value = 0.0;
    double error_bound = 0.0;  // certified, includes rounding
    std::int64_t terms = 0;
};

// Defining series of the coefficient, truncated once the certified error is below abs_tol.
DirectSum coeff_direct(Family family, int p, double abs_tol);
// Same with the serial summation kernel.
DirectSum coeff_direct_serial(Family family, int p, double abs_tol);

// Magnitude of the n-th summand of the defining series (n >= 1).
long double direct_term(Family family, int p, std::int64_t n);

// Checks |a_n| > |a_{n+1}| for first <= n < last.
bool direct_terms_decrease(Family family, int p, std::int64_t first, std::int64_t last);

CoefficientTable closed_form_table(Family family, const EvenZetaCache& cache,
                                   int order_max = kDefaultOrderMax);
CoefficientTable direct_sum_table(Family family, double abs_tol,
                                  int order_max = kDefaultOrderMax);

// H_j (Tan) or J_j (Sec), j >= 1, via the finite form
//   H_j = (-1)^{j-1} [pi^2/8 - (1 + sum_{k=0}^{j-2} (-1)^k T_{k+1}/4^{k+1})]
//   J_j = (-1)^j     [pi/4   - (1 - sum_{k=0}^{j-2} (-1)^k S_{k+1}/4^{k+1})].
// Throws std::out_of_range when 0 < K_j < coeff_j/4^j fails by more than 1e-12.
double remainder_constant(Family family, int index, const CoefficientTable& table);

class RemainderConstants {
  public:
    RemainderConstants() = default;
    RemainderConstants(Family family, std::vector<double> values)
        : family_(family), values_(std::move(values)) {}

    Family family() const { return family_; }
    int count() const { return static_cast<int>(values_.size()); }
    double at(int index) const;

  private:
    Family family_ = Family::Tan;
    std::vector<double> values_;
};

// Constants K_1..K_{table.order_max()}; Tan and Sec only.
RemainderConstants remainder_constants(const CoefficientTable& table);

}  // namespace jordan
