#pragma once

#include <vector>

namespace jordan {

inline constexpr double kBesselMaxOrder = 30.0;
inline constexpr double kBesselMaxArgument = 50.0;

// x^{-p} J_p(x) from the ascending series; 1/(2^p Gamma(p+1)) at x = 0.
// Valid for 0 <= p <= 30 (p + k up to 50 for expansion coefficients), |x| <= 50.
double bessel_j_normalized(double p, double x);

// First positive zero j_{p,1}: scan from max(0.5, p) in steps of 0.1, then bisect
// to an absolute tolerance of 1e-12.
double first_zero(double p);

// x^{-p} J_p(x) = sum_k c_k (r^2 - x^2)^k with c_k = r^{-(p+k)} J_{p+k}(r) / (2^k k!).
struct BesselExpansion {
    double p = 0.0;
    double r = 0.0;
    int n_terms = 0;            // N: coefficients c_0..c_N retained
    std::vector<double> coeffs;  // size N + 1
    double alpha = 0.0;         // c_{N+1}: tail at x = r
    double beta = 0.0;          // tail at x = 0, as a finite sum
    double value_at_zero = 0.0;  // 1 / (2^p Gamma(p+1))
};

// Requires 0 < r <= j_{p+1,1} and 0 <= N <= 20.
BesselExpansion build_expansion(double p, double r, int N);

struct BesselBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Polynomial part plus alpha (lower) or beta (upper) times (r^2 - x^2)^{N+1}; |x| <= r.
BesselBounds bessel_bounds(const BesselExpansion& expansion, double x);

// Partial sum of the expansion through k = N (no tail term).
double bessel_expansion_partial(const BesselExpansion& expansion, double x);

}  // namespace jordan
