#pragma once

#include <vector>

#include "jordan/numeric.hpp"

namespace jordan {

inline constexpr int kMaxZetaIndex = 64;

// B_0, B_2, ..., B_{2 m_max} in lowest terms, from sum_{j<=n} C(n+1, j) B_j = 0.
std::vector<Rational> bernoulli_even(int m_max);

// zeta(2m), eta(2m) and lambda(2m) for 1 <= m <= max_index(). Each value is held
// exactly as q * pi^{2m} with rational q, and rounded to double once.
class EvenZetaCache {
  public:
    explicit EvenZetaCache(int m_max);

    int max_index() const { return max_index_; }

    double zeta(int m) const { return zeta_[check(m)]; }
    double eta(int m) const { return eta_[check(m)]; }
    double lambda(int m) const { return lambda_[check(m)]; }

    // Rational factor q with zeta(2m) = q * pi^{2m}.
    const Rational& zeta_pi_factor(int m) const { return zeta_q_[check(m)]; }
    const Rational& eta_pi_factor(int m) const { return eta_q_[check(m)]; }
    const Rational& lambda_pi_factor(int m) const { return lambda_q_[check(m)]; }

    WideReal zeta_wide(int m) const;
    WideReal eta_wide(int m) const;
    WideReal lambda_wide(int m) const;

  private:
    int check(int m) const;

    int max_index_;
    std::vector<Rational> zeta_q_, eta_q_, lambda_q_;
    std::vector<double> zeta_, eta_, lambda_;
};

EvenZetaCache build_even_zeta_cache(int m_max);

// pi^{2m} in wide precision.
WideReal wide_pi_power(int two_m);

}  // namespace jordan
