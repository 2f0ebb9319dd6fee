#include "jordan/special_values.hpp"

#include <string>

#include <boost/math/constants/constants.hpp>

#include "jordan/error.hpp"

namespace jordan {

const WideReal& wide_pi() {
    static const WideReal pi = boost::math::constants::pi<WideReal>();
    return pi;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

WideReal to_wide(const Rational& q) {
    return WideReal(boost::multiprecision::numerator(q)) /
           WideReal(boost::multiprecision::denominator(q));
}

WideReal wide_pi_power(int two_m) { return pow(wide_pi(), two_m); }

namespace {

void check_cap(int m_max) {
    if (m_max < 1 || m_max > kMaxZetaIndex)
        throw std::invalid_argument("m_max must lie in [1, " + std::to_string(kMaxZetaIndex) +
                                    "], got " + std::to_string(m_max));
}

Rational power_of_two(int e) {
    if (e >= 0) return Rational(BigInt(1) << e);
    return Rational(BigInt(1), BigInt(1) << -e);
}

}  // namespace

std::vector<Rational> bernoulli_even(int m_max) {
    check_cap(m_max);
    const int top = 2 * m_max;
    std::vector<Rational> all(top + 1);
    all[0] = 1;
    for (int n = 1; n <= top; ++n) {
        if (n > 1 && n % 2 == 1) continue;  // B_3, B_5, ... vanish
        Rational acc = 0;
        for (int j = 0; j < n; ++j)
            if (all[j] != 0) acc += Rational(binomial(n + 1, j)) * all[j];
        all[n] = -acc / (n + 1);
    }
    std::vector<Rational> even(m_max + 1);
    for (int m = 0; m <= m_max; ++m) even[m] = all[2 * m];
    return even;
}

EvenZetaCache::EvenZetaCache(int m_max) : max_index_(m_max) {
    const auto bernoulli = bernoulli_even(m_max);
    zeta_q_.resize(m_max + 1);
    eta_q_.resize(m_max + 1);
    lambda_q_.resize(m_max + 1);
    zeta_.resize(m_max + 1);
    eta_.resize(m_max + 1);
    lambda_.resize(m_max + 1);

    BigInt factorial = 1;  // (2m)!
    for (int m = 1; m <= m_max; ++m) {
        factorial *= (2 * m - 1) * (2 * m);
        // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
        Rational q = bernoulli[m] * power_of_two(2 * m - 1) / Rational(factorial);
        if (m % 2 == 0) q = -q;
        zeta_q_[m] = q;
        eta_q_[m] = (1 - power_of_two(1 - 2 * m)) * q;
        lambda_q_[m] = (1 - power_of_two(-2 * m)) * q;

        const WideReal pi_power = wide_pi_power(2 * m);
        zeta_[m] = static_cast<double>(to_wide(zeta_q_[m]) * pi_power);
        eta_[m] = static_cast<double>(to_wide(eta_q_[m]) * pi_power);
        lambda_[m] = static_cast<double>(to_wide(lambda_q_[m]) * pi_power);
    }
}

int EvenZetaCache::check(int m) const {
    if (m < 1 || m > max_index_)
        throw std::out_of_range("even zeta index " + std::to_string(m) + " outside cache [1, " +
                                std::to_string(max_index_) + "]");
    return m;
}

WideReal EvenZetaCache::zeta_wide(int m) const {
    return to_wide(zeta_pi_factor(m)) * wide_pi_power(2 * m);
}
WideReal EvenZetaCache::eta_wide(int m) const {
    return to_wide(eta_pi_factor(m)) * wide_pi_power(2 * m);
}
WideReal EvenZetaCache::lambda_wide(int m) const {
    return to_wide(lambda_pi_factor(m)) * wide_pi_power(2 * m);
}

EvenZetaCache build_even_zeta_cache(int m_max) {
    check_cap(m_max);
    return EvenZetaCache(m_max);
}

}  // namespace jordan
