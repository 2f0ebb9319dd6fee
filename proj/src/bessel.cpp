#include "jordan/bessel.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "jordan/error.hpp"

namespace jordan {

namespace {

// The ascending series cancels up to e^{|x|} in magnitude; 50 digits leave ample
// headroom at the |x| <= 50 cap.
using SeriesReal = boost::multiprecision::cpp_bin_float_50;

// Largest order reached internally: p + N + 1 with p <= 30, N <= 20.
constexpr double kInternalMaxOrder = kBesselMaxOrder + 21.0;

SeriesReal value_at_origin(const SeriesReal& p) {
    return 1 / (pow(SeriesReal(2), p) * boost::math::tgamma(p + 1));
}

SeriesReal normalized_series(const SeriesReal& p, const SeriesReal& x) {
    const SeriesReal q = -(x * x) / 4;
    SeriesReal term = value_at_origin(p);
    SeriesReal sum = term;
    const SeriesReal floor = 1e-45;
    for (int m = 1; m < 2000; ++m) {
        term *= q / (m * (m + p));
        sum += term;
        // First-omitted-term bound once terms shrink monotonically.
        const bool shrinking = m * (m + p) > abs(q);
        if (shrinking && abs(term) <= 1e-20 * abs(sum)) break;
        if (shrinking && abs(term) < floor) break;
    }
    return sum;
}

void check_range(double p, double x, double max_order) {
    if (!(p >= 0.0) || p > max_order)
        throw unsupported_range("Bessel order must lie in [0, " + std::to_string(max_order) +
                                "], got " + std::to_string(p));
    if (!(std::fabs(x) <= kBesselMaxArgument))
        throw unsupported_range("Bessel argument must satisfy |x| <= 50, got " + std::to_string(x));
}

SeriesReal normalized_internal(double p, double x) {
    check_range(p, x, kInternalMaxOrder);
    return normalized_series(SeriesReal(p), SeriesReal(x));
}

}  // namespace

double bessel_j_normalized(double p, double x) {
    check_range(p, x, kBesselMaxOrder);
    return static_cast<double>(normalized_series(SeriesReal(p), SeriesReal(x)));
}

double first_zero(double p) {
    check_range(p, 0.0, kInternalMaxOrder);
    double a = std::max(0.5, p);
    SeriesReal fa = normalized_internal(p, a);
    double b = a;
    SeriesReal fb = fa;
    for (;;) {
        b = a + 0.1;
        if (b > kBesselMaxArgument)
            throw unsupported_range("no sign change of J_" + std::to_string(p) + " below x = 50");
        fb = normalized_internal(p, b);
        if ((fa > 0) != (fb > 0)) break;
        a = b;
        fa = fb;
    }
    while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const SeriesReal fm = normalized_internal(p, mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (fa > 0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

BesselExpansion build_expansion(double p, double r, int N) {
    check_range(p, r, kBesselMaxOrder);
    if (N < 0 || N > 20) throw std::invalid_argument("expansion length N must lie in [0, 20]");
    const double limit = first_zero(p + 1.0);
    if (!(r > 0.0 && r <= limit))
        throw domain_error("expansion center must satisfy 0 < r <= j_{p+1,1} = " +
                           std::to_string(limit) + ", got " + std::to_string(r));

    const SeriesReal rr = r;
    const SeriesReal r2 = rr * rr;
    BesselExpansion e;
    e.p = p;
    e.r = r;
    e.n_terms = N;
    e.coeffs.resize(N + 1);

    SeriesReal factor = 1;  // 2^k k!
    SeriesReal r2k = 1;     // r^{2k}
    SeriesReal head = 0;    // sum_{k<=N} c_k r^{2k}
    for (int k = 0; k <= N; ++k) {
        if (k > 0) factor *= 2 * k;
        const SeriesReal c = normalized_internal(p + k, r) / factor;
        e.coeffs[k] = static_cast<double>(c);
        head += c * r2k;
        r2k *= r2;
    }
    factor *= 2 * (N + 1);
    e.alpha = static_cast<double>(normalized_internal(p + N + 1, r) / factor);
    const SeriesReal origin = value_at_origin(SeriesReal(p));
    e.value_at_zero = static_cast<double>(origin);
    e.beta = static_cast<double>((origin - head) / r2k);
    return e;
}

double bessel_expansion_partial(const BesselExpansion& e, double x) {
    const double z = (e.r - x) * (e.r + x);
    double acc = 0.0;
    for (int k = e.n_terms; k >= 0; --k) acc = acc * z + e.coeffs[k];
    return acc;
}

BesselBounds bessel_bounds(const BesselExpansion& e, double x) {
    if (!(std::fabs(x) <= e.r))
        throw domain_error("Bessel bounds need |x| <= r = " + std::to_string(e.r));
    const double z = (e.r - x) * (e.r + x);
    const double head = bessel_expansion_partial(e, x);
    const double tail = std::pow(z, e.n_terms + 1);
    return {head + e.alpha * tail, head + e.beta * tail};
}

}  // namespace jordan
