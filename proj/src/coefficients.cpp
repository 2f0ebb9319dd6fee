#include "jordan/coefficients.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jordan/error.hpp"
#include "jordan/kernels.hpp"

namespace jordan {

namespace {

constexpr long double kEpsL = std::numeric_limits<long double>::epsilon();
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_order(int p) {
    if (p < 1) throw std::invalid_argument("coefficient order must be >= 1, got " + std::to_string(p));
}

long double ipow(long double base, int e) {
    long double r = 1.0L;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational pow2(int e) { return Rational(BigInt(1) << e); }

}  // namespace

// --- table ------------------------------------------------------------------

CoefficientTable::CoefficientTable(Family family, std::vector<double> values,
                                   CoefficientMethod method, double accuracy)
    : family_(family), values_(std::move(values)), method_(method), accuracy_(accuracy) {
    if (values_.empty()) throw std::invalid_argument("coefficient table must hold order 1");
    for (int p = 1; p <= order_max(); ++p) {
        const double v = values_[p - 1];
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(to_string(family)) + " coefficient " +
                                        std::to_string(p) + " is not positive");
        if (family == Family::Tan) {
            const double lo = std::ldexp(1.0, -p);
            const double hi = std::ldexp(1.0, 1 - p);
            if (v <= lo - accuracy_ || v > hi + accuracy_ || (p > 1 && v >= hi))
                throw std::invalid_argument("T_" + std::to_string(p) +
                                            " violates 2^-p < T_p < 2^{1-p}");
        }
    }
}

double CoefficientTable::at(int p) const {
    if (p < 1 || p > order_max())
        throw std::out_of_range("coefficient order " + std::to_string(p) + " outside table [1, " +
                                std::to_string(order_max()) + "]");
    return values_[p - 1];
}

double CoefficientTable::scaled(int k) const { return std::ldexp(at(k + 1), -2 * (k + 1)); }

CoefficientTable CoefficientTable::corrupted(int p, double factor) const {
    CoefficientTable copy = *this;
    copy.values_.at(p - 1) *= factor;
    return copy;
}

// --- closed form --------------------------------------------------------------

std::vector<Rational> closed_form_polynomial(Family family, int p, const EvenZetaCache& cache) {
    require_order(p);
    const int half = p / 2;
    if (half > cache.max_index())
        throw std::invalid_argument("zeta cache covers 2m <= " + std::to_string(2 * cache.max_index()) +
                                    ", order " + std::to_string(p) + " needs more");

    std::vector<Rational> poly(half + 1);
    switch (family) {
        case Family::Tan:
            poly[0] = -Rational(binomial(2 * p - 1, p - 1));
            for (int m = 1; m <= half; ++m)
                poly[m] = 2 * Rational(binomial(2 * p - 2 * m - 1, p - 1)) * cache.zeta_pi_factor(m);
            break;
        case Family::Sec:
            poly[0] = Rational(binomial(2 * p - 2, p - 2) - binomial(2 * p - 2, p - 1));
            for (int m = 1; m <= half; ++m)
                poly[m] = 2 *
                          Rational(binomial(2 * p - 2 * m - 2, p - 2) -
                                   binomial(2 * p - 2 * m - 2, p - 1)) *
                          cache.eta_pi_factor(m);
            break;
        case Family::Cot:
            poly[0] = -Rational(binomial(2 * p - 1, p - 1)) - pow2(2 * p - 1);
            for (int m = 1; m <= half; ++m)
                poly[m] = pow2(2 * m + 1) * Rational(binomial(2 * p - 2 * m - 1, p - 1)) *
                          cache.zeta_pi_factor(m);
            break;
        case Family::Cosec:
            poly[0] = Rational(binomial(2 * p - 1, p - 1)) - pow2(2 * p - 1);
            for (int m = 1; m <= half; ++m)
                poly[m] = pow2(2 * m + 1) * Rational(binomial(2 * p - 2 * m - 1, p - 1)) *
                          cache.eta_pi_factor(m);
            break;
    }
    if (p % 2 == 1)
        for (auto& c : poly) c = -c;
    return poly;
}

WideReal coeff_closed_wide(Family family, int p, const EvenZetaCache& cache) {
    const auto poly = closed_form_polynomial(family, p, cache);
    const WideReal pi2 = wide_pi() * wide_pi();
    WideReal acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * pi2 + to_wide(*it);
    return acc;
}

double coeff_closed(Family family, int p, const EvenZetaCache& cache) {
    return static_cast<double>(coeff_closed_wide(family, p, cache));
}

// --- direct sums --------------------------------------------------------------

long double direct_term(Family family, int p, std::int64_t n) {
    const auto nl = static_cast<long double>(n);
    switch (family) {
        case Family::Tan: return 1.0L / ipow(nl * (nl + 1.0L), p);
        case Family::Sec: return (2.0L * nl + 1.0L) / ipow(nl * (nl + 1.0L), p);
        case Family::Cot:
        case Family::Cosec: return ipow(4.0L / (nl * (nl + 2.0L)), p);
    }
    return 0.0L;
}

bool direct_terms_decrease(Family family, int p, std::int64_t first, std::int64_t last) {
    long double prev = direct_term(family, p, first);
    for (std::int64_t n = first + 1; n <= last; ++n) {
        const long double cur = direct_term(family, p, n);
        if (!(cur < prev)) return false;
        prev = cur;
    }
    return true;
}

namespace {

constexpr std::int64_t kMaxTerms = std::int64_t{1} << 34;

// Monotone families: the summand f is log-convex and decreasing, and
//   Tan  (n + 1/2)^{-2p} <= f(n) <= n^{-2p}
//   Cot  4^p (n + 1)^{-2p} <= f(n) <= 4^p n^{-2p},
// so the tail over n > N lies in
//   [int_{N+1}^inf lower(x) dx, int_{N+1/2}^inf upper(x) dx]   (Hermite-Hadamard on the right).
struct TailBracket {
    long double lo, hi;
};

TailBracket monotone_tail(Family family, int p, std::int64_t N) {
    const long double e = 1.0L - 2.0L * p;
    const long double denom = 2.0L * p - 1.0L;
    const long double nl = static_cast<long double>(N);
    if (family == Family::Tan)
        return {std::pow(nl + 1.5L, e) / denom, std::pow(nl + 0.5L, e) / denom};
    const long double scale = ipow(4.0L, p);
    return {scale * std::pow(nl + 2.0L, e) / denom, scale * std::pow(nl + 0.5L, e) / denom};
}

template <class Summer>
DirectSum monotone_direct(Family family, int p, double abs_tol, Summer&& summer) {
    const long double target = 0.5L * abs_tol;
    auto width = [&](std::int64_t N) {
        const auto t = monotone_tail(family, p, N);
        return 0.5L * (t.hi - t.lo);
    };
    std::int64_t hi = 1;
    while (width(hi) > target) {
        hi *= 2;
        if (hi > kMaxTerms) throw unsupported_range("direct sum needs more than 2^34 terms");
    }
    std::int64_t lo = hi / 2;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (width(mid) > target ? lo : hi) = mid;
    }
    const std::int64_t N = hi;
    const auto partial = summer(std::int64_t{1}, N, [&](std::int64_t n) { return direct_term(family, p, n); });
    const auto tail = monotone_tail(family, p, N);
    const long double value = partial.value + 0.5L * (tail.lo + tail.hi);
    const long double rounding = 4.0L * kEpsL * partial.magnitude;
    DirectSum out;
    out.value = static_cast<double>(value);
    out.error_bound = static_cast<double>(0.5L * (tail.hi - tail.lo) + rounding) +
                      kEps * std::fabs(out.value);
    out.terms = N;
    return out;
}

// Alternating families: a_n = |summand| is completely monotone in n (a product of
// the completely monotone factors 1/n, 1/(n+1), 1/(n+2), or 1/n + 1/(n+1)).
// Averaging the partial sums S_N..S_{N+k} with binomial weights leaves an error of
// at most 2^-k (Delta^k a)_{N+1}, Delta the backward-looking difference a_n - a_{n+1}.
constexpr int kAveragingLevels = 4;

long double kth_difference(Family family, int p, std::int64_t n) {
    long double acc = 0.0L;
    long double c = 1.0L;
    for (int i = 0; i <= kAveragingLevels; ++i) {
        acc += (i % 2 == 0 ? c : -c) * direct_term(family, p, n + i);
        c = c * (kAveragingLevels - i) / (i + 1);
    }
    return acc;
}

template <class Summer>
DirectSum alternating_direct(Family family, int p, double abs_tol, Summer&& summer) {
    constexpr int k = kAveragingLevels;
    const long double target = 0.5L * abs_tol;
    auto bound = [&](std::int64_t N) {
        const long double a = direct_term(family, p, N + 1);
        return std::ldexp(std::fabs(kth_difference(family, p, N + 1)) + 64.0L * kEpsL * a, -k);
    };
    std::int64_t hi = 1;
    while (bound(hi) > target) {
        hi *= 2;
        if (hi > kMaxTerms) throw unsupported_range("direct sum needs more than 2^34 terms");
    }
    std::int64_t lo = hi / 2;
    while (lo >= 1 && hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (bound(mid) > target ? lo : hi) = mid;
    }
    const std::int64_t N = hi;

    // Precondition of the averaging bound, checked on the window it relies on.
    const long double d0 = kth_difference(family, p, N + 1);
    const long double d1 = kth_difference(family, p, N + 2);
    if (!direct_terms_decrease(family, p, N + 1, N + k + 2) || !(d0 > 0.0L) || !(d1 < d0))
        throw unsupported_range("alternating summands not decreasing at truncation index " +
                                std::to_string(N));

    auto signed_term = [&](std::int64_t n) {
        const long double a = direct_term(family, p, n);
        return (n % 2 == 1) ? a : -a;
    };
    const auto head = summer(std::int64_t{1}, N, signed_term);
    long double partial = head.value;
    long double averaged = partial;  // weight C(k,0)
    long double weight = 1.0L;
    for (int i = 1; i <= k; ++i) {
        partial += signed_term(N + i);
        weight = weight * (k - i + 1) / i;
        averaged += weight * partial;
    }
    averaged = std::ldexp(averaged, -k);

    DirectSum out;
    out.value = static_cast<double>(averaged);
    out.error_bound = static_cast<double>(bound(N) + 4.0L * kEpsL * head.magnitude) +
                      kEps * std::fabs(out.value);
    out.terms = N + k;
    return out;
}

template <class Summer>
DirectSum direct_with(Family family, int p, double abs_tol, Summer&& summer) {
    require_order(p);
    if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
    if (traits(family).alternating_definition) return alternating_direct(family, p, abs_tol, summer);
    return monotone_direct(family, p, abs_tol, summer);
}

struct ParallelSummer {
    template <class Term>
    kernels::RangeSum operator()(std::int64_t first, std::int64_t last, Term&& term) const {
        return kernels::sum_range(first, last, term);
    }
};

struct SerialSummer {
    template <class Term>
    kernels::RangeSum operator()(std::int64_t first, std::int64_t last, Term&& term) const {
        return kernels::sum_range_serial(first, last, term);
    }
};

}  // namespace

DirectSum coeff_direct(Family family, int p, double abs_tol) {
    return direct_with(family, p, abs_tol, ParallelSummer{});
}

DirectSum coeff_direct_serial(Family family, int p, double abs_tol) {
    return direct_with(family, p, abs_tol, SerialSummer{});
}

CoefficientTable closed_form_table(Family family, const EvenZetaCache& cache, int order_max) {
    if (order_max < 1) throw std::invalid_argument("order_max must be >= 1");
    std::vector<double> values(order_max);
    double accuracy = 0.0;
    for (int p = 1; p <= order_max; ++p) {
        values[p - 1] = coeff_closed(family, p, cache);
        accuracy = std::max(accuracy, 0.5 * kEps * values[p - 1]);
    }
    return CoefficientTable(family, std::move(values), CoefficientMethod::ClosedForm, accuracy);
}

CoefficientTable direct_sum_table(Family family, double abs_tol, int order_max) {
    if (order_max < 1) throw std::invalid_argument("order_max must be >= 1");
    std::vector<double> values(order_max);
    double accuracy = 0.0;
    for (int p = 1; p <= order_max; ++p) {
        const auto d = coeff_direct(family, p, abs_tol);
        values[p - 1] = d.value;
        accuracy = std::max(accuracy, d.error_bound);
    }
    return CoefficientTable(family, std::move(values), CoefficientMethod::DirectSum, accuracy);
}

// --- remainder constants ---------------------------------------------------------

double remainder_constant(Family family, int index, const CoefficientTable& table) {
    if (family != Family::Tan && family != Family::Sec)
        throw std::invalid_argument("remainder constants exist for tan and sec only");
    if (table.family() != family) throw std::invalid_argument("table family mismatch");
    if (index < 1) throw std::invalid_argument("remainder constant index must be >= 1");
    if (index > table.order_max())
        throw std::invalid_argument("table must cover order " + std::to_string(index));
    if (table.accuracy() > 1e-13)
        throw std::invalid_argument("table accuracy must be <= 1e-13");

    kernels::CompensatedSum partial;
    partial.add(1.0L);
    for (int k = 0; k <= index - 2; ++k) {
        const long double a = std::ldexp(static_cast<long double>(table.at(k + 1)), -2 * (k + 1));
        const long double signed_a = (k % 2 == 0) ? a : -a;
        partial.add(family == Family::Tan ? signed_a : -signed_a);
    }
    long double value;
    if (family == Family::Tan) {
        value = kPiL * kPiL / 8.0L - partial.value();
        if (index % 2 == 0) value = -value;
    } else {
        value = kPiL / 4.0L - partial.value();
        if (index % 2 == 1) value = -value;
    }
    const double result = static_cast<double>(value);
    const double ceiling = table.scaled(index - 1);
    if (result <= -1e-12 || result >= ceiling + 1e-12)
        throw std::out_of_range(std::string(family == Family::Tan ? "H_" : "J_") +
                                std::to_string(index) + " = " + std::to_string(result) +
                                " outside (0, coeff/4^j): coefficient table defect");
    return result;
}

double RemainderConstants::at(int index) const {
    if (index < 1 || index > count())
        throw std::out_of_range("remainder constant " + std::to_string(index) + " not stored");
    return values_[index - 1];
}

RemainderConstants remainder_constants(const CoefficientTable& table) {
    std::vector<double> values(table.order_max());
    for (int j = 1; j <= table.order_max(); ++j)
        values[j - 1] = remainder_constant(table.family(), j, table);
    return RemainderConstants(table.family(), std::move(values));
}

}  // namespace jordan
