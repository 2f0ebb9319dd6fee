#include "jordan/shifted.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "jordan/error.hpp"
#include "jordan/kernels.hpp"
#include "jordan/numeric.hpp"

namespace jordan {

namespace {

void require_center(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw domain_error("shifted coefficients need 0 < r < 1 (undefined at r = 1), got r = " +
                           std::to_string(r));
}

double shifted_tolerance(double value) { return std::max(1e-9 * std::fabs(value), 1e-12); }

}  // namespace

double ShiftedTable::at(int p) const {
    if (p < 1 || p > order_max()) throw std::out_of_range("shifted order outside table");
    return values[p - 1];
}

double shifted_direct(double r, int p, double abs_tol) {
    require_center(r);
    if (p < 1) throw std::invalid_argument("order must be >= 1");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");

    const long double a = (1.0L - r) / 2.0L;
    const long double b = (1.0L + r) / 2.0L;
    auto term = [&](std::int64_t n) {
        const long double q = (n + a) * (n + b);
        return 1.0L / std::pow(q, p);
    };
    // (n+a)(n+b) = n^2 + n + ab lies in [n^2, (n+1/2)^2]; summand log-convex, so the
    // tail over n > N is bracketed by the integrals of (x+1/2)^{-2p} from N+1 and of
    // x^{-2p} from N+1/2.
    const long double e = 1.0L - 2.0L * p;
    const long double d = 2.0L * p - 1.0L;
    auto tail = [&](std::int64_t N) {
        const long double nl = static_cast<long double>(N);
        return std::pair{std::pow(nl + 1.5L, e) / d, std::pow(nl + 0.5L, e) / d};
    };
    const long double target = 0.5L * abs_tol;
    std::int64_t hi = 1;
    auto width = [&](std::int64_t N) {
        const auto [lo, up] = tail(N);
        return 0.5L * (up - lo);
    };
    while (width(hi) > target) {
        hi *= 2;
        if (hi > (std::int64_t{1} << 34)) throw unsupported_range("shifted direct sum too long");
    }
    std::int64_t lo = hi / 2;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (width(mid) > target ? lo : hi) = mid;
    }
    const auto partial = kernels::sum_range(0, hi, term);
    const auto [tlo, thi] = tail(hi);
    return static_cast<double>(partial.value + 0.5L * (tlo + thi));
}

std::vector<double> shifted_recursion_values(double r, int order_max) {
    require_center(r);
    if (order_max < 1) throw std::invalid_argument("order_max must be >= 1");
    const long double rl = r;
    const long double r2 = rl * rl;
    const long double pi2 = kPiL * kPiL;
    const long double half_angle = kPiL * rl / 2.0L;
    std::vector<long double> t(order_max + 1);  // t[p] = T~_p
    t[1] = pi2 / 2.0L * std::tan(half_angle) / half_angle;
    if (order_max >= 2) t[2] = (pi2 - 2.0L * t[1] + r2 * t[1] * t[1]) / r2;
    for (int k = 1; k + 2 <= order_max; ++k) {
        long double quad = 0.0L;
        for (int j = 0; j <= k; ++j) quad += t[j + 1] * t[k - j + 1];
        long double cross = 0.0L;
        for (int j = 0; j <= k - 1; ++j) cross += t[j + 1] * t[k - j];
        t[k + 2] = (-(4.0L * k + 2.0L) * t[k + 1] + r2 * quad + 4.0L * cross) / ((k + 1.0L) * r2);
    }
    return {t.begin() + 1, t.end()};
}

ShiftedTable shifted_direct_table(double r, int order_max) {
    require_center(r);
    if (order_max < 1) throw std::invalid_argument("order_max must be >= 1");
    ShiftedTable table;
    table.r = r;
    table.method = ShiftedMethod::DirectSum;
    table.requested_order = order_max;
    for (int p = 1; p <= order_max; ++p) {
        // First pass fixes the magnitude, second pass meets the relative target.
        const double rough = shifted_direct(r, p, 1e-6);
        table.values.push_back(shifted_direct(r, p, 0.01 * shifted_tolerance(rough)));
    }
    return table;
}

ShiftedTable shifted_recursive(double r, int order_max) {
    const auto raw = shifted_recursion_values(r, order_max);
    ShiftedTable table;
    table.r = r;
    table.method = ShiftedMethod::Recursion;
    table.requested_order = order_max;
    for (int p = 1; p <= order_max; ++p) {
        const double rec = raw[p - 1];
        const double rough = shifted_direct(r, p, 1e-6);
        const double direct = shifted_direct(r, p, 0.01 * shifted_tolerance(rough));
        if (!std::isfinite(rec) || std::fabs(rec - direct) > shifted_tolerance(direct)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "recursion disagrees with direct sum at order " << p << " (r = " << r
                << "): recursion " << rec << ", direct " << direct << "; table truncated at order "
                << p - 1;
            table.truncated = true;
            table.diagnostic = msg.str();
            break;
        }
        table.values.push_back(rec);
    }
    return table;
}

}  // namespace jordan
