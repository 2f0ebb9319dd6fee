#include "jordan/envelopes.hpp"

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "jordan/error.hpp"
#include "jordan/kernels.hpp"

namespace jordan {

namespace {

void require_open_unit(double x) {
    if (!(std::fabs(x) < 1.0))
        throw domain_error("x must satisfy |x| < 1, got " + std::to_string(x));
}

// sin(pi t) and cos(pi t) for t in [0, 1], reducing against the nearest zero with
// exact subtractions so relative accuracy survives next to the poles.
double sin_pi(double t) {
    if (t > 0.5) t = 1.0 - t;
    return std::sin(kPi * t);
}

double cos_pi(double t) {
    if (t < 0.25) return std::cos(kPi * t);
    return std::sin(kPi * (0.5 - t));
}

double one_minus_square(double x) { return (1.0 - x) * (1.0 + x); }

// sum_{k<m} (-1)^k a_k u^k + (-1)^m last u^m, Horner in u.
double inner_series(const CoefficientTable& table, int m, double last, double u) {
    double acc = (m % 2 == 0) ? last : -last;
    for (int k = m - 1; k >= 0; --k) {
        const double a = table.scaled(k);
        acc = acc * u + ((k % 2 == 0) ? a : -a);
    }
    return acc;
}

void require_order_in_table(int m, const CoefficientTable& table) {
    if (m < 0) throw std::invalid_argument("order must be >= 0");
    if (m + 1 > table.order_max())
        throw std::invalid_argument("order " + std::to_string(m) + " needs coefficient " +
                                    std::to_string(m + 1) + ", table stops at " +
                                    std::to_string(table.order_max()));
}

double prefactor(Family family, double x) {
    switch (family) {
        case Family::Tan: return 8.0 / (kPi * kPi);
        case Family::Sec: return 4.0 / kPi;
        default: return 2.0 * x * x;
    }
}

// The bracket [1/u + sign * inner] that the family prefactor multiplies.
double bracket(Family family, double u, double inner) {
    return 1.0 / u + traits(family).inner_sign * inner;
}

}  // namespace

double reference_value(Family family, double x) {
    require_open_unit(x);
    const double y = std::fabs(x);
    switch (family) {
        case Family::Tan: {
            if (y == 0.0) return 1.0;
            const double half = 0.5 * y;
            return sin_pi(half) / cos_pi(half) / (kPi * half);
        }
        case Family::Sec: return 1.0 / cos_pi(0.5 * y);
        case Family::Cot: {
            if (y == 0.0) return 0.0;
            const double c = y <= 0.5 ? cos_pi(y) : -cos_pi(1.0 - y);
            return 1.0 - kPi * y * c / sin_pi(y);
        }
        case Family::Cosec: {
            if (y == 0.0) return 0.0;
            return kPi * y / sin_pi(y) - 1.0;
        }
    }
    return 0.0;
}

double partial_expansion(Family family, double x, int m, const CoefficientTable& table) {
    require_open_unit(x);
    require_order_in_table(m, table);
    if (table.family() != family) throw std::invalid_argument("table family mismatch");
    const double u = one_minus_square(x);
    const double inner = inner_series(table, m, table.scaled(m), u);
    return prefactor(family, x) * bracket(family, u, inner);
}

Side plain_side(Family family, int m) {
    const int s = traits(family).inner_sign * ((m % 2 == 0) ? 1 : -1);
    return s > 0 ? Side::Upper : Side::Lower;
}

bool inner_terms_decrease(const CoefficientTable& table, int m) {
    for (int k = m; k + 1 < table.order_max(); ++k)
        if (!(table.scaled(k + 1) < table.scaled(k))) return false;
    return true;
}

BoundValue bound(const EnvelopeQuery& query, double x, const CoefficientTable& table,
                 const RemainderConstants* constants) {
    const Family family = query.family;
    if (query.sharpened && !traits(family).sharpenable)
        throw unsupported_option("sharpened bounds are defined for tan and sec only");
    require_open_unit(x);
    require_order_in_table(query.order, table);
    if (table.family() != family) throw std::invalid_argument("table family mismatch");

    const int m = query.order;
    double last = 0.0;
    if (query.side == plain_side(family, m)) {
        last = table.scaled(m);
    } else if (query.sharpened) {
        if (constants == nullptr || constants->family() != family)
            throw std::invalid_argument("sharpened bound needs the family's remainder constants");
        last = constants->at(m + 1);
    }

    const double u = one_minus_square(x);
    BoundValue out;
    out.value = prefactor(family, x) * bracket(family, u, inner_series(table, m, last, u));
    out.certified = traits(family).sharpenable || inner_terms_decrease(table, m);
    return out;
}

double bound_width(Family family, int order, bool sharpened, double x,
                   const CoefficientTable& table, const RemainderConstants* constants) {
    if (sharpened && !traits(family).sharpenable)
        throw unsupported_option("sharpened bounds are defined for tan and sec only");
    require_open_unit(x);
    require_order_in_table(order, table);
    if (table.family() != family) throw std::invalid_argument("table family mismatch");
    double other = 0.0;
    if (sharpened) {
        if (constants == nullptr || constants->family() != family)
            throw std::invalid_argument("sharpened bound needs the family's remainder constants");
        other = constants->at(order + 1);
    }
    const double u = one_minus_square(x);
    return std::fabs(prefactor(family, x)) * std::fabs(table.scaled(order) - other) *
           std::pow(u, order);
}

FamilyEnvelope::FamilyEnvelope(CoefficientTable table) : table_(std::move(table)) {
    if (traits(table_.family()).sharpenable) {
        constants_ = remainder_constants(table_);
        has_constants_ = true;
    }
}

FamilyEnvelope::FamilyEnvelope(Family family, const EvenZetaCache& cache, int order_max)
    : FamilyEnvelope(closed_form_table(family, cache, order_max)) {}

BoundValue FamilyEnvelope::bound(const EnvelopeQuery& query, double x) const {
    return jordan::bound(query, x, table_, constants());
}

double FamilyEnvelope::width(int order, bool sharpened, double x) const {
    return bound_width(family(), order, sharpened, x, table_, constants());
}

double remainder_magnitude_bound(double x, int m) {
    require_open_unit(x);
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    return std::pow(one_minus_square(x), m + 1) * std::ldexp(1.0, -(3 * m + 5));
}

double taylor_partial(double x, int m, const EvenZetaCache& cache) {
    require_open_unit(x);
    if (m < 1) throw std::invalid_argument("Taylor truncation needs m >= 1");
    if (m + 1 > cache.max_index())
        throw std::invalid_argument("zeta cache must reach lambda(" + std::to_string(2 * m + 2) + ")");
    const double x2 = x * x;
    double acc = 0.0;
    for (int k = m; k >= 1; --k) acc = acc * x2 + cache.lambda(k + 1);
    return 1.0 + 8.0 / (kPi * kPi) * x2 * acc;
}

std::vector<CrossoverRow> crossover_report(int m, std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("crossover grid is empty");
    if (m < 1 || m + 1 > kMaxZetaIndex)
        throw std::invalid_argument("crossover truncation must lie in [1, " +
                                    std::to_string(kMaxZetaIndex - 1) + "]");
    for (double x : xs)
        if (!(x > 0.0 && x < 1.0))
            throw domain_error("crossover grid must lie inside (0, 1), got " + std::to_string(x));

    const EvenZetaCache cache(m + 1);
    const WideReal pi = wide_pi();
    const WideReal scale = WideReal(8) / (pi * pi);
    std::vector<WideReal> laurent(m + 1), taylor(m + 1);
    for (int k = 0; k <= m; ++k) {
        laurent[k] = coeff_closed_wide(Family::Tan, k + 1, cache) / pow(WideReal(4), k + 1);
        if (k % 2 == 1) laurent[k] = -laurent[k];
    }
    for (int k = 1; k <= m; ++k) taylor[k] = cache.lambda_wide(k + 1);

    std::vector<CrossoverRow> rows;
    rows.reserve(xs.size());
    for (double xd : xs) {
        const WideReal x = xd;
        const WideReal u = 1 - x * x;
        const WideReal half_angle = pi * x / 2;
        const WideReal reference = tan(half_angle) / half_angle;

        WideReal inner = 0;
        for (int k = m; k >= 0; --k) inner = inner * u + laurent[k];
        const WideReal laurent_value = scale * (1 / u + inner);

        WideReal series = 0;
        const WideReal x2 = x * x;
        for (int k = m; k >= 1; --k) series = series * x2 + taylor[k];
        const WideReal taylor_value = 1 + scale * x2 * series;

        CrossoverRow row;
        row.x = xd;
        row.laurent_remainder = static_cast<double>(abs(reference - laurent_value));
        row.taylor_remainder = static_cast<double>(abs(reference - taylor_value));
        row.winner = row.laurent_remainder < row.taylor_remainder ? "laurent" : "taylor";
        rows.push_back(std::move(row));
    }
    return rows;
}

double shifted_expansion(double x, double r, int m, const ShiftedTable& table) {
    if (!(r > 0.0 && r < 1.0)) throw domain_error("center r must lie in (0, 1)");
    const double lo = 2.0 * r * r - 1.0;
    const double x2 = x * x;
    if (!(x2 > lo && x2 < 1.0))
        throw window_error("shifted expansion valid for " + std::to_string(lo) + " < x^2 < 1, got x^2 = " +
                               std::to_string(x2),
                           lo, 1.0);
    if (table.r != r) throw std::invalid_argument("shifted table was built for another center");
    if (m < 0 || m + 1 > table.order_max())
        throw std::invalid_argument("shifted table does not reach order " + std::to_string(m + 1));
    const double z = (r - x) * (r + x);
    double acc = 0.0;
    for (int k = m; k >= 0; --k) {
        const double a = std::ldexp(table.at(k + 1), -2 * (k + 1));
        acc = acc * z + ((k % 2 == 0) ? a : -a);
    }
    return 8.0 / (kPi * kPi) * acc;
}

namespace {

// Normalized amount by which the query's side is crossed (<= 0 when it holds).
double side_excess(const FamilyEnvelope& env, const EnvelopeQuery& query, double x) {
    const Family family = env.family();
    double ref;
    double value;
    if (!traits(family).constant_prefactor && x == 0.0) {
        // Both sides vanish with 2x^2; compare the inner brackets at u = 1.
        ref = family == Family::Cot ? kPi * kPi / 6.0 : kPi * kPi / 12.0;
        const bool plain = query.side == plain_side(family, query.order);
        const double last = plain ? env.table().scaled(query.order) : 0.0;
        value = bracket(family, 1.0, inner_series(env.table(), query.order, last, 1.0));
    } else {
        ref = reference_value(family, x);
        value = env.bound(query, x).value;
    }
    const double excess = query.side == Side::Upper ? ref - value : value - ref;
    return excess / std::max(1.0, std::fabs(ref));
}

SweepStats reduce(const std::vector<double>& excess, std::span<const double> xs, double slack) {
    SweepStats stats;
    stats.points = xs.size();
    stats.worst_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < excess.size(); ++i) {
        if (excess[i] > slack) ++stats.violations;
        if (excess[i] > stats.worst_excess) {
            stats.worst_excess = excess[i];
            stats.worst_x = xs[i];
        }
    }
    return stats;
}

}  // namespace

SweepStats sweep_bracketing(const FamilyEnvelope& env, const EnvelopeQuery& query,
                            std::span<const double> xs, double slack) {
    auto excess = kernels::map(xs, [&](double x) { return side_excess(env, query, x); });
    return reduce(excess, xs, slack);
}

SweepStats sweep_bracketing_serial(const FamilyEnvelope& env, const EnvelopeQuery& query,
                                   std::span<const double> xs, double slack) {
    auto excess = kernels::map_serial(xs, [&](double x) { return side_excess(env, query, x); });
    return reduce(excess, xs, slack);
}

}  // namespace jordan
