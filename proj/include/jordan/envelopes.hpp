#pragma once

#include <span>
#include <string>
#include <vector>

#include "jordan/coefficients.hpp"
#include "jordan/family.hpp"
#include "jordan/shifted.hpp"
#include "jordan/special_values.hpp"

namespace jordan {

enum class Side { Lower, Upper };

constexpr std::string_view to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

// Order m keeps inner terms k = 0..m. With u = 1 - x^2 the exact inner series is
//   sum_{k<m} (-1)^k a_k u^k + (-1)^m c(x) u^m,   K_{m+1} <= c(x) <= a_m,
// (K = H for tan, J for sec, 0 for cot/cosec). Setting c = a_m gives the plain
// truncation; the other side takes c = K_{m+1} when sharpened, otherwise c = 0.
struct EnvelopeQuery {
    Family family = Family::Tan;
    int order = 0;
    Side side = Side::Upper;
    bool sharpened = false;
};

struct BoundValue {
    double value = 0.0;
    double domain_lo = -1.0;  // open interval of validity
    double domain_hi = 1.0;
    bool certified = false;
};

// Ground truth via accurate sin/cos of pi-multiples:
//   tan(pi x/2)/(pi x/2), sec(pi x/2), 1 - pi x cot(pi x), pi x cosec(pi x) - 1.
double reference_value(Family family, double x);

double partial_expansion(Family family, double x, int m, const CoefficientTable& table);

// Side of the plain truncation at order m.
Side plain_side(Family family, int m);

// constants may be null when sharpened is not requested.
BoundValue bound(const EnvelopeQuery& query, double x, const CoefficientTable& table,
                 const RemainderConstants* constants);

// Inner-series coefficients a_k decrease strictly for k = m .. order_max-1.
bool inner_terms_decrease(const CoefficientTable& table, int m);

// Upper - Lower at order m, evaluated as prefactor * |a_m - c| * u^m rather than by
// subtracting the two bounds (which cancels badly near the poles).
double bound_width(Family family, int order, bool sharpened, double x,
                   const CoefficientTable& table, const RemainderConstants* constants);

// Owns the closed-form table and (tan/sec) remainder constants of one family.
class FamilyEnvelope {
  public:
    explicit FamilyEnvelope(CoefficientTable table);
    FamilyEnvelope(Family family, const EvenZetaCache& cache, int order_max = kDefaultOrderMax);

    Family family() const { return table_.family(); }
    const CoefficientTable& table() const { return table_; }
    const RemainderConstants* constants() const { return has_constants_ ? &constants_ : nullptr; }
    // Highest order a bound can be evaluated at.
    int max_order() const { return table_.order_max() - 1; }

    double partial(double x, int m) const { return partial_expansion(family(), x, m, table_); }
    BoundValue bound(const EnvelopeQuery& query, double x) const;
    double width(int order, bool sharpened, double x) const;

  private:
    CoefficientTable table_;
    RemainderConstants constants_;
    bool has_constants_ = false;
};

// |R_{m+1}(x)| bound for the tan expansion: (1-x^2)^{m+1} / 2^{3m+5}.
double remainder_magnitude_bound(double x, int m);

// 1 + (8/pi^2) sum_{k=1}^{m} lambda(2k+2) x^{2k}.
double taylor_partial(double x, int m, const EvenZetaCache& cache);

struct CrossoverRow {
    double x = 0.0;
    double laurent_remainder = 0.0;
    double taylor_remainder = 0.0;
    std::string winner;  // "laurent" or "taylor"
};

// Actual remainders of both tan expansions after truncation m, computed in wide
// precision against a wide-precision reference.
std::vector<CrossoverRow> crossover_report(int m, std::span<const double> xs);

// (8/pi^2) sum_{k=0}^{m} (-1)^k T~_{k+1}(r)/4^{k+1} (r^2 - x^2)^k, valid for 2r^2-1 < x^2 < 1.
double shifted_expansion(double x, double r, int m, const ShiftedTable& table);

struct SweepStats {
    std::size_t points = 0;
    std::size_t violations = 0;
    double worst_excess = 0.0;  // largest normalized amount by which the side was crossed
    double worst_x = 0.0;
};

// Checks the side obligation on every grid point with slack 1e-13 max(1, |ref|).
// Cot/Cosec at x = 0 compare the inner-series bracket instead of the (vanishing) value.
SweepStats sweep_bracketing(const FamilyEnvelope& env, const EnvelopeQuery& query,
                            std::span<const double> xs, double slack = 1e-13);
SweepStats sweep_bracketing_serial(const FamilyEnvelope& env, const EnvelopeQuery& query,
                                   std::span<const double> xs, double slack = 1e-13);

}  // namespace jordan
