#include "jordan/verify.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "jordan/envelopes.hpp"
#include "jordan/kernels.hpp"

namespace jordan {

double convolution_residual(const CoefficientTable& tan, const CoefficientTable& sec, int n) {
    double sum = tan.at(n + 1);
    for (int k = 0; k <= n - 1; ++k) sum += sec.at(k + 1) * tan.at(n - k);
    return (n + 1) * sec.at(n + 1) - sum;
}

double convolution_residual_unweighted(const CoefficientTable& tan, const CoefficientTable& sec,
                                       int n) {
    double sum = tan.at(n + 1);
    for (int k = 0; k <= n - 1; ++k) sum += tan.at(k + 1) * sec.at(n - k);
    return sec.at(n + 1) - sum;
}

namespace {

double cd_residual_weighted(const CoefficientTable& cot, const CoefficientTable& cosec, int n,
                            double last_weight) {
    double lhs = n * cosec.at(n) + 4.0 * n * cosec.at(n - 1);
    double rhs = cot.at(n) + 2.0 * cot.at(n - 1);
    for (int k = 1; k <= n - 1; ++k) rhs += cosec.at(k) * cot.at(n - k);
    double second = 0.0;
    for (int k = 1; k <= n - 2; ++k) second += cosec.at(k) * cot.at(n - k - 1);
    return lhs - rhs - last_weight * second;
}

}  // namespace

double cd_residual(const CoefficientTable& cot, const CoefficientTable& cosec, int n) {
    return cd_residual_weighted(cot, cosec, n, 4.0);
}

double cd_residual_unit_weight(const CoefficientTable& cot, const CoefficientTable& cosec, int n) {
    return cd_residual_weighted(cot, cosec, n, 1.0);
}

double sum_identity_gap(const CoefficientTable& tan, int K) {
    kernels::CompensatedSum acc;
    acc.add(1.0L);
    for (int k = 0; k <= K; ++k) {
        const long double a = std::ldexp(static_cast<long double>(tan.at(k + 1)), -2 * (k + 1));
        acc.add(k % 2 == 0 ? a : -a);
    }
    return static_cast<double>(std::fabs(kPiL * kPiL / 8.0L - acc.value()));
}

bool VerifyReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

namespace {

constexpr int kIdentityMax = 15;

class Recorder {
  public:
    Recorder(Family family, std::string name) {
        result_.family = family;
        result_.name = std::move(name);
        result_.worst = -std::numeric_limits<double>::infinity();
    }
    // excess > 0 means violated.
    void observe(double excess) {
        ++result_.checked;
        if (!(excess <= 0.0)) ++result_.failed;
        if (std::isnan(excess) || excess > result_.worst) result_.worst = excess;
    }
    void tally(long checked, long failed, double worst) {
        result_.checked += checked;
        result_.failed += failed;
        if (checked > 0 && (std::isnan(worst) || worst > result_.worst)) result_.worst = worst;
    }
    void fail(const std::string& note) {
        ++result_.checked;
        ++result_.failed;
        result_.note = note;
    }
    CheckResult done() {
        if (result_.checked == 0 || std::isinf(result_.worst)) result_.worst = 0.0;
        return result_;
    }

  private:
    CheckResult result_;
};

CoefficientTable table_for(Family family, const EvenZetaCache& cache, const VerifyOptions& opt) {
    auto table = closed_form_table(family, cache);
    if (opt.fault && opt.fault->family == family)
        table = table.corrupted(opt.fault->order, opt.fault->factor);
    return table;
}

void coefficient_checks(Family family, const CoefficientTable& table, const EvenZetaCache& cache,
                        const VerifyOptions& opt, std::vector<CheckResult>& out) {
    {
        Recorder rec(family, "closed-vs-direct");
        for (int p = 1; p <= table.order_max(); ++p) {
            const auto d = coeff_direct(family, p, 1e-14);
            const double tol = std::max(1e-12, 1e-12 * std::fabs(d.value));
            rec.observe(std::fabs(table.at(p) - d.value) - tol);
        }
        out.push_back(rec.done());
    }
    {
        Recorder rec(family, "positivity");
        for (int p = 1; p <= table.order_max(); ++p) rec.observe(-table.at(p));
        out.push_back(rec.done());
    }
    if (family == Family::Tan) {
        Recorder sandwich(family, "tan-sandwich");
        for (int p = 1; p <= table.order_max(); ++p) {
            const double v = table.at(p);
            sandwich.observe(std::ldexp(1.0, -p) - v);
            // T_1 = 1 sits on the upper edge; the strict upper bound starts at p = 2.
            const double upper = v - std::ldexp(1.0, 1 - p);
            if (p == 1 || upper < 0.0)
                sandwich.observe(upper);
            else
                sandwich.observe(std::max(upper, std::numeric_limits<double>::min()));
        }
        out.push_back(sandwich.done());

        Recorder sum(family, "sum-identity");
        for (int K = 0; K <= kIdentityMax; ++K)
            sum.observe(sum_identity_gap(table, K) - table.scaled(K + 1));
        out.push_back(sum.done());
    }
    if (traits(family).sharpenable) {
        Recorder rc(family, "remainder-constants");
        for (int j = 1; j <= kIdentityMax; ++j) {
            try {
                const double value = remainder_constant(family, j, table);
                rc.observe(std::max(-value, value - table.scaled(j - 1)));
            } catch (const std::exception& e) {
                rc.fail(e.what());
            }
        }
        out.push_back(rc.done());
    }
    if (family == Family::Sec) {
        const auto tan = table_for(Family::Tan, cache, opt);
        Recorder rec(family, "sec-tan-convolution");
        for (int n = 0; n <= kIdentityMax; ++n)
            rec.observe(std::fabs(convolution_residual(tan, table, n)) - 1e-12);
        out.push_back(rec.done());
    }
    if (family == Family::Cosec) {
        const auto cot = table_for(Family::Cot, cache, opt);
        Recorder rec(family, "cot-cosec-recurrence");
        for (int n = 2; n <= kIdentityMax; ++n)
            rec.observe(std::fabs(cd_residual(cot, table, n)) -
                        1e-9 * std::max(1.0, std::fabs(cot.at(n))));
        out.push_back(rec.done());
    }
}

void envelope_checks(Family family, const CoefficientTable& table, const VerifyOptions& opt,
                     std::vector<CheckResult>& out) {
    std::optional<FamilyEnvelope> env;
    try {
        env.emplace(table);
    } catch (const std::exception& e) {
        Recorder rec(family, "bracketing");
        rec.fail(std::string("envelope construction failed: ") + e.what());
        out.push_back(rec.done());
        return;
    }
    const auto xs = kernels::linspace(-0.9998, 0.9998, opt.samples);
    const int hi = std::min(opt.order_hi, env->max_order() - 1);

    Recorder bracket(family, "bracketing");
    Recorder certified(family, "certification");
    for (int m = opt.order_lo; m <= hi; ++m) {
        for (Side side : {Side::Lower, Side::Upper}) {
            for (bool sharp : {false, true}) {
                if (sharp && !traits(family).sharpenable) continue;
                const EnvelopeQuery q{family, m, side, sharp};
                const auto stats = sweep_bracketing(*env, q, xs);
                bracket.tally(static_cast<long>(stats.points), static_cast<long>(stats.violations),
                              stats.worst_excess);
                certified.observe(env->bound(q, 0.5).certified ? -1.0 : 1.0);
            }
        }
    }
    out.push_back(bracket.done());
    out.push_back(certified.done());

    if (family == Family::Tan) {
        // Pair bounding R_{m+1}: order m+1, width <= (8/pi^2)(1-x^2)^{m+1}/2^{3m+8}.
        Recorder gap(family, "gap-bound");
        Recorder nest(family, "monotone-refinement");
        for (int m = opt.order_lo; m <= hi; ++m) {
            const int order = m + 1;
            const bool can_nest = m + 2 <= env->max_order();
            auto gaps = kernels::map(std::span<const double>(xs), [&](double x) {
                const double width = env->width(order, true, x);
                const double u = (1.0 - x) * (1.0 + x);
                const double limit =
                    8.0 / (kPi * kPi) * std::pow(u, m + 1) * std::ldexp(1.0, -(3 * m + 8));
                return width - limit * (1.0 + 1e-10);
            });
            for (double g : gaps) gap.observe(g);
            if (!can_nest) continue;
            auto nests = kernels::map(std::span<const double>(xs), [&](double x) {
                const double u0 = env->bound({family, m, Side::Upper, false}, x).value;
                const double u2 = env->bound({family, m + 2, Side::Upper, false}, x).value;
                const double l0 = env->bound({family, m, Side::Lower, false}, x).value;
                const double l2 = env->bound({family, m + 2, Side::Lower, false}, x).value;
                const double scale = std::max(1.0, std::fabs(u0)) * 1e-13;
                return std::max(u2 - u0, l0 - l2) - scale;
            });
            for (double v : nests) nest.observe(v);
        }
        out.push_back(gap.done());
        out.push_back(nest.done());
    }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.samples < 2) throw std::invalid_argument("samples must be >= 2");
    if (options.order_lo < 0 || options.order_hi < options.order_lo)
        throw std::invalid_argument("order range must satisfy 0 <= lo <= hi");
    if (options.order_hi > kDefaultOrderMax - 3)
        throw std::invalid_argument("order range must stay <= " + std::to_string(kDefaultOrderMax - 3));
    const EvenZetaCache cache(kDefaultOrderMax);
    VerifyReport report;
    for (Family family : options.families) {
        const auto table = table_for(family, cache, options);
        coefficient_checks(family, table, cache, options, report.checks);
        envelope_checks(family, table, options, report.checks);
    }
    return report;
}

}  // namespace jordan
