#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jordan/bessel.hpp"
#include "jordan/coefficients.hpp"
#include "jordan/envelopes.hpp"
#include "jordan/error.hpp"
#include "jordan/kernels.hpp"
#include "jordan/shifted.hpp"
#include "jordan/verify.hpp"
#include "output.hpp"

namespace jordan::cli {

namespace {

// Raised for argument problems found after CLI11 parsing.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family family_arg(const std::string& name) {
    auto f = parse_family(name);
    if (!f) throw usage_error("unknown family '" + name + "' (expected tan, sec, cot or cosec)");
    return *f;
}

std::vector<Family> families_arg(const std::vector<std::string>& names) {
    std::vector<Family> out;
    for (const auto& n : names) out.push_back(family_arg(n));
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw usage_error("bad integer '" + s + "' in " + what);
    return v;
}

// "a..b" inclusive, or a single "a".
std::pair<int, int> range_arg(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(s, "--orders");
        return {v, v};
    }
    const int lo = parse_int(s.substr(0, dots), "--orders");
    const int hi = parse_int(s.substr(dots + 2), "--orders");
    if (hi < lo) throw usage_error("--orders range " + s + " is empty");
    return {lo, hi};
}

Fault fault_arg(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw usage_error("--inject-fault expects family:p:factor");
    Fault f;
    f.family = family_arg(parts[0]);
    f.order = parse_int(parts[1], "--inject-fault");
    try {
        f.factor = std::stod(parts[2]);
    } catch (const std::exception&) {
        throw usage_error("bad factor in --inject-fault");
    }
    return f;
}

struct Common {
    std::string format = "csv";
    int precision = 17;
    std::string out;

    OutputSpec spec() const {
        return {format == "json" ? Format::Json : Format::Csv, precision, out};
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--precision", c.precision, "significant digits")
        ->check(CLI::Range(6, 17))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "write to file instead of standard output");
}

// Grid from an explicit --x list, else from --xmin/--xmax/--samples.
std::vector<double> grid(const std::vector<double>& list, std::optional<double> xmin,
                         std::optional<double> xmax, std::optional<int> samples, double lo_default,
                         double hi_default, int samples_default) {
    if (!list.empty()) return list;
    const int n = samples.value_or(samples_default);
    if (n < 1) return {};
    return kernels::linspace(xmin.value_or(lo_default), xmax.value_or(hi_default), n);
}

std::string fmt(double v) { return format_number(v, 12); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-sided envelope bounds for tan, sec, cot and cosec, and Bessel expansions"};
    app.name("jordan_cli");
    app.require_subcommand(1);

    std::function<int()> action;

    // coeffs
    struct {
        Common common;
        std::string family;
        int count = 5;
        std::string method = "closed";
    } co;
    auto* coeffs = app.add_subcommand("coeffs", "coefficient table of one family");
    add_common(coeffs, co.common);
    coeffs->add_option("--family", co.family, "tan, sec, cot or cosec")->required();
    coeffs->add_option("--count", co.count, "number of coefficients (<= 20)")->capture_default_str();
    coeffs->add_option("--method", co.method, "closed, direct or both")
        ->check(CLI::IsMember({"closed", "direct", "both"}))
        ->capture_default_str();
    coeffs->callback([&] {
        action = [&] {
            const Family family = family_arg(co.family);
            if (co.count < 1 || co.count > kDefaultOrderMax)
                throw usage_error("--count must lie in [1, " + std::to_string(kDefaultOrderMax) + "]");
            Table t;
            t.columns = {"p", "value"};
            if (co.method == "both") t.columns = {"p", "value", "value_direct", "abs_diff"};
            std::optional<EvenZetaCache> cache;
            if (co.method != "direct") cache.emplace(co.count);
            for (int p = 1; p <= co.count; ++p) {
                if (co.method == "closed") {
                    t.add({long{p}, coeff_closed(family, p, *cache)});
                } else if (co.method == "direct") {
                    t.add({long{p}, coeff_direct(family, p, 1e-14).value});
                } else {
                    const double c = coeff_closed(family, p, *cache);
                    const double d = coeff_direct(family, p, 1e-14).value;
                    t.add({long{p}, c, d, std::fabs(c - d)});
                }
            }
            emit(t, co.common.spec(), out);
            return kExitOk;
        };
    });

    // table
    struct {
        Common common;
        std::string family;
        int order = 0;
        std::string side = "upper";
        bool sharpened = false;
        double xmin = -0.99, xmax = 0.99;
        int samples = 11;
    } ta;
    auto* table = app.add_subcommand("table", "bound versus reference on a grid");
    add_common(table, ta.common);
    table->add_option("--family", ta.family)->required();
    table->add_option("--order", ta.order, "last retained inner term")->capture_default_str();
    table->add_option("--side", ta.side)->check(CLI::IsMember({"lower", "upper"}))->capture_default_str();
    table->add_flag("--sharpened", ta.sharpened, "use the sharpened constant (tan, sec)");
    table->add_option("--xmin", ta.xmin)->capture_default_str();
    table->add_option("--xmax", ta.xmax)->capture_default_str();
    table->add_option("--samples", ta.samples)->capture_default_str();
    table->callback([&] {
        action = [&] {
            const Family family = family_arg(ta.family);
            if (!(ta.xmin > -1.0 && ta.xmax < 1.0 && ta.xmin <= ta.xmax))
                throw domain_error("grid must satisfy -1 < xmin <= xmax < 1, got [" + fmt(ta.xmin) +
                                   ", " + fmt(ta.xmax) + "]");
            if (ta.samples < 2) throw usage_error("--samples must be >= 2");
            const FamilyEnvelope env(family, EvenZetaCache(kDefaultOrderMax));
            if (ta.order < 0 || ta.order > env.max_order())
                throw usage_error("--order must lie in [0, " + std::to_string(env.max_order()) + "]");
            const Side side = ta.side == "lower" ? Side::Lower : Side::Upper;
            const EnvelopeQuery q{family, ta.order, side, ta.sharpened};
            const auto xs = kernels::linspace(ta.xmin, ta.xmax, ta.samples);
            struct Row {
                double bound, ref;
            };
            const auto rows = kernels::map(std::span<const double>(xs), [&](double x) {
                return Row{env.bound(q, x).value, reference_value(family, x)};
            });
            Table t;
            t.columns = {"x", "bound", "reference", "gap"};
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double gap = side == Side::Upper ? rows[i].bound - rows[i].ref
                                                       : rows[i].ref - rows[i].bound;
                t.add({xs[i], rows[i].bound, rows[i].ref, gap});
            }
            emit(t, ta.common.spec(), out);
            return kExitOk;
        };
    });

    // verify
    struct {
        Common common;
        std::vector<std::string> families{"tan", "sec", "cot", "cosec"};
        std::string orders = "0..8";
        int samples = 10001;
        std::string fault;
    } ve;
    auto* verify = app.add_subcommand("verify", "run the identity and bracketing checks");
    add_common(verify, ve.common);
    verify->add_option("--families", ve.families, "comma separated")->delimiter(',');
    verify->add_option("--orders", ve.orders, "envelope orders a..b")->capture_default_str();
    verify->add_option("--samples", ve.samples, "sweep points in [-0.9998, 0.9998]")
        ->capture_default_str();
    verify->add_option("--inject-fault", ve.fault)->group("");
    verify->callback([&] {
        action = [&] {
            VerifyOptions opt;
            opt.families = families_arg(ve.families);
            std::tie(opt.order_lo, opt.order_hi) = range_arg(ve.orders);
            opt.samples = ve.samples;
            if (!ve.fault.empty()) opt.fault = fault_arg(ve.fault);
            VerifyReport report;
            try {
                report = run_verification(opt);
            } catch (const std::invalid_argument& e) {
                throw usage_error(e.what());
            }
            Table t;
            t.columns = {"family", "check", "checked", "failed", "worst", "status"};
            long failed = 0;
            for (const auto& c : report.checks) {
                t.add({std::string(to_string(c.family)), c.name, c.checked, c.failed, c.worst,
                       std::string(c.passed() ? "pass" : "fail")});
                if (!c.passed()) {
                    ++failed;
                    if (!c.note.empty())
                        err << to_string(c.family) << " " << c.name << ": " << c.note << '\n';
                }
            }
            emit(t, ve.common.spec(), out);
            err << "verify: " << (report.passed() ? "pass" : "FAIL") << " (" << failed << " of "
                << report.checks.size() << " checks failed)\n";
            return report.passed() ? kExitOk : kExitVerifyFailed;
        };
    });

    // crossover
    struct {
        Common common;
        int m = 40;
        std::vector<double> x;
        std::optional<double> xmin, xmax;
        std::optional<int> samples;
    } cr;
    auto* crossover = app.add_subcommand("crossover", "Laurent-type versus Taylor remainders");
    add_common(crossover, cr.common);
    crossover->add_option("--m", cr.m, "truncation")->capture_default_str();
    crossover->add_option("--x", cr.x, "explicit points, comma separated")->delimiter(',');
    crossover->add_option("--xmin", cr.xmin);
    crossover->add_option("--xmax", cr.xmax);
    crossover->add_option("--samples", cr.samples);
    crossover->callback([&] {
        action = [&] {
            if (cr.x.empty() && !cr.samples) throw usage_error("empty grid: give --x or --samples");
            const auto xs = grid(cr.x, cr.xmin, cr.xmax, cr.samples, 0.05, 0.95, 0);
            if (xs.empty()) throw usage_error("empty grid");
            std::vector<CrossoverRow> rows;
            try {
                rows = crossover_report(cr.m, xs);
            } catch (const std::invalid_argument& e) {
                throw usage_error(e.what());
            }
            Table t;
            t.columns = {"x", "laurent_remainder", "taylor_remainder", "winner"};
            for (const auto& r : rows) t.add({r.x, r.laurent_remainder, r.taylor_remainder, r.winner});
            emit(t, cr.common.spec(), out);
            return kExitOk;
        };
    });

    // bessel
    struct {
        Common common;
        double p = 0.0;
        std::optional<double> r;
        int order = 2;
        std::vector<double> x;
        std::optional<double> xmin, xmax;
        std::optional<int> samples;
    } be;
    auto* bessel = app.add_subcommand("bessel", "two-sided bounds for x^-p J_p(x)");
    add_common(bessel, be.common);
    bessel->add_option("--p", be.p, "Bessel order")->capture_default_str();
    bessel->add_option("--r", be.r, "expansion center, default 0.9 j_{p+1,1}");
    bessel->add_option("--order", be.order, "N, retained coefficients c_0..c_N")->capture_default_str();
    bessel->add_option("--x", be.x, "explicit points, comma separated")->delimiter(',');
    bessel->add_option("--xmin", be.xmin);
    bessel->add_option("--xmax", be.xmax);
    bessel->add_option("--samples", be.samples);
    bessel->callback([&] {
        action = [&] {
            if (!(be.p >= 0.0 && be.p <= kBesselMaxOrder))
                throw usage_error("--p must lie in [0, 30]");
            const double r = be.r ? *be.r : 0.9 * first_zero(be.p + 1.0);
            std::optional<BesselExpansion> e;
            try {
                e = build_expansion(be.p, r, be.order);
            } catch (const std::invalid_argument& ex) {
                throw usage_error(ex.what());
            }
            const auto xs = grid(be.x, be.xmin, be.xmax, be.samples, -r, r, 11);
            if (xs.empty()) throw usage_error("empty grid");
            Table t;
            t.columns = {"x", "lower", "reference", "upper"};
            for (double x : xs) {
                const auto b = bessel_bounds(*e, x);
                t.add({x, b.lower, bessel_j_normalized(be.p, x), b.upper});
            }
            emit(t, be.common.spec(), out);
            return kExitOk;
        };
    });

    // shifted
    struct {
        Common common;
        double r = 0.5;
        int count = 10;
    } sh;
    auto* shifted = app.add_subcommand("shifted", "shifted tan coefficients, recursion versus direct sum");
    add_common(shifted, sh.common);
    shifted->add_option("--r", sh.r, "center in (0, 1)")->capture_default_str();
    shifted->add_option("--count", sh.count, "number of coefficients")->capture_default_str();
    shifted->callback([&] {
        action = [&] {
            if (sh.count < 1 || sh.count > 40) throw usage_error("--count must lie in [1, 40]");
            const auto rec = shifted_recursion_values(sh.r, sh.count);
            const auto validated = shifted_recursive(sh.r, sh.count);
            Table t;
            t.columns = {"p", "recursion", "direct", "abs_diff", "validated"};
            for (int p = 1; p <= sh.count; ++p) {
                const double d = shifted_direct(sh.r, p, 1e-15 * std::max(1.0, rec[p - 1]));
                t.add({long{p}, rec[p - 1], d, std::fabs(rec[p - 1] - d), p <= validated.order_max()});
            }
            emit(t, sh.common.spec(), out);
            if (validated.truncated) {
                err << "shifted: " << validated.diagnostic << '\n';
                return kExitVerifyFailed;
            }
            return kExitOk;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action();
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        // Domain errors, unsupported ranges and options, I/O failures.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace jordan::cli
