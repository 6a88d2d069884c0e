#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "harmsum/harmonic.hpp"
#include "harmsum/identities.hpp"
#include "harmsum/power_series.hpp"
#include "harmsum/reference.hpp"
#include "harmsum/series.hpp"
#include "harmsum/snm.hpp"

namespace harmsum::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Options {
    Format format = Format::text;

    int n = 0;
    int m = 0;
    int r = 1;
    std::string algo = "table";

    std::string suite = "all";
    int n_max = 0;
    int m_max = 0;
    int trials = 0;
    std::uint64_t seed = kDefaultSeed;

    int digits = 30;
    std::string route = "sum";
    int terms = 0;
    bool cross_check = false;

    int order = 10;
    bool integrated = false;

    std::string check;
    int passes = 3;
    double tolerance = 1e-4;
    std::string x = "1/4";
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json rational_json(const Rational& q) { return q.to_string(); }

Json approx_json(const ApproxReal& a, int digits) {
    return Json{{"value", a.digits_string(digits)}, {"error_bound", a.bound_string(digits)}};
}

int cmd_snm(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("snm: n must be >= 1");
    Rational v;
    if (o.algo == "direct") {
        v = snm_direct(o.n, o.m);
    } else if (o.m < 0) {
        throw UsageError("snm: negative m is only supported by --algo direct");
    } else if (o.algo == "nested") {
        if (o.n + o.m > kNestedLimit) {
            throw UsageError("snm: nested enumeration is limited to n + m <= " + std::to_string(kNestedLimit));
        }
        v = snm_nested(o.n, o.m);
    } else if (o.algo == "table") {
        v = SnmTable::build(o.n, o.m).value(o.n, o.m);
    } else if (o.algo == "bell") {
        v = snm_bell(o.n, o.m);
    } else if (o.algo == "newton") {
        v = snm_newton(o.n, o.m);
    } else if (o.algo == "closed") {
        if (o.m < 1 || o.m > 5) throw UsageError("snm: closed forms exist for 1 <= m <= 5");
        v = snm_closed_form(o.n, o.m);
    }
    switch (o.format) {
        case Format::text: out << v << '\n'; break;
        case Format::json:
            out << Json{{"n", o.n}, {"m", o.m}, {"algo", o.algo}, {"value", rational_json(v)}}.dump(2) << '\n';
            break;
        case Format::csv:
            out << "n,m,algo,value_num,value_den\n"
                << o.n << ',' << o.m << ',' << o.algo << ',' << v.num().get_str() << ',' << v.den().get_str() << '\n';
            break;
    }
    return kSuccess;
}

int cmd_harmonic(const Options& o, std::ostream& out) {
    if (o.n < 0 || o.r < 1) throw UsageError("harmonic: need n >= 0 and r >= 1");
    const Rational v = harmonic(o.n, o.r);
    switch (o.format) {
        case Format::text: out << v << '\n'; break;
        case Format::json:
            out << Json{{"n", o.n}, {"r", o.r}, {"value", rational_json(v)}}.dump(2) << '\n';
            break;
        case Format::csv:
            out << "n,r,value_num,value_den\n"
                << o.n << ',' << o.r << ',' << v.num().get_str() << ',' << v.den().get_str() << '\n';
            break;
    }
    return kSuccess;
}

SuiteConfig suite_config(const Options& o) {
    SuiteConfig c;
    c.seed = o.seed;
    if (o.n_max > 0) {
        c.dilcher_n = c.five_way_n = c.corollary_n = c.sun_zhao_n = c.bang_n = o.n_max;
        c.boole_n = c.lemma_n = c.ladder_n = c.curious_n = c.stirling_n = o.n_max;
    }
    if (o.m_max > 0) c.dilcher_m = c.five_way_m = c.corollary_m = o.m_max;
    if (o.trials > 0) c.boole_trials = c.lemma_trials = o.trials;
    return c;
}

Json report_json(const IdentityReport& r) {
    Json j{{"name", r.identity_name}, {"range", r.range_tested}, {"status", r.passed() ? "pass" : "fail"},
           {"checks", r.checks}};
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    if (r.counterexample) {
        j["counterexample"] = Json{{"inputs", r.counterexample->inputs},
                                   {"lhs", rational_json(r.counterexample->lhs)},
                                   {"rhs", rational_json(r.counterexample->rhs)}};
    } else {
        j["counterexample"] = nullptr;
    }
    j["note"] = r.note;
    return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const SuiteConfig config = suite_config(o);
    std::vector<IdentityReport> reports;
    if (o.suite == "all") {
        reports = run_all_suites(config);
    } else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
            throw UsageError("verify: unknown suite '" + o.suite + "'");
        }
        if (auto r = run_suite(o.suite, config)) reports.push_back(std::move(*r));
    }
    const bool ok = all_passed(reports);
    switch (o.format) {
        case Format::text:
            for (const auto& r : reports) out << to_text(r) << '\n';
            out << (ok ? "ALL PASS" : "FAILED") << " (" << reports.size() << " suites)\n";
            break;
        case Format::json: {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            out << Json{{"status", ok ? "pass" : "fail"}, {"reports", arr}}.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << report_csv_header() << '\n';
            for (const auto& r : reports) out << to_csv_record(r) << '\n';
            break;
    }
    return ok ? kSuccess : kCheckFailed;
}

ApproxReal zeta_by_route(const Options& o) {
    if (o.route == "sum") {
        if (o.m < 2) throw UsageError("zeta: route sum needs m >= 2");
        return zeta_via_sum(o.m, o.digits, o.terms);
    }
    if (o.route == "weighted") {
        if (o.m < 2) throw UsageError("zeta: route weighted needs m >= 2");
        return zeta_via_weighted_sum(o.m - 1, o.digits, o.terms);
    }
    if (o.route == "harmonic") {
        if (o.m == 3) return zeta3_harmonic_form(o.digits, o.terms);
        if (o.m == 5) return zeta5_harmonic_form(o.digits, o.terms);
        throw UsageError("zeta: route harmonic exists for m = 3 and m = 5");
    }
    if (o.m < 2) throw UsageError("zeta: route oracle needs m >= 2");
    return zeta_euler_maclaurin(o.m, o.digits);
}

int cmd_zeta(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.digits < 1) throw UsageError("zeta: --digits must be >= 1");
    const ApproxReal value = zeta_by_route(o);
    const Rational limit(Integer(1), pow10(o.digits));
    bool ok = value.radius() <= limit;
    if (!ok) err << "zeta: error bound exceeds 1e-" << o.digits << '\n';
    std::optional<bool> agrees;
    if (o.cross_check) {
        agrees = agree_to_digits(value, zeta_euler_maclaurin(o.m, o.digits), o.digits);
        ok = ok && *agrees;
    }
    switch (o.format) {
        case Format::text:
            out << value.to_string(o.digits) << '\n';
            if (agrees) out << (*agrees ? "PASS" : "FAIL") << " Euler-Maclaurin cross-check to " << o.digits << " digits\n";
            break;
        case Format::json: {
            Json j{{"m", o.m}, {"digits", o.digits}, {"route", o.route}};
            j.update(approx_json(value, o.digits));
            if (agrees) j["oracle_agrees"] = *agrees;
            out << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "m,digits,route,value,error_bound\n"
                << o.m << ',' << o.digits << ',' << o.route << ',' << value.digits_string(o.digits) << ','
                << value.bound_string(o.digits) << '\n';
            break;
    }
    return ok ? kSuccess : kCheckFailed;
}

int cmd_gf(const Options& o, std::ostream& out) {
    if (o.m < 1 || o.order < 1) throw UsageError("gf: need m >= 1 and --order >= 1");
    const auto coeffs = o.integrated ? gf_integrated_coefficients(o.m, o.order) : gf_coefficients(o.m, o.order);
    switch (o.format) {
        case Format::text: {
            out << '[';
            for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? ", " : "") << coeffs[i];
            out << "]\n";
            break;
        }
        case Format::json: {
            Json arr = Json::array();
            for (const auto& c : coeffs) arr.push_back(rational_json(c));
            out << Json{{"m", o.m}, {"order", o.order}, {"integrated", o.integrated}, {"coefficients", arr}}.dump(2)
                << '\n';
            break;
        }
        case Format::csv:
            out << "n,value_num,value_den\n";
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                out << i << ',' << coeffs[i].num().get_str() << ',' << coeffs[i].den().get_str() << '\n';
            }
            break;
    }
    return kSuccess;
}

// Prints a list of labelled enclosures plus a verdict.
int emit_check(const Options& o, std::ostream& out, const std::string& name,
               const std::vector<std::pair<std::string, ApproxReal>>& values, int digits, bool ok,
               const std::string& verdict) {
    switch (o.format) {
        case Format::text:
            for (const auto& [label, v] : values) out << label << ' ' << v.to_string(digits) << '\n';
            out << (ok ? "PASS " : "FAIL ") << verdict << '\n';
            break;
        case Format::json: {
            Json j{{"check", name}, {"status", ok ? "pass" : "fail"}, {"verdict", verdict}};
            for (const auto& [label, v] : values) j[label] = approx_json(v, digits);
            out << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "check,quantity,value,error_bound\n";
            for (const auto& [label, v] : values) {
                out << name << ',' << label << ',' << v.digits_string(digits) << ',' << v.bound_string(digits) << '\n';
            }
            break;
    }
    return ok ? kSuccess : kCheckFailed;
}

int cmd_check(const Options& o, std::ostream& out) {
    if (o.check == "alternating") {
        if (o.m < 1 || o.terms < 10) throw UsageError("check alternating: need --m >= 1 and --terms >= 10");
        const auto c = alternating_point_check(o.m, o.terms, o.passes);
        std::vector<std::pair<std::string, ApproxReal>> values{{"partial_sum", c.partial_sum},
                                                               {"reference", c.reference}};
        bool ok = c.difference.raw().get_d() <= o.tolerance;
        if (c.closed_form) {
            values.emplace_back("closed_form", *c.closed_form);
            ok = ok && (c.partial_sum.center() - c.closed_form->center()).abs().raw().get_d() <= o.tolerance;
        }
        std::ostringstream verdict;
        verdict << "|partial_sum - reference| = " << scientific_upper(c.difference) << " (tolerance " << o.tolerance
                << ")";
        return emit_check(o, out, "alternating", values, 20, ok, verdict.str());
    }
    if (o.check == "golden") {
        if (o.m != 2 && o.m != 3) throw UsageError("check golden: --m must be 2 or 3");
        if (o.digits < 10) throw UsageError("check golden: --digits must be >= 10");
        const auto g = golden_ratio_check(o.m, o.digits);
        const bool ok = agree_to_digits(g.series, g.closed_form, o.digits) &&
                        agree_to_digits(g.series, g.polylog, o.digits);
        return emit_check(o, out, "golden", {{"series", g.series}, {"closed_form", g.closed_form}, {"polylog", g.polylog}},
                          o.digits, ok, "agreement to " + std::to_string(o.digits) + " digits");
    }
    if (o.check == "remark52") {
        Rational x;
        try {
            x = Rational::parse(o.x);
        } catch (const std::exception&) {
            throw UsageError("check remark52: --x must be a rational p/q");
        }
        if (o.m < 1 || !(x > Rational(-1) && x < Rational(Integer(1), Integer(2)))) {
            throw UsageError("check remark52: need --m >= 1 and -1 < x < 1/2");
        }
        const auto c = remark52_check(o.m, x, o.digits);
        const ApproxReal finite = ApproxReal::from_rational(c.finite_sum, working_scale(o.digits));
        const bool ok = agree_to_digits(finite, c.series, o.digits);
        return emit_check(o, out, "remark52", {{"finite_sum", finite}, {"series", c.series}}, o.digits, ok,
                          "finite sum " + c.finite_sum.to_string() + " against " + std::to_string(c.terms) +
                              " series terms");
    }
    throw UsageError("check: unknown check '" + o.check + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact S_n(m) numbers, harmonic-sum identity verification and zeta-constant series", "harmsum"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* snm = app.add_subcommand("snm", "Print S_n(m) exactly");
    snm->add_option("n", o.n, "n >= 1")->required();
    snm->add_option("m", o.m, "m (negative allowed with --algo direct)")->required();
    snm->add_option("--algo", o.algo, "Algorithm")
        ->check(CLI::IsMember({"direct", "nested", "table", "bell", "newton", "closed"}));

    auto* harm = app.add_subcommand("harmonic", "Print H_n^(r) exactly");
    harm->add_option("n", o.n, "n >= 0")->required();
    harm->add_option("r", o.r, "r >= 1")->required();

    auto* verify = app.add_subcommand("verify", "Run identity suites");
    verify->add_option("suite", o.suite, "Suite name or 'all'");
    verify->add_option("--n-max", o.n_max, "Override every n range");
    verify->add_option("--m-max", o.m_max, "Override every m range");
    verify->add_option("--trials", o.trials, "Random trials for boole_gould and lemma11");
    verify->add_option("--seed", o.seed, "Seed for randomized suites");

    auto* zeta = app.add_subcommand("zeta", "Evaluate zeta(m) with an error bound");
    zeta->add_option("m", o.m, "m >= 2")->required();
    zeta->add_option("--digits", o.digits, "Decimal digits");
    zeta->add_option("--route", o.route, "Series route")
        ->check(CLI::IsMember({"sum", "weighted", "harmonic", "oracle"}));
    zeta->add_option("--terms", o.terms, "Fixed truncation point (0 chooses automatically)");
    zeta->add_flag("--check", o.cross_check, "Cross-check against Euler-Maclaurin summation");

    auto* gf = app.add_subcommand("gf", "Generating-function coefficients");
    gf->add_option("m", o.m, "m >= 1")->required();
    gf->add_option("--order", o.order, "Truncation order");
    gf->add_flag("--integrated", o.integrated, "Coefficients of -Li_{m+1}(-x/(1-x))");

    auto* check = app.add_subcommand("check", "Series consistency checks");
    check->add_option("kind", o.check, "alternating | golden | remark52")
        ->required()
        ->check(CLI::IsMember({"alternating", "golden", "remark52"}));
    check->add_option("--m", o.m, "m")->required();
    check->add_option("--terms", o.terms, "alternating: number of terms");
    check->add_option("--passes", o.passes, "alternating: pairwise-averaging passes");
    check->add_option("--tolerance", o.tolerance, "alternating: absolute tolerance");
    check->add_option("--digits", o.digits, "golden / remark52: digits");
    check->add_option("--x", o.x, "remark52: rational point in (-1, 1/2)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    if (snm->parsed() && o.m < 0 && snm->count("--algo") == 0) o.algo = "direct";
    o.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    try {
        if (snm->parsed()) return cmd_snm(o, out);
        if (harm->parsed()) return cmd_harmonic(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (zeta->parsed()) return cmd_zeta(o, out, err);
        if (gf->parsed()) return cmd_gf(o, out);
        if (check->parsed()) return cmd_check(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace harmsum::cli
