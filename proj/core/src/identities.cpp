#include "harmsum/identities.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "harmsum/polynomial.hpp"

namespace harmsum {

namespace {

// Accumulates exact comparisons and keeps the first mismatch.
class Checker {
public:
    Checker(std::string name, std::string range) {
        report_.identity_name = std::move(name);
        report_.range_tested = std::move(range);
    }

    template <class Inputs>
    bool equal(const Rational& lhs, const Rational& rhs, Inputs&& describe) {
        ++report_.checks;
        if (lhs == rhs) return true;
        if (report_.status == Status::pass) {
            report_.status = Status::fail;
            report_.counterexample = Counterexample{describe(), lhs, rhs};
        }
        return false;
    }

    bool failed() const { return report_.status == Status::fail; }
    IdentityReport& report() { return report_; }

private:
    IdentityReport report_;
};

std::string nm_range(int n_max, int m_max) {
    return "n<=" + std::to_string(n_max) + ";m<=" + std::to_string(m_max);
}

std::string n_range(int n_max) { return "n<=" + std::to_string(n_max); }

std::string at(int n) { return "n=" + std::to_string(n); }
std::string at(int n, int m) { return "n=" + std::to_string(n) + ";m=" + std::to_string(m); }

std::shared_ptr<const SnmTable> ensure_snm(const SuiteContext& ctx, int n_max, int m_max) {
    if (ctx.snm && ctx.snm->n_max() >= n_max && ctx.snm->m_max() >= m_max) return ctx.snm;
    return build_snm_table(n_max, m_max);
}

std::shared_ptr<const HarmonicTable> ensure_harmonic(const SuiteContext& ctx, int n_max, int r_max) {
    if (ctx.harmonic && ctx.harmonic->n_max() >= n_max && ctx.harmonic->r_max() >= r_max) return ctx.harmonic;
    return build_harmonic_table(n_max, r_max);
}

// Row C(n, 0..n) by Pascal's rule, reused across k in the alternating sums.
std::vector<Integer> binomial_row(int n) {
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

// sum_{k=1}^n (-1)^{k-1} C(n,k) a(k)
Rational alternating_binomial_sum(int n, const std::function<Rational(int)>& a) {
    const auto row = binomial_row(n);
    Rational sum;
    for (int k = 1; k <= n; ++k) {
        const Rational term = Rational(row[k]) * a(k);
        if (k % 2 == 1) sum += term; else sum -= term;
    }
    return sum;
}

Rational inv(int k) { return Rational(Integer(1), Integer(k)); }

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<long> num(-20, 20);
        std::uniform_int_distribution<long> den(1, 12);
        return Rational(Integer(num(rng_)), Integer(den(rng_)));
    }

    Rational next_nonzero() {
        Rational r = next();
        while (r.is_zero()) r = next();
        return r;
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Polynomial polynomial(int degree) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = next();
        c.back() = next_nonzero();
        return Polynomial(std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace

IdentityReport verify_dilcher(int n_max, int m_max, SuiteContext ctx) {
    Checker check("dilcher", nm_range(n_max, m_max));
    if (n_max < 1 || m_max < 1) return check.report();
    const auto table = ensure_snm(ctx, n_max, m_max);
    int skipped = 0;
    for (int n = 1; n <= n_max && !check.failed(); ++n) {
        for (int m = 1; m <= m_max && !check.failed(); ++m) {
            const Rational direct = snm_direct(n, m);
            check.equal(direct, table->value(n, m), [&] { return at(n, m) + ";route=table"; });
            if (n + m <= kNestedLimit) {
                check.equal(direct, snm_nested(n, m), [&] { return at(n, m) + ";route=nested"; });
            } else {
                ++skipped;
            }
        }
    }
    if (skipped > 0) {
        check.report().note = "chain enumeration skipped for " + std::to_string(skipped) +
                              " cells with n+m>" + std::to_string(kNestedLimit);
    }
    return check.report();
}

IdentityReport verify_five_way(int n_max, int m_max, SuiteContext ctx) {
    Checker check("five_way", nm_range(n_max, m_max));
    if (n_max < 1 || m_max < 0) return check.report();
    const auto table = ensure_snm(ctx, n_max, m_max);
    for (int n = 1; n <= n_max && !check.failed(); ++n) {
        for (int m = 0; m <= m_max && !check.failed(); ++m) {
            const Rational& reference = table->value(n, m);
            auto route = [&](const char* name) { return [&, name] { return at(n, m) + ";route=" + name; }; };
            check.equal(snm_direct(n, m), reference, route("direct"));
            check.equal(snm_bell(n, m), reference, route("bell"));
            check.equal(snm_newton(n, m), reference, route("newton"));
            if (n + m <= kNestedLimit) check.equal(snm_nested(n, m), reference, route("nested"));
            if (m >= 1 && m <= 5) check.equal(snm_closed_form(n, m), reference, route("closed"));
        }
    }
    return check.report();
}

IdentityReport verify_corollary22(int n_max, int m_max, SuiteContext ctx) {
    Checker check("corollary22", nm_range(n_max, m_max));
    if (n_max < 1 || m_max < 1) return check.report();
    const auto s = ensure_snm(ctx, n_max, m_max);
    const auto h = ensure_harmonic(ctx, n_max, m_max + 1);
    for (int m = 1; m <= m_max && !check.failed(); ++m) {
        for (int n = 1; n <= n_max && !check.failed(); ++n) {
            const Rational forward = alternating_binomial_sum(n, [&](int k) { return s->value(k, m) * inv(k); });
            check.equal(forward, h->value(n, m + 1), [&] { return at(n, m) + ";form=forward"; });
            const Rational dual = alternating_binomial_sum(n, [&](int k) { return h->value(k, m + 1); });
            check.equal(dual, s->value(n, m) * inv(n), [&] { return at(n, m) + ";form=dual"; });
        }
    }
    check.report().note = "sign (-1)^(k-1) confirmed at n=m=1: C(1,1) S_1(1)/1 = 1 = H_1^(2)";
    return check.report();
}

IdentityReport verify_sun_zhao(int n_max, SuiteContext ctx) {
    Checker check("sun_zhao", n_range(n_max));
    if (n_max < 1) return check.report();
    const auto h = ensure_harmonic(ctx, n_max, 2);
    // The m = 1 forward form, with summand S_k(1)/k = H_k/k.
    const auto s = ensure_snm(ctx, n_max, 1);
    for (int k = 1; k <= n_max && !check.failed(); ++k) {
        check.equal(h->value(k, 1), s->value(k, 1), [&] { return at(k) + ";form=summand"; });
    }
    for (int n = 1; n <= n_max && !check.failed(); ++n) {
        const Rational lhs = alternating_binomial_sum(n, [&](int k) { return h->value(k, 1) * inv(k); });
        check.equal(lhs, h->value(n, 2), [&] { return at(n); });
    }
    return check.report();
}

IdentityReport verify_bang(int n_max, SuiteContext ctx) {
    Checker check("bang", n_range(n_max));
    if (n_max < 1) return check.report();
    const auto h = ensure_harmonic(ctx, n_max, 3);
    // inner[k] = sum_{j<=k} H_j / j
    std::vector<Rational> inner(static_cast<std::size_t>(n_max) + 1);
    for (int j = 1; j <= n_max; ++j) inner[j] = inner[j - 1] + h->value(j, 1) * inv(j);
    // The same statement as the m = 2 forward form: the summand is S_k(2)/k.
    const auto s = ensure_snm(ctx, n_max, 2);
    for (int k = 1; k <= n_max && !check.failed(); ++k) {
        check.equal(inner[k], s->value(k, 2), [&] { return at(k) + ";form=summand"; });
    }
    for (int n = 1; n <= n_max && !check.failed(); ++n) {
        const Rational lhs = alternating_binomial_sum(n, [&](int k) { return inner[k] * inv(k); });
        check.equal(lhs, h->value(n, 3), [&] { return at(n); });
    }
    return check.report();
}

IdentityReport verify_boole_gould(int n_max, int trials, std::uint64_t seed) {
    Checker check("boole_gould", n_range(n_max) + ";trials=" + std::to_string(trials));
    check.report().seed = seed;
    if (n_max < 1) return check.report();
    RationalSampler sample(seed);
    const int variant_trials = std::max(1, trials / 10);

    for (int n = 1; n <= n_max && !check.failed(); ++n) {
        const Rational n_fact(factorial(n));
        const int parity = sign_power(n);

        // Powers k^m, m <= n.
        for (int m = 0; m <= n; ++m) {
            const Rational d = forward_difference_n(
                [m](std::int64_t k) { return Rational(ipow(Integer(static_cast<long>(k)), static_cast<unsigned long>(m))); }, n);
            check.equal(d, m < n ? Rational{} : n_fact, [&] { return at(n, m) + ";form=powers"; });
        }

        // Random f of degree <= n: sum (-1)^k C(n,k) f(k) = 0 or (-1)^n n! c_n.
        for (int t = 0; t < trials && !check.failed(); ++t) {
            const int degree = sample.uniform(0, n);
            const Polynomial f = sample.polynomial(degree);
            const Rational gould = parity * forward_difference_n(
                [&](std::int64_t k) { return poly_eval(f, Rational(static_cast<long>(k))); }, n);
            const Rational expected = degree < n ? Rational{} : parity * n_fact * f.leading();
            check.equal(gould, expected, [&] { return at(n) + ";form=gould;f=" + f.to_string(); });
        }

        // P(a + k b) with deg P = n.
        for (int t = 0; t < variant_trials && !check.failed(); ++t) {
            const Polynomial p = sample.polynomial(n);
            const Rational a = sample.next();
            const Rational b = sample.next_nonzero();
            const Polynomial shifted = p.compose(Polynomial::linear(a, b));
            const Rational d = forward_difference_n(
                [&](std::int64_t k) { return poly_eval(shifted, Rational(static_cast<long>(k))); }, n);
            check.equal(d, p.leading() * b.pow(n) * n_fact, [&] {
                return at(n) + ";form=phoata;a=" + a.to_string() + ";b=" + b.to_string() + ";P=" + p.to_string();
            });
        }

        // (x k + y)^m with 0 <= m <= n.
        for (int t = 0; t < variant_trials && !check.failed(); ++t) {
            const Rational x = sample.next_nonzero();
            const Rational y = sample.next();
            const int m = t == 0 ? n : sample.uniform(0, n);
            const Rational d = parity * forward_difference_n(
                [&](std::int64_t k) { return (x * Rational(static_cast<long>(k)) + y).pow(m); }, n);
            const Rational expected = m < n ? Rational{} : parity * x.pow(n) * n_fact;
            check.equal(d, expected, [&] {
                return at(n, m) + ";form=katsuura;x=" + x.to_string() + ";y=" + y.to_string();
            });
        }
    }
    return check.report();
}

IdentityReport verify_lemma11(int n_max, int trials, std::uint64_t seed) {
    Checker check("lemma11", n_range(n_max) + ";trials=" + std::to_string(trials));
    check.report().seed = seed;
    if (n_max < 1) return check.report();
    RationalSampler sample(seed);
    for (int t = 0; t < trials && !check.failed(); ++t) {
        const int n = sample.uniform(1, n_max);
        std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
        for (auto& x : a) x = sample.next();
        const Sequence seq = [&](std::int64_t j) { return a[static_cast<std::size_t>(j)]; };
        check.equal(lemma11_lhs(seq, n), lemma11_rhs(seq, n),
                    [&] { return at(n) + ";trial=" + std::to_string(t); });
    }
    return check.report();
}

IdentityReport verify_harmonic_ladder(int n_max, SuiteContext ctx) {
    Checker check("harmonic_ladder", n_range(n_max) + ";steps=1..4");
    if (n_max < 1) return check.report();
    const auto h = ensure_harmonic(ctx, n_max, 5);
    for (int step = 1; step <= 4 && !check.failed(); ++step) {
        Rational lhs;
        for (int n = 1; n <= n_max && !check.failed(); ++n) {
            lhs += harmonic_polynomial(*h, n, step) * inv(n);
            const Rational rhs = harmonic_polynomial(*h, n, step + 1) / Rational(step + 1);
            check.equal(lhs, rhs, [&] { return at(n) + ";step=" + std::to_string(step); });
        }
    }
    check.report().note = "step 2 is also the Adamchik identity";
    return check.report();
}

IdentityReport verify_curious(int n_max, CuriousForm form, SuiteContext ctx) {
    const bool printed = form == CuriousForm::printed;
    Checker check(printed ? "curious_printed" : "curious", n_range(n_max));
    if (n_max < 1) return check.report();
    const auto h = ensure_harmonic(ctx, n_max, 3);
    Rational lhs;
    for (int n = 1; n <= n_max && !check.failed(); ++n) {
        const Rational& hn = h->value(n, 1);
        const Rational& hprev = h->value(n - 1, 1);
        check.equal(hn.pow(3) - hprev.pow(3), inv(n).pow(3) + 3 * hn * hprev * inv(n),
                    [&] { return at(n) + ";form=telescoping"; });
        lhs += hn * hprev * inv(n);
        const Rational cube = hn.pow(3);
        const Rational rhs = (printed ? cube + h->value(n, 3) : cube - h->value(n, 3)) / 3;
        check.equal(lhs, rhs, [&] { return at(n) + ";form=sum"; });
    }
    check.report().note = printed
        ? "sign variant (H_n^3 + H_n^(3))/3"
        : "right-hand side (H_n^3 - H_n^(3))/3: summing the telescoping step gives H_n^3 = H_n^(3) + 3*lhs; "
          "the '+' form fails at n=1 (lhs 0, rhs 2/3)";
    return check.report();
}

IdentityReport verify_stirling_bridge(int n_max) {
    Checker check("stirling_bridge", n_range(n_max));
    for (int n = 1; n <= n_max && !check.failed(); ++n) {
        for (int m = 1; m <= n; ++m) {
            check.equal(Rational(stirling2(n, m)), stirling2_via_snm(n, m), [&] { return at(n, m) + ";form=bridge"; });
        }
        for (int m = 1; m < n; ++m) {
            check.equal(snm_direct(n, -m), Rational{}, [&] { return at(n, m) + ";form=vanishing"; });
        }
        const Rational boole = sign_power(n - 1) * Rational(factorial(n));
        check.equal(snm_direct(n, -n), boole, [&] { return at(n) + ";form=boole"; });
    }
    check.report().note = "bridge sign (-1)^(m-1) confirmed against set-partition enumeration";
    return check.report();
}

SuiteConfig SuiteConfig::empty() {
    SuiteConfig c;
    c.dilcher_n = c.dilcher_m = 0;
    c.five_way_n = 0;
    c.corollary_n = c.corollary_m = 0;
    c.sun_zhao_n = 0;
    c.bang_n = 0;
    c.boole_n = 0;
    c.lemma_n = 0;
    c.ladder_n = 0;
    c.curious_n = 0;
    c.stirling_n = 0;
    return c;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "dilcher", "five_way", "corollary22", "sun_zhao", "bang", "boole_gould",
        "lemma11", "harmonic_ladder", "curious", "stirling_bridge"};
    return names;
}

std::optional<IdentityReport> run_suite(const std::string& name, const SuiteConfig& c, SuiteContext ctx) {
    if (name == "dilcher") {
        if (c.dilcher_n < 1 || c.dilcher_m < 1) return std::nullopt;
        return verify_dilcher(c.dilcher_n, c.dilcher_m, ctx);
    }
    if (name == "five_way") {
        if (c.five_way_n < 1) return std::nullopt;
        return verify_five_way(c.five_way_n, c.five_way_m, ctx);
    }
    if (name == "corollary22") {
        if (c.corollary_n < 1 || c.corollary_m < 1) return std::nullopt;
        return verify_corollary22(c.corollary_n, c.corollary_m, ctx);
    }
    if (name == "sun_zhao") {
        if (c.sun_zhao_n < 1) return std::nullopt;
        return verify_sun_zhao(c.sun_zhao_n, ctx);
    }
    if (name == "bang") {
        if (c.bang_n < 1) return std::nullopt;
        return verify_bang(c.bang_n, ctx);
    }
    if (name == "boole_gould") {
        if (c.boole_n < 1) return std::nullopt;
        return verify_boole_gould(c.boole_n, c.boole_trials, c.seed);
    }
    if (name == "lemma11") {
        if (c.lemma_n < 1 || c.lemma_trials < 1) return std::nullopt;
        return verify_lemma11(c.lemma_n, c.lemma_trials, c.seed);
    }
    if (name == "harmonic_ladder") {
        if (c.ladder_n < 1) return std::nullopt;
        return verify_harmonic_ladder(c.ladder_n, ctx);
    }
    if (name == "curious") {
        if (c.curious_n < 1) return std::nullopt;
        return verify_curious(c.curious_n, CuriousForm::minus, ctx);
    }
    if (name == "stirling_bridge") {
        if (c.stirling_n < 1) return std::nullopt;
        return verify_stirling_bridge(c.stirling_n);
    }
    throw std::invalid_argument("unknown identity suite '" + name + "'");
}

std::vector<IdentityReport> run_all_suites(const SuiteConfig& config, SuiteContext ctx) {
    std::vector<IdentityReport> reports;
    for (const auto& name : suite_names()) {
        if (auto r = run_suite(name, config, ctx)) reports.push_back(std::move(*r));
    }
    return reports;
}

bool all_passed(const std::vector<IdentityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

std::string to_text(const IdentityReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << r.identity_name << ' ' << r.range_tested << " (" << r.checks
       << " checks)";
    if (r.seed) os << " seed=" << *r.seed;
    if (r.counterexample) {
        os << "\n  counterexample " << r.counterexample->inputs << ": lhs=" << r.counterexample->lhs
           << " rhs=" << r.counterexample->rhs;
    }
    if (!r.note.empty()) os << "\n  note: " << r.note;
    return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string report_csv_header() { return "name,range,status,checks,seed,inputs,lhs,rhs,note"; }

std::string to_csv_record(const IdentityReport& r) {
    std::ostringstream os;
    os << csv_field(r.identity_name) << ',' << csv_field(r.range_tested) << ',' << (r.passed() ? "pass" : "fail")
       << ',' << r.checks << ',' << (r.seed ? std::to_string(*r.seed) : "") << ',';
    if (r.counterexample) {
        os << csv_field(r.counterexample->inputs) << ',' << r.counterexample->lhs << ',' << r.counterexample->rhs;
    } else {
        os << ",,";
    }
    os << ',' << csv_field(r.note);
    return os.str();
}

}  // namespace harmsum
