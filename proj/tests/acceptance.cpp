// Acceptance criteria AC1..AC11. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "harmsum/identities.hpp"
#include "harmsum/power_series.hpp"
#include "harmsum/reference.hpp"
#include "harmsum/series.hpp"
#include "harmsum/snm.hpp"

using namespace harmsum;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Rational tenth_power(int d) { return Rational(Integer(1), pow10(d)); }

Rational direct_harmonic(int n, int r) {
    Rational s = 0;
    for (int k = 1; k <= n; ++k) s += Rational(Integer(1), ipow(Integer(k), r));
    return s;
}

// value agrees with the oracle to `digits`, within its own bound, and the bound is at most 10^-digits.
bool honored(const ApproxReal& value, const ApproxReal& oracle, int digits) {
    return value.radius() <= tenth_power(digits) && agree_to_digits(value, oracle, digits);
}

std::string report_failures(const std::vector<IdentityReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        if (!r.passed()) os << "; " << to_text(r);
    }
    return os.str();
}

Outcome ac1() {
    const auto r = verify_five_way(60, 6);
    return {r.passed(), std::to_string(r.checks) + " exact comparisons" + report_failures({r})};
}

Outcome ac2() {
    const auto table = SnmTable::build(40, 5);
    long compared = 0;
    for (int m = 1; m <= 5; ++m) {
        const auto plain = gf_coefficients(m, 40);
        const auto integrated = gf_integrated_coefficients(m, 40);
        for (int n = 1; n <= 40; ++n) {
            const Rational& s = table.value(n, m);
            if (plain[n] != s || integrated[n] != s / Rational(n) || s != snm_direct(n, m)) {
                return {false, "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m)};
            }
            compared += 2;
        }
    }
    return {true, std::to_string(compared) + " coefficients"};
}

Outcome ac3() {
    const auto r = verify_boole_gould(20, 200);
    return {r.passed(), std::to_string(r.checks) + " checks, seed " + std::to_string(*r.seed) + report_failures({r})};
}

Outcome ac4() {
    std::vector<IdentityReport> reports{
        verify_corollary22(100, 5), verify_bang(100), verify_sun_zhao(100),
        verify_harmonic_ladder(100), verify_curious(100, CuriousForm::minus)};
    bool ok = all_passed(reports);
    // direct-summation oracle for the curious identity, n <= 5
    bool minus_ok = true;
    bool plus_ok = true;
    for (int n = 1; n <= 5; ++n) {
        Rational lhs = 0;
        for (int k = 1; k <= n; ++k) lhs += direct_harmonic(k, 1) * direct_harmonic(k - 1, 1) / Rational(k);
        const Rational h3 = direct_harmonic(n, 1).pow(3);
        minus_ok = minus_ok && lhs == (h3 - direct_harmonic(n, 3)) / Rational(3);
        plus_ok = plus_ok && lhs == (h3 + direct_harmonic(n, 3)) / Rational(3);
    }
    const auto printed = verify_curious(5, CuriousForm::printed);
    ok = ok && minus_ok && !plus_ok && !printed.passed();
    std::int64_t checks = 0;
    for (const auto& r : reports) checks += r.checks;
    return {ok, std::to_string(checks) + " checks; curious resolved to (H^3 - H^(3))/3 by the n<=5 oracle" +
                    report_failures(reports)};
}

Outcome ac5() {
    const auto value = zeta3_harmonic_form(40, 250);
    const auto oracle = zeta_euler_maclaurin(3, 40);
    const bool ok = honored(value, oracle, 40) && oracle.contains(value.center());
    return {ok, value.to_string(40)};
}

Outcome ac6() {
    const auto z5 = zeta_via_weighted_sum(4, 40);
    const auto z5h = zeta5_harmonic_form(40);
    const auto z2 = zeta_via_weighted_sum(1, 30);
    const auto z4 = zeta_via_weighted_sum(3, 30);
    // the displayed constant 4/21 in front of the m = 3 weighted sum
    const auto z4h = harmonic_polynomial_half_series(3, Weight::over_n, 30).value * Rational(Integer(4), Integer(21));
    const bool ok = honored(z5, zeta_euler_maclaurin(5, 40), 40) && honored(z5h, zeta_euler_maclaurin(5, 40), 40) &&
                    honored(z2, zeta_euler_maclaurin(2, 30), 30) && honored(z4, zeta_euler_maclaurin(4, 30), 30) &&
                    agree_to_digits(z4h, zeta_euler_maclaurin(4, 30), 30);
    return {ok, "zeta(5) " + z5.to_string(40)};
}

Outcome ac7() {
    const auto plain = snm_half_series(1, Weight::plain, 25).value;
    const auto weighted = snm_half_series(1, Weight::over_n, 25).value;
    const auto two_log2 = log2_reference(25) * Rational(2);
    const auto half_z2 = zeta_euler_maclaurin(2, 25) / Rational(2);
    const bool ok = honored(plain, two_log2, 25) && honored(weighted, half_z2, 25);
    return {ok, "sum H_n/2^n = " + plain.to_string(25)};
}

Outcome ac8() {
    bool ok = true;
    std::string detail;
    for (int m : {2, 3}) {
        const auto g = golden_ratio_check(m, 20);
        ok = ok && honored(g.series, g.closed_form, 20) && agree_to_digits(g.series, g.polylog, 20);
        detail += "m=" + std::to_string(m) + " " + g.series.to_string(20) + (m == 2 ? "; " : "");
    }
    return {ok, detail};
}

Outcome ac9() {
    bool ok = true;
    std::string detail;
    const Rational tol(Integer(1), Integer(10000));
    for (int m : {1, 2}) {
        const auto c = alternating_point_check(m, 10000, 3);
        ok = ok && c.difference <= tol && c.closed_form &&
             (c.partial_sum.center() - c.closed_form->center()).abs() <= tol;
        detail += "m=" + std::to_string(m) + " |diff| " + scientific_upper(c.difference) + (m == 1 ? "; " : "");
    }
    return {ok, detail};
}

// One randomly chosen computation at `digits`.
using Computation = std::function<ApproxReal(int digits)>;

Computation random_computation(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 6);
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1000, 5000);
    auto small = [&] { return Rational(Integer(num(rng)), Integer(den(rng))); };  // |x| <= 1/2
    switch (kind(rng)) {
        case 0: {
            const int m = std::uniform_int_distribution<int>(2, 6)(rng);
            return [m](int d) { return zeta_via_sum(m, d); };
        }
        case 1: {
            const int m = std::uniform_int_distribution<int>(1, 5)(rng);
            return [m](int d) { return zeta_via_weighted_sum(m, d); };
        }
        case 2: {
            const int m = std::uniform_int_distribution<int>(1, 4)(rng);
            const Rational x = small();
            return [m, x](int d) { return li_value(m, x, d); };
        }
        case 3: {
            const Rational x = small();
            const Rational y = small();
            return [x, y](int d) {
                return li_value(2, x, d) * li_value(1, y, d) + zeta_euler_maclaurin(3, d) * x;
            };
        }
        case 4: {
            const Rational a = small();
            return [a](int d) { return log2_reference(d) * a - sqrt5_reference(d) + pi_machin(d).pow(2) / Rational(6); };
        }
        case 5: {
            const int m = std::uniform_int_distribution<int>(2, 3)(rng);
            return [m](int d) { return golden_ratio_check(m, d).series; };
        }
        default: {
            const Rational a = small();
            const Rational b = small();
            const Rational c = small() + Rational(1);
            return [a, b, c](int d) {
                const int s = working_scale(d);
                const auto x = ApproxReal::from_rational(a, s) * ApproxReal::from_rational(b, s);
                return ((x + ApproxReal::from_rational(c, s)) / c).pow(3) - ApproxReal::from_rational(a, s);
            };
        }
    }
}

Outcome ac10() {
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<int> digits(10, 35);
    int inside = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto compute = random_computation(rng);
        const int d = digits(rng);
        const auto coarse = compute(d);
        const auto fine = compute(d + 10);
        if (coarse.contains(fine.center()) && overlaps(coarse, fine)) {
            ++inside;
        } else {
            return {false, "trial " + std::to_string(trial) + " at " + std::to_string(d) + " digits: " +
                               coarse.to_string(d) + " vs " + fine.to_string(d + 10)};
        }
    }
    return {true, std::to_string(inside) + "/100 re-runs inside the original interval"};
}

Outcome ac11() {
    const auto bridge = verify_stirling_bridge(12);
    bool ok = bridge.passed();
    int cases = 0;
    for (int m : {1, 2, 3}) {
        for (const Rational& x : {Rational(Integer(1), Integer(4)), Rational(Integer(-1), Integer(2))}) {
            const auto c = remark52_check(m, x, 20);
            Rational expected = 0;
            for (int n = 1; n <= m; ++n) expected += snm_direct(n, -m) * x.pow(n);
            const auto exact = ApproxReal::from_rational(c.finite_sum, working_scale(20));
            ok = ok && c.finite_sum == expected && honored(c.series, exact, 20) && c.series.contains(c.finite_sum);
            ++cases;
        }
    }
    return {ok, std::to_string(bridge.checks) + " bridge checks; " + std::to_string(cases) + " negative-order cases" +
                    report_failures({bridge})};
}

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;  // 0 means no runtime requirement
    Outcome (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "five-way S_n(m) agreement, n<=60, m<=6", 30, ac1},
        {"AC2", "generating-function coefficients, order 40, m=1..5", 10, ac2},
        {"AC3", "Boole/Gould finite differences, n<=20, 200 trials", 0, ac3},
        {"AC4", "finite identities n<=100, m<=5, curious resolution", 0, ac4},
        {"AC5", "zeta(3) harmonic form, N=250, 40 digits", 10, ac5},
        {"AC6", "zeta(5) to 40 digits, zeta(2) and zeta(4) to 30 digits", 0, ac6},
        {"AC7", "sum H_n/2^n = 2 log 2 and sum H_n/(n 2^n) = zeta(2)/2, 25 digits", 0, ac7},
        {"AC8", "golden-ratio sums, m=2,3, 20 digits", 0, ac8},
        {"AC9", "alternating point, 10^4 terms, 3 averaging passes, 1e-4", 0, ac9},
        {"AC10", "enclosure soundness, 100 random re-runs at +10 digits", 0, ac10},
        {"AC11", "Stirling bridge n<=12; negative-order sums to 20 digits", 0, ac11},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            o.ok = false;
            o.detail += "; runtime limit exceeded";
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << ' ' << c.title << " [" << timing
                  << (c.limit_seconds > 0 ? " < " + std::to_string(static_cast<int>(c.limit_seconds)) + "s" : "")
                  << "] " << o.detail << std::endl;
        if (!o.ok) ++failed;
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
    return failed == 0 ? 0 : 1;
}
