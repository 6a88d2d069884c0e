#include "doctest.h"

#include <memory>
#include <stdexcept>

#include "harmsum/identities.hpp"

using harmsum::Integer;
using harmsum::Rational;

namespace {

Rational h(int n, int r) {
    Rational s = 0;
    for (int k = 1; k <= n; ++k) s += Rational(Integer(1), harmsum::ipow(Integer(k), r));
    return s;
}

// Copy of a correct table with S_k(j) replaced by value + 1/10^6.
std::shared_ptr<const harmsum::SnmTable> corrupted(int n_max, int m_max, int k, int j) {
    auto values = harmsum::SnmTable::build(n_max, m_max).values();
    values.at(static_cast<std::size_t>((k - 1) * (m_max + 1) + j)) += Rational(Integer(1), Integer(1000000));
    return std::make_shared<const harmsum::SnmTable>(harmsum::SnmTable::from_values(n_max, m_max, values));
}

}  // namespace

TEST_CASE("every suite passes on its default range") {
    for (const auto& r : harmsum::run_all_suites(harmsum::SuiteConfig{})) {
        INFO(harmsum::to_text(r));
        CHECK(r.passed());
        CHECK(r.checks > 0);
        CHECK_FALSE(r.counterexample.has_value());
    }
}

TEST_CASE("empty config and unknown names") {
    CHECK(harmsum::run_all_suites(harmsum::SuiteConfig::empty()).empty());
    CHECK_THROWS_AS(harmsum::run_suite("nope", harmsum::SuiteConfig{}), std::invalid_argument);
    CHECK(harmsum::suite_names().size() == 10);
}

TEST_CASE("curious identity: minus form matches direct summation") {
    for (int n = 1; n <= 12; ++n) {
        Rational lhs = 0;
        for (int k = 1; k <= n; ++k) lhs += h(k, 1) * h(k - 1, 1) / Rational(k);
        CHECK(lhs == (h(n, 1).pow(3) - h(n, 3)) / Rational(3));
    }
    CHECK(harmsum::verify_curious(100).passed());
}

TEST_CASE("curious identity: plus form fails at n = 1") {
    const auto r = harmsum::verify_curious(10, harmsum::CuriousForm::printed);
    REQUIRE_FALSE(r.passed());
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->inputs.rfind("n=1;", 0) == 0);
    CHECK(r.counterexample->lhs == 0);
    CHECK(r.counterexample->rhs == Rational(Integer(2), Integer(3)));
}

TEST_CASE("fault injection is detected with a counterexample") {
    harmsum::SuiteContext ctx;
    ctx.snm = corrupted(60, 6, 17, 3);
    const auto five = harmsum::verify_five_way(60, 6, ctx);
    CHECK_FALSE(five.passed());
    REQUIRE(five.counterexample.has_value());
    CHECK(five.counterexample->inputs.find("17") != std::string::npos);
    CHECK(five.counterexample->lhs != five.counterexample->rhs);

    ctx.snm = corrupted(100, 5, 40, 2);
    CHECK_FALSE(harmsum::verify_dilcher(100, 5, ctx).passed());
    CHECK_FALSE(harmsum::verify_corollary22(100, 5, ctx).passed());
    CHECK_FALSE(harmsum::verify_bang(100, ctx).passed());

    ctx.snm = corrupted(100, 5, 40, 1);
    CHECK_FALSE(harmsum::verify_sun_zhao(100, ctx).passed());
}

TEST_CASE("randomized suites are reproducible") {
    const auto a = harmsum::verify_boole_gould(12, 40, 99);
    const auto b = harmsum::verify_boole_gould(12, 40, 99);
    CHECK(a.passed());
    CHECK(a.checks == b.checks);
    CHECK(a.seed == std::optional<std::uint64_t>(99));
    CHECK(harmsum::verify_lemma11(20, 30, 5).passed());
}

TEST_CASE("report formatting") {
    const auto pass = harmsum::verify_bang(10);
    const auto text = harmsum::to_text(pass);
    CHECK(text.rfind("PASS bang", 0) == 0);
    const auto fail = harmsum::verify_curious(3, harmsum::CuriousForm::printed);
    const auto ftext = harmsum::to_text(fail);
    CHECK(ftext.rfind("FAIL curious_printed", 0) == 0);
    CHECK(ftext.find("2/3") != std::string::npos);
    const auto csv = harmsum::to_csv_record(fail);
    CHECK(csv.find("curious_printed,") == 0);
    CHECK(csv.find(",fail,") != std::string::npos);
    CHECK(harmsum::report_csv_header() == "name,range,status,checks,seed,inputs,lhs,rhs,note");
}

TEST_CASE("Bang's sum is the m = 2 forward form") {
    const auto s = harmsum::SnmTable::build(100, 2);
    for (int n = 1; n <= 100; ++n) {
        Rational bang = 0;
        Rational forward = 0;
        Rational inner = 0;
        for (int k = 1; k <= n; ++k) {
            inner += h(k, 1) / Rational(k);
            const Rational c(Integer(harmsum::binomial(n, k) * harmsum::sign_power(k - 1)));
            bang += c * inner / Rational(k);
            forward += c * s.value(k, 2) / Rational(k);
        }
        REQUIRE(bang == forward);
        REQUIRE(bang == h(n, 3));
    }
    CHECK(harmsum::verify_bang(100).passed());
    CHECK(harmsum::verify_corollary22(100, 2).passed());
}
