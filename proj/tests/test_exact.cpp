#include "doctest.h"

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "harmsum/exact.hpp"

using harmsum::Integer;
using harmsum::Rational;

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(Integer(6), Integer(-4)).to_string() == "-3/2");
    CHECK(Rational(Integer(0), Integer(7)).to_string() == "0");
    CHECK(Rational(Integer(0), Integer(-7)).den() == 1);
    CHECK(Rational::parse("10/4") == Rational(Integer(5), Integer(2)));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("3/-9").to_string() == "-1/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    const Rational a(Integer(1), Integer(3));
    const Rational b(Integer(-5), Integer(6));
    CHECK(a + b == Rational(Integer(-1), Integer(2)));
    CHECK(a - b == Rational(Integer(7), Integer(6)));
    CHECK(a * b == Rational(Integer(-5), Integer(18)));
    CHECK(a / b == Rational(Integer(-2), Integer(5)));
    CHECK(b.abs() == -b);
    CHECK(b.inverse() == Rational(Integer(-6), Integer(5)));
    CHECK(a.pow(3) == Rational(Integer(1), Integer(27)));
    CHECK(a.pow(-2) == Rational(9));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK(a > b);
    CHECK(b.sign() == -1);
    CHECK(Rational(4).is_integer());
    std::ostringstream os;
    os << b;
    CHECK(os.str() == "-5/6");
}

TEST_CASE("binomial against Pascal's triangle") {
    std::vector<std::vector<Integer>> pascal(61);
    for (int n = 0; n <= 60; ++n) {
        pascal[n].assign(n + 1, Integer(1));
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (int n = 0; n <= 60; ++n) {
        for (int k = 0; k <= n; ++k) REQUIRE(harmsum::binomial(n, k) == pascal[n][k]);
        CHECK(harmsum::binomial(n, -1) == 0);
        CHECK(harmsum::binomial(n, n + 1) == 0);
    }
    CHECK(harmsum::binomial(100, 50) == Integer("100891344545564193334812497256"));
}

TEST_CASE("factorial, ipow, sign_power") {
    CHECK(harmsum::factorial(0) == 1);
    CHECK(harmsum::factorial(20) == Integer("2432902008176640000"));
    CHECK(harmsum::ipow(Integer(3), 40) == Integer("12157665459056928801"));
    CHECK(harmsum::ipow(Integer(-2), 3) == -8);
    static_assert(harmsum::sign_power(0) == 1 && harmsum::sign_power(7) == -1);
}

TEST_CASE("forward difference kills polynomials of lower degree") {
    // a_k = k^3 has third difference 3! and vanishing higher ones.
    const harmsum::Sequence cube = [](std::int64_t k) { return Rational(Integer(Integer(k) * k * k)); };
    CHECK(harmsum::forward_difference_n(cube, 3) == Rational(6));
    for (int n = 4; n <= 12; ++n) CHECK(harmsum::forward_difference_n(cube, n).is_zero());
}

TEST_CASE("lemma sums on a constant sequence equal -H_n") {
    const harmsum::Sequence one = [](std::int64_t) { return Rational(1); };
    Rational h = 0;
    for (int n = 1; n <= 30; ++n) {
        h += Rational(Integer(1), Integer(n));
        CHECK(harmsum::lemma11_lhs(one, n) == -h);
        CHECK(harmsum::lemma11_rhs(one, n) == -h);
    }
}

TEST_CASE("lemma sums agree on random sequences") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> a(26);
        for (auto& x : a) x = Rational(Integer(d(rng)), Integer(1 + (d(rng) + 50) % 9));
        const harmsum::Sequence seq = [&](std::int64_t k) { return a.at(k); };
        for (int n = 1; n <= 25; ++n) REQUIRE(harmsum::lemma11_lhs(seq, n) == harmsum::lemma11_rhs(seq, n));
    }
}
