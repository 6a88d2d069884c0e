#include "doctest.h"

#include <stdexcept>

#include "harmsum/polynomial.hpp"

using harmsum::Integer;
using harmsum::Polynomial;
using harmsum::Rational;

TEST_CASE("trimming and degree") {
    CHECK_FALSE(Polynomial().degree().has_value());
    CHECK(Polynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0u);
    CHECK(Polynomial::monomial(Rational(3), 4).degree() == 4u);
    CHECK(Polynomial::monomial(Rational(0), 4).is_zero());
    CHECK_THROWS_AS(Polynomial().leading(), std::logic_error);
    CHECK(Polynomial::linear(Rational(2), Rational(5)).coefficient(7) == 0);
}

TEST_CASE("arithmetic and evaluation") {
    const auto p = Polynomial::linear(Rational(1), Rational(1));  // 1 + t
    const auto sq = p * p;
    CHECK(sq == Polynomial({Rational(1), Rational(2), Rational(1)}));
    CHECK(p.pow(5).coefficient(2) == 10);
    CHECK(p.pow(0) == Polynomial::constant(Rational(1)));
    CHECK((p + Rational(-1) * p).is_zero());
    CHECK(harmsum::poly_eval(p.pow(3), Rational(Integer(1), Integer(2))) == Rational(Integer(27), Integer(8)));
    CHECK(harmsum::poly_eval(Polynomial(), Rational(5)) == 0);
}

TEST_CASE("composition") {
    const auto p = Polynomial({Rational(0), Rational(0), Rational(1)});  // t^2
    const auto q = Polynomial::linear(Rational(1), Rational(2));         // 1 + 2t
    const auto pq = p.compose(q);
    CHECK(pq == Polynomial({Rational(1), Rational(4), Rational(4)}));
    for (int x = -3; x <= 3; ++x) {
        CHECK(harmsum::poly_eval(pq, Rational(x)) == harmsum::poly_eval(p, harmsum::poly_eval(q, Rational(x))));
    }
}

TEST_CASE("to_string") {
    CHECK(Polynomial().to_string() == "0");
    CHECK_FALSE(Polynomial({Rational(1), Rational(Integer(-1), Integer(2))}).to_string().empty());
}
