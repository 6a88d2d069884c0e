#include "doctest.h"

#include <string>

#include "harmsum/reference.hpp"
#include "harmsum/series.hpp"

using harmsum::ApproxReal;
using harmsum::Integer;
using harmsum::Rational;

namespace {

// Literal decimal expansion as an exact rational.
Rational decimal(const std::string& s) {
    const auto dot = s.find('.');
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    return Rational(Integer(digits, 10), harmsum::pow10(static_cast<int>(s.size() - dot - 1)));
}

// Agreement with a truncated literal of `places` decimals: |x - lit| <= 10^-places.
bool matches_literal(const ApproxReal& x, const std::string& lit) {
    const int places = static_cast<int>(lit.size() - lit.find('.') - 1);
    const Rational d = (x.center() - decimal(lit)).abs() - x.radius();
    return d <= Rational(Integer(1), harmsum::pow10(places));
}

const std::string kZeta3 = "1.20205690315959428539973816151144999076498629234049888179227";
const std::string kZeta5 = "1.03692775514336992633136548645703416805708091950191281197419";
const std::string kLog2 = "0.69314718055994530941723212145817656807550013436025525412068";
const std::string kPi = "3.14159265358979323846264338327950288419716939937510582097494";
const std::string kSqrt5 = "2.23606797749978969640917366873127623544061835961152572427089";

}  // namespace

TEST_CASE("Bernoulli numbers") {
    CHECK(harmsum::bernoulli(0) == 1);
    CHECK(harmsum::bernoulli(1) == Rational(Integer(-1), Integer(2)));
    CHECK(harmsum::bernoulli(2) == Rational(Integer(1), Integer(6)));
    CHECK(harmsum::bernoulli(3) == 0);
    CHECK(harmsum::bernoulli(12) == Rational(Integer(-691), Integer(2730)));
    CHECK(harmsum::bernoulli(20) == Rational(Integer(-174611), Integer(330)));
}

TEST_CASE("Euler-Maclaurin zeta against literal values") {
    const auto z3 = harmsum::zeta_euler_maclaurin(3, 55);
    CHECK(z3.radius() <= Rational(Integer(1), harmsum::pow10(55)));
    CHECK(matches_literal(z3, kZeta3));
    CHECK(matches_literal(harmsum::zeta_euler_maclaurin(5, 55), kZeta5));
}

TEST_CASE("even zeta values against Machin pi") {
    const auto pi = harmsum::pi_machin(60);
    CHECK(matches_literal(pi, kPi));
    const auto pi2 = pi * pi;
    const auto z2 = harmsum::zeta_euler_maclaurin(2, 50);
    const auto z4 = harmsum::zeta_euler_maclaurin(4, 50);
    CHECK(harmsum::agree_to_digits(z2, pi2 / Rational(6), 50));
    CHECK(harmsum::agree_to_digits(z4, pi2 * pi2 / Rational(90), 50));
    const auto z6 = harmsum::zeta_euler_maclaurin(6, 40);
    CHECK(harmsum::agree_to_digits(z6, pi2.pow(3) / Rational(945), 40));
}

TEST_CASE("logarithm and square-root references") {
    CHECK(matches_literal(harmsum::log2_reference(55), kLog2));
    CHECK(matches_literal(harmsum::sqrt5_reference(55), kSqrt5));
    CHECK(harmsum::isqrt_newton(Integer(99)) == 9);
    CHECK(harmsum::isqrt_newton(Integer(100)) == 10);
    CHECK(harmsum::isqrt_newton(Integer("1000000000000000000000000")) == Integer("1000000000000"));
    // rho^2 = 1 - rho and log rho < 0
    const auto rho = harmsum::rho_reference(40);
    CHECK(harmsum::agree_to_digits(rho * rho, ApproxReal::from_rational(Rational(1), 50) - rho, 38));
    CHECK(harmsum::log_rho_reference(30).upper() < Rational(0));
    // atanh(1/3) * 2 = log 2
    const auto third = ApproxReal::from_rational(Rational(Integer(1), Integer(3)), 50);
    CHECK(harmsum::agree_to_digits(harmsum::atanh_series(third) * Rational(2), harmsum::log2_reference(40), 38));
    // 4 atan(1) via two Machin terms equals pi
    const auto a5 = harmsum::atan_series(Rational(Integer(1), Integer(5)), 50);
    const auto a239 = harmsum::atan_series(Rational(Integer(1), Integer(239)), 50);
    CHECK(harmsum::agree_to_digits((a5 * Rational(4) - a239) * Rational(4), harmsum::pi_machin(45), 40));
}
