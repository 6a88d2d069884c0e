#include "harmsum/approx_real.hpp"

#include <algorithm>
#include <stdexcept>

namespace harmsum {

namespace {

// Nearest integer to num/den for den > 0, ties away from zero.
Integer round_div(const Integer& num, const Integer& den) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const Integer twice = 2 * abs(r);
    if (twice >= den) q += sgn(num);
    return q;
}

bool divides(const Integer& num, const Integer& den) { return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0; }

// ceil(num/den) for num >= 0, den > 0.
Integer ceil_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer ceil_scaled(const Rational& x, int scale) { return ceil_div(x.num() * pow10(scale), x.den()); }

Rational pow10_rational(int e) {
    return e >= 0 ? Rational(pow10(e)) : Rational(Integer(1), pow10(-e));
}

// e with 10^e <= x < 10^{e+1}, x > 0.
int floor_log10(const Rational& x) {
    int e = static_cast<int>(mpz_sizeinbase(x.num().get_mpz_t(), 10)) -
            static_cast<int>(mpz_sizeinbase(x.den().get_mpz_t(), 10));
    while (pow10_rational(e) > x) --e;
    while (pow10_rational(e + 1) <= x) ++e;
    return e;
}

}  // namespace

Integer pow10(int e) {
    if (e < 0) throw std::invalid_argument("pow10: negative exponent");
    return ipow(Integer(10), static_cast<unsigned long>(e));
}

ApproxReal::ApproxReal(Integer value, Integer error, int scale)
    : value_(std::move(value)), error_(std::move(error)), scale_(scale) {
    if (sgn(error_) < 0) throw std::invalid_argument("ApproxReal: negative error bound");
    if (scale_ < 0) throw std::invalid_argument("ApproxReal: negative scale");
}

ApproxReal ApproxReal::from_rational(const Rational& x, int scale) {
    const Integer scaled = x.num() * pow10(scale);
    return ApproxReal(round_div(scaled, x.den()), divides(scaled, x.den()) ? 0 : 1, scale);
}

ApproxReal ApproxReal::enclosing(const Rational& x, const Rational& radius, int scale) {
    return from_rational(x, scale).widened(radius);
}

Rational ApproxReal::center() const { return Rational(value_, pow10(scale_)); }

Rational ApproxReal::radius() const { return Rational(error_, pow10(scale_)); }

bool ApproxReal::contains(const Rational& x) const { return (x - center()).abs() <= radius(); }

bool ApproxReal::contains(const ApproxReal& inner) const {
    return inner.lower() >= lower() && inner.upper() <= upper();
}

ApproxReal ApproxReal::rescaled(int scale) const {
    if (scale >= scale_) {
        const Integer f = pow10(scale - scale_);
        return ApproxReal(value_ * f, error_ * f, scale);
    }
    const Integer f = pow10(scale_ - scale);
    const bool exact = divides(value_, f);
    return ApproxReal(round_div(value_, f), ceil_div(error_, f) + (exact ? 0 : 1), scale);
}

ApproxReal ApproxReal::widened(const Rational& extra_radius) const {
    if (extra_radius.sign() < 0) throw std::invalid_argument("ApproxReal::widened: negative radius");
    return ApproxReal(value_, error_ + ceil_scaled(extra_radius, scale_), scale_);
}

ApproxReal ApproxReal::operator-() const { return ApproxReal(-value_, error_, scale_); }

ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
    const int s = std::max(a.scale_, b.scale_);
    const ApproxReal x = a.rescaled(s);
    const ApproxReal y = b.rescaled(s);
    return ApproxReal(x.value_ + y.value_, x.error_ + y.error_, s);
}

ApproxReal operator-(const ApproxReal& a, const ApproxReal& b) { return a + (-b); }

ApproxReal operator*(const ApproxReal& a, const ApproxReal& b) {
    const int s = std::max(a.scale_, b.scale_);
    const ApproxReal x = a.rescaled(s);
    const ApproxReal y = b.rescaled(s);
    const Integer f = pow10(s);
    const Integer product = x.value_ * y.value_;
    // |xy - x0 y0| <= |x0| ey + |y0| ex + ex ey, in units of 10^{-2s}.
    const Integer spread = abs(x.value_) * y.error_ + abs(y.value_) * x.error_ + x.error_ * y.error_;
    return ApproxReal(round_div(product, f), ceil_div(spread, f) + (divides(product, f) ? 0 : 1), s);
}

ApproxReal operator*(const ApproxReal& a, const Rational& q) {
    const Integer product = a.value_ * q.num();
    const Integer spread = a.error_ * abs(q.num());
    return ApproxReal(round_div(product, q.den()),
                      ceil_div(spread, q.den()) + (divides(product, q.den()) ? 0 : 1), a.scale_);
}

ApproxReal operator/(const ApproxReal& a, const Rational& q) { return a * q.inverse(); }

ApproxReal ApproxReal::pow(unsigned exponent) const {
    ApproxReal result(pow10(scale_), 0, scale_);
    ApproxReal base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Integer ApproxReal::rounded_at(int digits) const {
    if (digits < 0) throw std::invalid_argument("ApproxReal: negative digit count");
    return digits >= scale_ ? Integer(value_ * pow10(digits - scale_)) : round_div(value_, pow10(scale_ - digits));
}

std::string ApproxReal::digits_string(int digits) const {
    const Integer r = rounded_at(digits);
    std::string body = Integer(abs(r)).get_str();
    if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits + 1) - body.size(), '0');
    if (digits > 0) body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    return (sgn(r) < 0 ? "-" : "") + body;
}

Rational ApproxReal::printed_radius(int digits) const {
    const Rational printed(rounded_at(digits), pow10(digits));
    return (center() - printed).abs() + radius();
}

std::string ApproxReal::bound_string(int digits) const { return scientific_upper(printed_radius(digits)); }

std::string ApproxReal::to_string(int digits) const {
    return digits_string(digits) + " ± " + bound_string(digits);
}

bool overlaps(const ApproxReal& a, const ApproxReal& b) {
    return (a.center() - b.center()).abs() <= a.radius() + b.radius();
}

int agreeing_digits(const Rational& difference) {
    if (difference.is_zero()) return 1 << 20;
    const Rational d = difference.abs();
    const int e = floor_log10(d);
    return d == pow10_rational(e) ? -e : -(e + 1);
}

std::string scientific_upper(const Rational& x) {
    if (x.sign() < 0) throw std::invalid_argument("scientific_upper: negative value");
    if (x.is_zero()) return "0";
    int e = floor_log10(x);
    // Two significant digits, rounded up: mantissa in [10, 100].
    const Rational scaled = x / pow10_rational(e - 1);
    Integer mantissa = ceil_div(scaled.num(), scaled.den());
    if (mantissa >= 100) {
        mantissa = 10;
        ++e;
    }
    const std::string m = mantissa.get_str();
    return m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(e);
}

}  // namespace harmsum
