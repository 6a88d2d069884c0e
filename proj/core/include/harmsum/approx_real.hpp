#pragma once

#include <string>

#include "harmsum/exact.hpp"

namespace harmsum {

/// A decimal fixed-point enclosure: the represented quantity lies in
/// [(value - error) / 10^scale, (value + error) / 10^scale].
///
/// Every operation widens `error` conservatively, including one unit in the
/// last place for each rounding of the center, so any chain of operations
/// yields a rigorous enclosure.
class ApproxReal {
public:
    ApproxReal() = default;
    /// Throws std::invalid_argument for negative error or scale.
    ApproxReal(Integer value, Integer error, int scale);

    /// Nearest fixed-point value; error is 0 when exact and 1 ulp otherwise.
    static ApproxReal from_rational(const Rational& x, int scale);
    /// Center x with radius at least `radius` (rounded outward).
    static ApproxReal enclosing(const Rational& x, const Rational& radius, int scale);

    const Integer& value() const { return value_; }
    const Integer& error() const { return error_; }
    int scale() const { return scale_; }

    Rational center() const;
    Rational radius() const;
    Rational lower() const { return center() - radius(); }
    Rational upper() const { return center() + radius(); }
    /// Upper bound on |x| for every x in the enclosure.
    Rational magnitude_bound() const { return center().abs() + radius(); }

    bool contains(const Rational& x) const;
    bool contains(const ApproxReal& inner) const;

    /// Same quantity at another scale; coarsening rounds and widens by 1 ulp.
    ApproxReal rescaled(int scale) const;
    ApproxReal widened(const Rational& extra_radius) const;

    ApproxReal operator-() const;
    friend ApproxReal operator+(const ApproxReal& a, const ApproxReal& b);
    friend ApproxReal operator-(const ApproxReal& a, const ApproxReal& b);
    friend ApproxReal operator*(const ApproxReal& a, const ApproxReal& b);
    /// Multiplication by an exact rational.
    friend ApproxReal operator*(const ApproxReal& a, const Rational& q);
    friend ApproxReal operator*(const Rational& q, const ApproxReal& a) { return a * q; }
    /// Division by an exact nonzero rational.
    friend ApproxReal operator/(const ApproxReal& a, const Rational& q);
    ApproxReal& operator+=(const ApproxReal& b) { return *this = *this + b; }

    ApproxReal pow(unsigned exponent) const;

    /// Rounds to `digits` decimals and appends the bound that covers the
    /// printed value: e.g. "1.2020569031 ± 4.6e-11".
    std::string to_string(int digits) const;
    /// Only the rounded decimal, without the bound.
    std::string digits_string(int digits) const;
    /// Bound covering the value printed by digits_string(digits), in
    /// two-significant-digit scientific notation rounded up.
    std::string bound_string(int digits) const;
    /// Exact radius of the enclosure around digits_string(digits).
    Rational printed_radius(int digits) const;

private:
    Integer rounded_at(int digits) const;

    Integer value_ = 0;
    Integer error_ = 0;
    int scale_ = 0;
};

/// True when the two enclosures share at least one point.
bool overlaps(const ApproxReal& a, const ApproxReal& b);

/// 10^e as an integer.
Integer pow10(int e);

/// Largest k with |difference| <= 10^{-k}; a large sentinel for zero.
int agreeing_digits(const Rational& difference);

/// Rounded scientific rendering with two significant digits, rounded up: "4.6e-11".
std::string scientific_upper(const Rational& x);

}  // namespace harmsum
