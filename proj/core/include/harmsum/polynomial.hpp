#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "harmsum/exact.hpp"

namespace harmsum {

/// Dense univariate polynomial over the rationals; coefficient i multiplies t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients and
/// no degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// a + b t
    static Polynomial linear(const Rational& a, const Rational& b);

    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of t^i; zero past the degree.
    Rational coefficient(std::size_t i) const;
    /// Requires a nonzero polynomial.
    const Rational& leading() const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// p(q(t))
    Polynomial compose(const Polynomial& inner) const;
    Polynomial pow(unsigned exponent) const;

    std::string to_string() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Rational poly_eval(const Polynomial& p, const Rational& x);

}  // namespace harmsum
