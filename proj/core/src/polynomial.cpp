#include "harmsum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace harmsum {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial({a, b}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational{};
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * inner + constant(*it);
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial r = constant(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) r = r * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs_[i].to_string() + ")";
        if (i > 0) s += "*t^" + std::to_string(i);
    }
    return s;
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
    Rational r;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace harmsum
