#pragma once

#include <vector>

#include "harmsum/exact.hpp"

namespace harmsum {

/// Truncated power series c_0 + c_1 x + ... + c_N x^N over the rationals.
/// All arithmetic is modulo x^{N+1}.
class PowerSeries {
public:
    /// Zero series of the given order.
    explicit PowerSeries(int order);
    /// Coefficient list of length order + 1.
    explicit PowerSeries(std::vector<Rational> coefficients);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    Rational& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& coefficients() const { return c_; }

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

private:
    std::vector<Rational> c_;
};

/// Li_m(x) = sum_{k>=1} x^k / k^m truncated at order N.
PowerSeries ps_polylog(int m, int order);

/// 1/(1-x) truncated at order N.
PowerSeries ps_geometric(int order);

/// Truncated Cauchy product; orders must match.
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

/// outer(inner(x)) by Horner's scheme; requires inner[0] == 0 and matching orders.
PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner);

/// Coefficients 0..N of -(1/(1-x)) Li_m(-x/(1-x)); coefficient n is S_n(m).
std::vector<Rational> gf_coefficients(int m, int order);

/// Coefficients 0..N of -Li_{m+1}(-x/(1-x)); coefficient n is S_n(m)/n.
std::vector<Rational> gf_integrated_coefficients(int m, int order);

}  // namespace harmsum
