#include "harmsum/power_series.hpp"

#include <stdexcept>
#include <string>

namespace harmsum {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    c_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("PowerSeries: need at least one coefficient");
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* what) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(what) + ": order mismatch " + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
    }
}

// -x/(1-x) = -x - x^2 - ...
PowerSeries negated_shift(int order) {
    PowerSeries s(order);
    for (int j = 1; j <= order; ++j) s[j] = -1;
    return s;
}

}  // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b, "ps_add");
    PowerSeries r = a;
    for (int i = 0; i <= a.order(); ++i) r[i] += b[i];
    return r;
}

PowerSeries ps_polylog(int m, int order) {
    if (m < 1) throw std::invalid_argument("ps_polylog: m must be >= 1");
    PowerSeries s(order);
    for (int k = 1; k <= order; ++k) s[k] = Rational(Integer(1), ipow(Integer(k), static_cast<unsigned long>(m)));
    return s;
}

PowerSeries ps_geometric(int order) {
    PowerSeries s(order);
    for (int k = 0; k <= order; ++k) s[k] = 1;
    return s;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b, "ps_mul");
    const int n = a.order();
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner) {
    require_same_order(outer, inner, "ps_compose");
    if (!inner[0].is_zero()) throw std::invalid_argument("ps_compose: inner series must have zero constant term");
    const int n = outer.order();
    PowerSeries r(n);
    for (int i = n; i >= 0; --i) {
        r = ps_mul(r, inner);
        r[0] += outer[i];
    }
    return r;
}

std::vector<Rational> gf_coefficients(int m, int order) {
    if (order < 1) throw std::invalid_argument("gf_coefficients: order must be >= 1");
    const PowerSeries li = ps_compose(ps_polylog(m, order), negated_shift(order));
    return (-ps_mul(ps_geometric(order), li)).coefficients();
}

std::vector<Rational> gf_integrated_coefficients(int m, int order) {
    if (order < 1) throw std::invalid_argument("gf_integrated_coefficients: order must be >= 1");
    return (-ps_compose(ps_polylog(m + 1, order), negated_shift(order))).coefficients();
}

}  // namespace harmsum
