#include "harmsum/snm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "harmsum/harmonic.hpp"

namespace harmsum {

SnmTable::SnmTable(int n_max, int m_max, std::vector<Rational> values)
    : n_max_(n_max), m_max_(m_max), values_(std::move(values)) {}

SnmTable SnmTable::build(int n_max, int m_max) {
    if (n_max < 1) throw std::invalid_argument("SnmTable: n_max must be >= 1");
    if (m_max < 0) throw std::invalid_argument("SnmTable: m_max must be >= 0");
    const std::size_t width = static_cast<std::size_t>(m_max) + 1;
    std::vector<Rational> v(static_cast<std::size_t>(n_max) * width);
    for (int k = 1; k <= n_max; ++k) {
        const std::size_t row = static_cast<std::size_t>(k - 1) * width;
        v[row] = 1;
        const Rational inv_k(Integer(1), Integer(k));
        for (int j = 1; j <= m_max; ++j) {
            const Rational above = k > 1 ? v[row - width + j] : Rational{};
            v[row + j] = above + v[row + j - 1] * inv_k;
        }
    }
    return SnmTable(n_max, m_max, std::move(v));
}

SnmTable SnmTable::from_values(int n_max, int m_max, std::vector<Rational> values) {
    if (n_max < 1 || m_max < 0 ||
        values.size() != static_cast<std::size_t>(n_max) * static_cast<std::size_t>(m_max + 1)) {
        throw std::invalid_argument("SnmTable::from_values: size mismatch");
    }
    return SnmTable(n_max, m_max, std::move(values));
}

const Rational& SnmTable::value(int k, int j) const {
    if (k < 1 || k > n_max_ || j < 0 || j > m_max_) {
        throw std::out_of_range("SnmTable: (" + std::to_string(k) + ", " + std::to_string(j) +
                                ") outside table");
    }
    return values_[static_cast<std::size_t>(k - 1) * (m_max_ + 1) + j];
}

std::shared_ptr<const SnmTable> build_snm_table(int n_max, int m_max) {
    return std::make_shared<const SnmTable>(SnmTable::build(n_max, m_max));
}

Rational snm_direct(int n, int m) {
    if (n < 1) throw std::invalid_argument("snm_direct: n must be >= 1");
    Rational sum;
    Integer c = n;  // C(n, k)
    for (int k = 1; k <= n; ++k) {
        const Integer power = ipow(Integer(k), static_cast<unsigned long>(m < 0 ? -m : m));
        const Rational term = m >= 0 ? Rational(c, power) : Rational(Integer(c * power));
        if (k % 2 == 1) sum += term; else sum -= term;
        c *= n - k;
        c /= k + 1;
    }
    return sum;
}

namespace {

// Walks every chain bound >= r_1 >= ... >= r_depth >= 1. `quotient` carries
// D / (r_1 ... r_j) for the common denominator D = lcm(1..n)^m.
void walk_chains(int depth, int bound, const Integer& quotient, Integer& total) {
    if (depth == 0) {
        total += quotient;
        return;
    }
    Integer next;
    for (int r = 1; r <= bound; ++r) {
        mpz_divexact_ui(next.get_mpz_t(), quotient.get_mpz_t(), static_cast<unsigned long>(r));
        walk_chains(depth - 1, r, next, total);
    }
}

}  // namespace

Rational snm_nested(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("snm_nested: need n >= 1, m >= 0");
    if (n + m > kNestedLimit) {
        throw std::invalid_argument("snm_nested: n + m = " + std::to_string(n + m) +
                                    " exceeds the enumeration limit " + std::to_string(kNestedLimit));
    }
    Integer lcm = 1;
    for (int r = 2; r <= n; ++r) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(r));
    const Integer denominator = ipow(lcm, static_cast<unsigned long>(m));
    Integer total = 0;
    walk_chains(m, n, denominator, total);
    return Rational(total, denominator);
}

Rational snm_bell(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("snm_bell: need n >= 1, m >= 0");
    // x_j = (j-1)! H_n^(j)
    std::vector<Rational> x(static_cast<std::size_t>(m) + 1);
    for (int j = 1; j <= m; ++j) x[j] = Rational(factorial(j - 1)) * harmonic(n, j);
    std::vector<Rational> y(static_cast<std::size_t>(m) + 1);
    y[0] = 1;
    for (int r = 0; r < m; ++r) {
        Rational acc;
        for (int j = 0; j <= r; ++j) acc += Rational(binomial(r, j)) * y[r - j] * x[j + 1];
        y[r + 1] = acc;
    }
    return y[m] / Rational(factorial(m));
}

Rational snm_newton(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("snm_newton: need n >= 1, m >= 0");
    std::vector<Rational> h(static_cast<std::size_t>(m) + 1);
    h[0] = 1;
    for (int k = 1; k <= m; ++k) {
        Rational acc;
        for (int i = 1; i <= k; ++i) acc += harmonic(n, i) * h[k - i];
        h[k] = acc / Rational(k);
    }
    return h[m];
}

Rational snm_closed_form(int n, int m) {
    if (n < 1) throw std::invalid_argument("snm_closed_form: n must be >= 1");
    const Rational h1 = harmonic(n, 1);
    switch (m) {
        case 1:
            return h1;
        case 2:
            return h1.pow(2) / 2 + harmonic(n, 2) / 2;
        case 3:
            return h1.pow(3) / 6 + h1 * harmonic(n, 2) / 2 + harmonic(n, 3) / 3;
        case 4:
        case 5:
            return harmonic_polynomial(n, m) / Rational(factorial(m));
        default:
            throw std::invalid_argument("snm_closed_form: m must be in 1..5, got " + std::to_string(m));
    }
}

namespace {

template <class H>
Rational harmonic_polynomial_of(int m, const H& h) {
    const Rational h1 = h(1);
    switch (m) {
        case 1:
            return h1;
        case 2:
            return h1.pow(2) + h(2);
        case 3:
            return h1.pow(3) + 3 * h1 * h(2) + 2 * h(3);
        case 4: {
            const Rational h2 = h(2);
            return h1.pow(4) + 6 * h1.pow(2) * h2 + 8 * h1 * h(3) + 3 * h2.pow(2) + 6 * h(4);
        }
        case 5: {
            const Rational h2 = h(2);
            const Rational h3 = h(3);
            return h1.pow(5) + 10 * h1.pow(3) * h2 + 20 * h1.pow(2) * h3 + 15 * h1 * h2.pow(2) +
                   30 * h1 * h(4) + 20 * h2 * h3 + 24 * h(5);
        }
        default:
            throw std::invalid_argument("harmonic_polynomial: m must be in 1..5, got " + std::to_string(m));
    }
}

}  // namespace

Rational harmonic_polynomial(int n, int m) {
    if (n < 0) throw std::invalid_argument("harmonic_polynomial: n must be >= 0");
    return harmonic_polynomial_of(m, [n](int r) { return harmonic(n, r); });
}

Rational harmonic_polynomial(const HarmonicTable& table, int n, int m) {
    return harmonic_polynomial_of(m, [&](int r) { return table.value(n, r); });
}

Integer stirling2(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("stirling2: negative argument");
    if (m > n) return 0;
    std::vector<Integer> row(static_cast<std::size_t>(m) + 1);  // row[j] = S(i, j)
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, m); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[m];
}

Rational stirling2_via_snm(int n, int m) {
    if (m < 1) throw std::invalid_argument("stirling2_via_snm: m must be >= 1");
    const Rational s = snm_direct(m, -n) / Rational(factorial(m));
    return sign_power(m - 1) > 0 ? s : -s;
}

}  // namespace harmsum
