#pragma once

// S_n(m) = sum_{k=1}^n C(n,k) (-1)^{k-1} / k^m by several independent routes.
//
// The recurrence table is the production path. The direct sum, chain
// enumeration, Bell polynomial and Newton identity routes are kept as
// cross-checks, and the closed forms cover m = 1..5.

#include <memory>
#include <vector>

#include "harmsum/exact.hpp"
#include "harmsum/harmonic.hpp"

namespace harmsum {

/// S_k(j) for 1 <= k <= n_max, 0 <= j <= m_max.
class SnmTable {
public:
    /// Fills the table with S_n(0) = 1, S_n(m) = S_{n-1}(m) + S_n(m-1)/n.
    /// Throws std::invalid_argument when n_max < 1 or m_max < 0.
    static SnmTable build(int n_max, int m_max);

    /// Wraps caller-supplied values without checking the recurrence. Used to
    /// inject faults when testing the verification suites.
    static SnmTable from_values(int n_max, int m_max, std::vector<Rational> values);

    int n_max() const { return n_max_; }
    int m_max() const { return m_max_; }

    /// S_k(j); throws std::out_of_range outside the table.
    const Rational& value(int k, int j) const;

    /// Row-major copy of all cells, k = 1..n_max outer, j = 0..m_max inner.
    const std::vector<Rational>& values() const { return values_; }

private:
    SnmTable(int n_max, int m_max, std::vector<Rational> values);
    int n_max_;
    int m_max_;
    std::vector<Rational> values_;
};

std::shared_ptr<const SnmTable> build_snm_table(int n_max, int m_max);

/// Literal alternating binomial sum. Negative m gives sum C(n,k)(-1)^{k-1} k^{|m|}.
Rational snm_direct(int n, int m);

/// Largest n + m accepted by snm_nested.
inline constexpr int kNestedLimit = 30;

/// Sum of 1/(r_1 ... r_m) over chains n >= r_1 >= ... >= r_m >= 1, enumerated
/// one chain at a time. Throws std::invalid_argument when n + m > kNestedLimit.
Rational snm_nested(int n, int m);

/// (1/m!) Y_m(0! H_n, 1! H_n^(2), ..., (m-1)! H_n^(m)) with Y the complete
/// Bell polynomial.
Rational snm_bell(int n, int m);

/// h_m(1, 1/2, ..., 1/n) from power sums p_i = H_n^(i) via m h_m = sum p_i h_{m-i}.
Rational snm_newton(int n, int m);

/// Harmonic-number closed forms for 1 <= m <= 5; throws std::invalid_argument otherwise.
Rational snm_closed_form(int n, int m);

/// Integer polynomial P_m(H) = m! S_n(m) in H_n^(1..m), e.g. P_3 = H^3 + 3 H H^(2) + 2 H^(3).
/// 1 <= m <= 5.
Rational harmonic_polynomial(int n, int m);
Rational harmonic_polynomial(const HarmonicTable& table, int n, int m);

/// Stirling numbers of the second kind by S(n,m) = m S(n-1,m) + S(n-1,m-1).
Integer stirling2(int n, int m);

/// (-1)^{m-1} snm_direct(m, -n) / m!, which equals stirling2(n, m) for m >= 1.
Rational stirling2_via_snm(int n, int m);

}  // namespace harmsum
