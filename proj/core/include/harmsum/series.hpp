#pragma once

// High-precision evaluation of polylogarithms and of the geometric series in
// S_n(m) that accelerate zeta(m), with rigorous error bounds.
//
// Tail bounds for the S_n(m) series use S_n(m) <= H_n^m together with
// H_{n+1}/H_n <= 1 + 1/(n+1): past the cut N every term ratio is at most
// r = (1 + 1/(N+2))^m |x|, so the tail is at most first_omitted / (1 - r).

#include <optional>

#include "harmsum/approx_real.hpp"
#include "harmsum/exact.hpp"

namespace harmsum {

enum class Weight {
    plain,    // sum S_n(m) x^n
    over_n    // sum S_n(m) x^n / n
};

struct SeriesEvaluation {
    ApproxReal value;
    int terms = 0;          // summed n = 1..terms
    Rational tail_bound;    // included in value's radius
};

/// Upper bound for sum_{n > cut} C_n H_n^m x^n (C_n = 1, or 1/n for Weight::over_n)
/// given |x| <= x_abs. Throws std::domain_error when the ratio bound is not below 1.
Rational harmonic_power_tail(int m, int cut, const Rational& x_abs, Weight weight);

/// Li_m(x) = sum x^k/k^m for exact |x| <= 1/2; throws std::invalid_argument otherwise.
ApproxReal li_value(int m, const Rational& x, int digits);

/// Li_m(x) for an enclosure with |x| <= 1/2.
ApproxReal li_value(int m, const ApproxReal& x, int digits);

/// sum_{n>=1} S_n(m) / 2^n (plain) or S_n(m) / (n 2^n) (over_n). With terms = 0
/// the cut is the smallest meeting 10^-digits; otherwise exactly `terms` terms.
SeriesEvaluation snm_half_series(int m, Weight weight, int digits, int terms = 0);

/// Same sums with the numerator written as the harmonic polynomial P_m(H_n) = m! S_n(m),
/// computed from harmonic numbers only. 1 <= m <= 5.
SeriesEvaluation harmonic_polynomial_half_series(int m, Weight weight, int digits, int terms = 0);

/// zeta(m) = 2^{m-2}/(2^{m-1}-1) sum S_n(m)/2^n, m >= 2.
ApproxReal zeta_via_sum(int m, int digits, int terms = 0);

/// zeta(m+1) = 2^m/(2^m-1) sum S_n(m)/(n 2^n), m >= 1.
ApproxReal zeta_via_weighted_sum(int m, int digits, int terms = 0);

/// zeta(3) = (1/9) sum (H_n^3 + 3 H_n H_n^(2) + 2 H_n^(3)) / 2^n.
ApproxReal zeta3_harmonic_form(int digits, int terms = 0);

/// zeta(5) = (2/45) sum (H_n^4 + 6 H_n^2 H_n^(2) + 8 H_n H_n^(3) + 3 (H_n^(2))^2 + 6 H_n^(4)) / (n 2^n).
ApproxReal zeta5_harmonic_form(int digits, int terms = 0);

struct AlternatingCheck {
    ApproxReal partial_sum;   // sum_{n<=terms} (-1)^n S_n(m)/n, after averaging
    ApproxReal reference;     // -Li_{m+1}(1/2)
    std::optional<ApproxReal> closed_form;  // m = 1, 2 in terms of zeta(2), zeta(3), log 2
    Rational difference;      // |partial_sum - reference| between centers
};

/// The x = -1 boundary of sum S_n(m) x^n / n = -Li_{m+1}(-x/(1-x)). Converges only
/// conditionally, so partial_sum carries rounding error but no truncation bound.
/// The partial-sum sequence is replaced by its pairwise averages
/// `averaging_passes` times (0 disables acceleration). Requires terms >= 10.
AlternatingCheck alternating_point_check(int m, int terms, int averaging_passes, int digits = 30);

struct GoldenCheck {
    ApproxReal series;        // direct summation at x = -rho
    ApproxReal closed_form;   // zeta(3), zeta(2) log rho, log^3 rho combination
    ApproxReal polylog;       // the same quantity through Li_3(rho^2)
    int terms = 0;
};

/// m = 2: sum (H_n^2 + H_n^(2)) (-rho)^n / n = -2 Li_3(rho^2).
/// m = 3: sum (H_n^3 + 3 H_n H_n^(2) + 2 H_n^(3)) (-rho)^{n-1} = 6 Li_3(rho^2).
GoldenCheck golden_ratio_check(int m, int digits);

struct Remark52Check {
    Rational finite_sum;      // sum_{n=1}^m S_n(-m) x^n, exact
    ApproxReal series;        // (1/(x-1)) sum_{k>=1} k^m (-x/(1-x))^k
    int terms = 0;
};

/// Requires -1 < x < 1/2 and m >= 1.
Remark52Check remark52_check(int m, const Rational& x, int digits);

/// Both enclosures overlap and their centers differ by at most 10^-digits.
bool agree_to_digits(const ApproxReal& a, const ApproxReal& b, int digits);

}  // namespace harmsum
