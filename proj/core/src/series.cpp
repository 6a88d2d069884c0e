#include "harmsum/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "harmsum/harmonic.hpp"
#include "harmsum/reference.hpp"
#include "harmsum/snm.hpp"

namespace harmsum {

namespace {

const Rational kHalf(Integer(1), Integer(2));

Rational ten_to_minus(int digits) { return Rational(Integer(1), pow10(digits)); }

// Tail target leaving room for rounding inside a 10^-digits radius.
Rational tail_target(int digits) { return ten_to_minus(digits) / 4; }

std::optional<Rational> try_harmonic_power_tail(int m, int cut, const Rational& x_abs, Weight weight) {
    const Rational growth = Rational(Integer(cut + 3), Integer(cut + 2)).pow(m);
    const Rational ratio = growth * x_abs;
    if (ratio >= Rational(1)) return std::nullopt;
    Rational first = harmonic(cut + 1, 1).pow(m) * x_abs.pow(cut + 1);
    if (weight == Weight::over_n) first /= Rational(cut + 1);
    return first / (Rational(1) - ratio);
}

// Smallest cut whose tail bound (times `multiplier`) meets the target.
int choose_cut(int m, const Rational& x_abs, Weight weight, const Rational& multiplier, const Rational& target) {
    for (int cut = 1;; ++cut) {
        const auto tail = try_harmonic_power_tail(m, cut, x_abs, weight);
        if (tail && *tail * multiplier < target) return cut;
        if (cut > 1'000'000) throw std::domain_error("choose_cut: no admissible truncation found");
    }
}

Rational power_of_two(int n) { return Rational(ipow(Integer(2), static_cast<unsigned long>(n))); }

// sum_{n=1}^{cut} numerator(n) / (w_n 2^n) in fixed point, widened by the tail.
template <class Numerator>
SeriesEvaluation half_series(int m, Weight weight, int digits, int terms, const Rational& multiplier,
                             const Numerator& numerator) {
    const Rational target = tail_target(digits);
    const int cut = terms > 0 ? terms : choose_cut(m, kHalf, weight, multiplier, target);
    const auto tail = try_harmonic_power_tail(m, cut, kHalf, weight);
    if (!tail) throw std::domain_error("half_series: cut " + std::to_string(cut) + " too small for a tail bound");
    const int scale = working_scale(digits);
    ApproxReal sum(0, 0, scale);
    for (int n = 1; n <= cut; ++n) {
        Rational term = numerator(n) / power_of_two(n);
        if (weight == Weight::over_n) term /= Rational(n);
        sum += ApproxReal::from_rational(term, scale);
    }
    const Rational tail_bound = *tail * multiplier;
    return SeriesEvaluation{sum.widened(tail_bound), cut, tail_bound};
}

}  // namespace

Rational harmonic_power_tail(int m, int cut, const Rational& x_abs, Weight weight) {
    if (m < 0 || cut < 0) throw std::invalid_argument("harmonic_power_tail: negative argument");
    auto tail = try_harmonic_power_tail(m, cut, x_abs, weight);
    if (!tail) throw std::domain_error("harmonic_power_tail: ratio bound not below 1 at cut " + std::to_string(cut));
    return *tail;
}

ApproxReal li_value(int m, const Rational& x, int digits) {
    if (x.abs() > kHalf) throw std::invalid_argument("li_value: |x| must be <= 1/2");
    return li_value(m, ApproxReal::from_rational(x, working_scale(digits)), digits);
}

ApproxReal li_value(int m, const ApproxReal& x, int digits) {
    if (m < 1) throw std::invalid_argument("li_value: m must be >= 1");
    if (digits < 1) throw std::invalid_argument("li_value: digits must be >= 1");
    const Rational x_max = x.magnitude_bound();
    if (x_max > kHalf) throw std::invalid_argument("li_value: |x| must be <= 1/2");
    const int scale = std::max(working_scale(digits), x.scale());
    const ApproxReal xs = x.rescaled(scale);
    const Rational target = tail_target(digits);
    ApproxReal sum(0, 0, scale);
    ApproxReal power = xs;
    Rational power_bound = x_max;  // >= |x|^k
    for (int k = 1;; ++k) {
        sum += power / Rational(ipow(Integer(k), static_cast<unsigned long>(m)));
        power_bound *= x_max;
        // sum_{j>k} |x|^j / j^m <= |x|^{k+1} / ((k+1)^m (1 - |x|))
        const Rational tail = power_bound / (Rational(ipow(Integer(k + 1), static_cast<unsigned long>(m))) *
                                             (Rational(1) - x_max));
        if (tail < target || x_max.is_zero()) return sum.widened(tail);
        power = power * xs;
    }
}

SeriesEvaluation snm_half_series(int m, Weight weight, int digits, int terms) {
    if (m < 1) throw std::invalid_argument("snm_half_series: m must be >= 1");
    if (digits < 1) throw std::invalid_argument("snm_half_series: digits must be >= 1");
    const int cut = terms > 0 ? terms : choose_cut(m, kHalf, weight, Rational(1), tail_target(digits));
    const auto table = build_snm_table(cut, m);
    auto numerator = [&](int n) { return table->value(n, m); };
    return half_series(m, weight, digits, cut, Rational(1), numerator);
}

SeriesEvaluation harmonic_polynomial_half_series(int m, Weight weight, int digits, int terms) {
    if (m < 1 || m > 5) throw std::invalid_argument("harmonic_polynomial_half_series: m must be in 1..5");
    if (digits < 1) throw std::invalid_argument("harmonic_polynomial_half_series: digits must be >= 1");
    const Rational multiplier(factorial(m));
    const Rational target = tail_target(digits);
    const int cut = terms > 0 ? terms : choose_cut(m, kHalf, weight, multiplier, target);
    const auto h = build_harmonic_table(cut, m);
    return half_series(m, weight, digits, cut, multiplier,
                       [&](int n) { return harmonic_polynomial(*h, n, m); });
}

ApproxReal zeta_via_sum(int m, int digits, int terms) {
    if (m < 2) throw std::invalid_argument("zeta_via_sum: m must be >= 2");
    const Rational factor(ipow(Integer(2), static_cast<unsigned long>(m - 2)),
                          Integer(ipow(Integer(2), static_cast<unsigned long>(m - 1)) - 1));
    return snm_half_series(m, Weight::plain, digits, terms).value * factor;
}

ApproxReal zeta_via_weighted_sum(int m, int digits, int terms) {
    if (m < 1) throw std::invalid_argument("zeta_via_weighted_sum: m must be >= 1");
    const Integer p = ipow(Integer(2), static_cast<unsigned long>(m));
    const Rational factor(p, Integer(p - 1));
    // factor <= 2, so one extra digit keeps the radius below 10^-digits.
    return snm_half_series(m, Weight::over_n, digits + 1, terms).value * factor;
}

ApproxReal zeta3_harmonic_form(int digits, int terms) {
    return harmonic_polynomial_half_series(3, Weight::plain, digits + 1, terms).value *
           Rational(Integer(1), Integer(9));
}

ApproxReal zeta5_harmonic_form(int digits, int terms) {
    return harmonic_polynomial_half_series(4, Weight::over_n, digits + 1, terms).value *
           Rational(Integer(2), Integer(45));
}

AlternatingCheck alternating_point_check(int m, int terms, int averaging_passes, int digits) {
    if (m < 1) throw std::invalid_argument("alternating_point_check: m must be >= 1");
    if (terms < 10) throw std::invalid_argument("alternating_point_check: terms must be >= 10");
    if (averaging_passes < 0 || averaging_passes >= terms) {
        throw std::invalid_argument("alternating_point_check: averaging passes must be in [0, terms)");
    }
    const int scale = working_scale(digits);
    const ApproxReal zero(0, 0, scale);

    // Fixed-point columns S_n(0..m) by the recurrence; exact tables at n ~ 10^4 are impractical.
    std::vector<ApproxReal> column(static_cast<std::size_t>(m) + 1, zero);
    std::vector<ApproxReal> partial;
    partial.reserve(static_cast<std::size_t>(terms));
    ApproxReal running = zero;
    const ApproxReal one(pow10(scale), 0, scale);
    for (int n = 1; n <= terms; ++n) {
        const Rational inv_n(Integer(1), Integer(n));
        column[0] = one;
        for (int j = 1; j <= m; ++j) column[j] = column[j] + column[j - 1] * inv_n;
        const ApproxReal term = column[m] * inv_n;
        running = (n % 2 == 0) ? running + term : running - term;
        partial.push_back(running);
    }
    // Only the last passes + 1 partial sums feed the final averaged value.
    std::vector<ApproxReal> window(partial.end() - (averaging_passes + 1), partial.end());
    for (int pass = 0; pass < averaging_passes; ++pass) {
        for (std::size_t i = 0; i + 1 < window.size(); ++i) window[i] = (window[i] + window[i + 1]) * kHalf;
        window.pop_back();
    }

    AlternatingCheck out;
    out.partial_sum = window.front();
    out.reference = -li_value(m + 1, kHalf, digits);
    if (m == 1 || m == 2) {
        const ApproxReal log2 = log2_reference(digits);
        const ApproxReal zeta2 = zeta_euler_maclaurin(2, digits);
        if (m == 1) {
            out.closed_form = -(zeta2 - log2 * log2) * kHalf;
        } else {
            const ApproxReal zeta3 = zeta_euler_maclaurin(3, digits);
            const ApproxReal inner = zeta3 * Rational(Integer(7), Integer(4)) - zeta2 * log2 +
                                     log2.pow(3) * Rational(Integer(1), Integer(3));
            out.closed_form = -inner * kHalf;
        }
    }
    out.difference = (out.partial_sum.center() - out.reference.center()).abs();
    return out;
}

GoldenCheck golden_ratio_check(int m, int digits) {
    if (m != 2 && m != 3) throw std::invalid_argument("golden_ratio_check: m must be 2 or 3");
    if (digits < 10) throw std::invalid_argument("golden_ratio_check: digits must be >= 10");
    const int scale = working_scale(digits);
    const ApproxReal rho = rho_reference(digits + 2);
    const ApproxReal log_rho = log_rho_reference(digits + 2);
    const ApproxReal zeta2 = zeta_euler_maclaurin(2, digits + 2);
    const ApproxReal zeta3 = zeta_euler_maclaurin(3, digits + 2);
    // Rational stand-in for rho in the tail bound, with enough headroom to keep denominators small.
    const Rational rho_upper(Integer(6181), Integer(10000));
    if (rho.upper() > rho_upper) throw std::logic_error("golden_ratio_check: rho enclosure too wide");

    // m = 2: 2 S_n(2)/n (-rho)^n. m = 3: 6 S_n(3) (-rho)^{n-1}, where 1/rho < 2.
    const Weight weight = m == 2 ? Weight::over_n : Weight::plain;
    const Rational multiplier = m == 2 ? Rational(2) : Rational(12);
    const int cut = choose_cut(m, rho_upper, weight, multiplier, tail_target(digits));
    const auto table = build_snm_table(cut, m);

    const ApproxReal x = -rho.rescaled(scale);
    ApproxReal power(pow10(scale), 0, scale);  // x^{n-1}
    ApproxReal sum(0, 0, scale);
    for (int n = 1; n <= cut; ++n) {
        if (m == 2) {
            power = power * x;
            sum += power * (Rational(2) * table->value(n, 2) / Rational(n));
        } else {
            sum += power * (Rational(6) * table->value(n, 3));
            power = power * x;
        }
    }
    const Rational tail = *try_harmonic_power_tail(m, cut, rho_upper, weight) * multiplier;

    GoldenCheck out;
    out.terms = cut;
    out.series = sum.widened(tail);
    const ApproxReal log3 = log_rho.pow(3);
    const ApproxReal li3 = li_value(3, rho * rho, digits + 2);
    if (m == 2) {
        out.closed_form = zeta3 * Rational(Integer(-8), Integer(5)) - zeta2 * log_rho * Rational(Integer(8), Integer(5)) +
                          log3 * Rational(Integer(4), Integer(3));
        out.polylog = li3 * Rational(-2);
    } else {
        out.closed_form = zeta3 * Rational(Integer(24), Integer(5)) + zeta2 * log_rho * Rational(Integer(24), Integer(5)) -
                          log3 * Rational(4);
        out.polylog = li3 * Rational(6);
    }
    return out;
}

Remark52Check remark52_check(int m, const Rational& x, int digits) {
    if (m < 1) throw std::invalid_argument("remark52_check: m must be >= 1");
    if (!(x > Rational(-1) && x < kHalf)) throw std::invalid_argument("remark52_check: x must lie in (-1, 1/2)");
    if (digits < 1) throw std::invalid_argument("remark52_check: digits must be >= 1");

    Remark52Check out;
    for (int n = 1; n <= m; ++n) out.finite_sum += snm_direct(n, -m) * x.pow(n);

    const Rational y = -x / (Rational(1) - x);
    const Rational y_abs = y.abs();
    const Rational prefactor = (x - Rational(1)).inverse();  // 1/(x-1)
    const Rational target = tail_target(digits);

    Rational partial;
    Rational y_power = 1;
    for (int k = 1;; ++k) {
        y_power *= y;
        partial += Rational(ipow(Integer(k), static_cast<unsigned long>(m))) * y_power;
        // Term ratio past k is at most ((k+2)/(k+1))^m |y|.
        const Rational ratio = Rational(Integer(k + 2), Integer(k + 1)).pow(m) * y_abs;
        if (ratio >= Rational(1) && !y.is_zero()) continue;
        const Rational first = Rational(ipow(Integer(k + 1), static_cast<unsigned long>(m))) * y_abs.pow(k + 1);
        const Rational tail = y.is_zero() ? Rational{} : first / (Rational(1) - ratio) * prefactor.abs();
        if (tail < target) {
            out.terms = k;
            out.series = ApproxReal::enclosing(partial * prefactor, tail, working_scale(digits));
            return out;
        }
    }
}

bool agree_to_digits(const ApproxReal& a, const ApproxReal& b, int digits) {
    return overlaps(a, b) && (a.center() - b.center()).abs() <= ten_to_minus(digits);
}

}  // namespace harmsum
