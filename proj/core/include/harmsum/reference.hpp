#pragma once

// Independently derived reference constants with rigorous enclosures. None of
// these touch the S_n(m) machinery, so they can serve as oracles for it.

#include "harmsum/approx_real.hpp"
#include "harmsum/exact.hpp"

namespace harmsum {

/// Extra decimal places carried beyond the requested digits.
inline constexpr int kGuardDigits = 10;

inline int working_scale(int digits) { return digits + kGuardDigits; }

/// Bernoulli number B_n (B_1 = -1/2), exact.
Rational bernoulli(int n);

/// zeta(s) for integer s >= 2 by Euler-Maclaurin summation with an explicit
/// remainder bound; radius below 10^-digits.
ApproxReal zeta_euler_maclaurin(int s, int digits);

/// atanh(u) = sum u^{2j+1}/(2j+1) for an enclosure with |u| <= 1/2.
ApproxReal atanh_series(const ApproxReal& u);

/// atan(x) for exact |x| <= 1/2 by the alternating Taylor series.
ApproxReal atan_series(const Rational& x, int scale);

/// log 2 = 2 atanh(1/3).
ApproxReal log2_reference(int digits);

/// floor(sqrt(n)) by Newton iteration, with the bracket s^2 <= n < (s+1)^2 checked.
Integer isqrt_newton(const Integer& n);

ApproxReal sqrt5_reference(int digits);

/// rho = (sqrt 5 - 1)/2.
ApproxReal rho_reference(int digits);

/// log rho = -2 atanh(sqrt 5 - 2).
ApproxReal log_rho_reference(int digits);

/// pi = 16 atan(1/5) - 4 atan(1/239).
ApproxReal pi_machin(int digits);

}  // namespace harmsum
