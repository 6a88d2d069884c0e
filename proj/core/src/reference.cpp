#include "harmsum/reference.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace harmsum {

namespace {

Rational rising(int s, int j) {
    Integer r = 1;
    for (int i = 0; i < j; ++i) r *= s + i;
    return Rational(r);
}

Rational inverse_power(int n, int e) { return Rational(Integer(1), ipow(Integer(n), static_cast<unsigned long>(e))); }

Rational ten_to_minus(int digits) { return Rational(Integer(1), pow10(digits)); }

}  // namespace

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard lock(mutex);
    while (static_cast<int>(cache.size()) <= n) {
        const int k = static_cast<int>(cache.size());
        Rational acc;
        for (int j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(k + 1));
    }
    return cache[n];
}

ApproxReal zeta_euler_maclaurin(int s, int digits) {
    if (s < 2) throw std::invalid_argument("zeta_euler_maclaurin: s must be >= 2");
    if (digits < 1) throw std::invalid_argument("zeta_euler_maclaurin: digits must be >= 1");
    const Rational target = ten_to_minus(digits) / 4;
    int n_cut = std::max(10, digits);
    for (;;) {
        // Remainder after the B_{2q} correction:
        // |B_{2q}|/(2q)! (s)_{2q} N^{1-s-2q} / (s+2q-1).
        Rational previous;
        int q = 1;
        bool found = false;
        for (; q <= 4 * n_cut; ++q) {
            const Rational bound = bernoulli(2 * q).abs() / Rational(factorial(2 * q)) * rising(s, 2 * q) *
                                   inverse_power(n_cut, s + 2 * q - 1) / Rational(s + 2 * q - 1);
            if (bound < target) {
                found = true;
                previous = bound;
                break;
            }
            if (q > 1 && bound >= previous) break;
            previous = bound;
        }
        if (!found) {
            n_cut *= 2;
            continue;
        }
        Rational sum;
        for (int n = 1; n < n_cut; ++n) sum += inverse_power(n, s);
        sum += inverse_power(n_cut, s - 1) / Rational(s - 1);
        sum += inverse_power(n_cut, s) / 2;
        for (int k = 1; k <= q; ++k) {
            sum += bernoulli(2 * k) / Rational(factorial(2 * k)) * rising(s, 2 * k - 1) *
                   inverse_power(n_cut, s + 2 * k - 1);
        }
        return ApproxReal::enclosing(sum, previous, working_scale(digits));
    }
}

ApproxReal atanh_series(const ApproxReal& u) {
    const Rational u_max = u.magnitude_bound();
    if (u_max > Rational(Integer(1), Integer(2))) throw std::invalid_argument("atanh_series: |u| must be <= 1/2");
    const int scale = u.scale();
    const Rational target = ten_to_minus(scale);
    const ApproxReal u2 = u * u;
    ApproxReal power = u;
    ApproxReal sum(0, 0, scale);
    Rational power_bound = u_max;  // >= |u|^{2j+1}
    const Rational u2_max = u_max * u_max;
    for (int j = 0;; ++j) {
        sum += power / Rational(2 * j + 1);
        power = power * u2;
        power_bound *= u2_max;
        // sum_{i>j} |u|^{2i+1}/(2i+1) <= |u|^{2j+3} / ((2j+3)(1-u^2))
        const Rational tail = power_bound / (Rational(2 * j + 3) * (Rational(1) - u2_max));
        if (tail < target) return sum.widened(tail);
    }
}

ApproxReal atan_series(const Rational& x, int scale) {
    if (x.abs() > Rational(Integer(1), Integer(2))) throw std::invalid_argument("atan_series: |x| must be <= 1/2");
    const Rational target = ten_to_minus(scale);
    const ApproxReal x2 = ApproxReal::from_rational(x * x, scale);
    ApproxReal power = ApproxReal::from_rational(x, scale);
    ApproxReal sum(0, 0, scale);
    Rational power_bound = x.abs();
    const Rational x2_exact = x * x;
    for (int j = 0;; ++j) {
        const ApproxReal term = power / Rational(2 * j + 1);
        sum = (j % 2 == 0) ? sum + term : sum - term;
        power = power * x2;
        power_bound *= x2_exact;
        // Alternating with decreasing terms: the remainder is below the next term.
        const Rational next = power_bound / Rational(2 * j + 3);
        if (next < target) return sum.widened(next);
    }
}

ApproxReal log2_reference(int digits) {
    const int scale = working_scale(digits);
    return atanh_series(ApproxReal::from_rational(Rational(Integer(1), Integer(3)), scale)) * Rational(2);
}

Integer isqrt_newton(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt_newton: negative argument");
    if (n < 2) return n;
    // Start above the root; the iteration decreases monotonically to floor(sqrt n).
    Integer x = Integer(1) << static_cast<mp_bitcnt_t>(mpz_sizeinbase(n.get_mpz_t(), 2) / 2 + 1);
    for (;;) {
        const Integer y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    if (!(x * x <= n && (x + 1) * (x + 1) > n)) throw std::logic_error("isqrt_newton: bracket check failed");
    return x;
}

ApproxReal sqrt5_reference(int digits) {
    const int scale = working_scale(digits);
    const Integer root = isqrt_newton(5 * pow10(2 * scale));
    // sqrt(5) 10^scale lies in [root, root + 1).
    return ApproxReal(root, 1, scale);
}

ApproxReal rho_reference(int digits) {
    const ApproxReal s = sqrt5_reference(digits);
    return (s - ApproxReal(pow10(s.scale()), 0, s.scale())) * Rational(Integer(1), Integer(2));
}

ApproxReal log_rho_reference(int digits) {
    const ApproxReal s = sqrt5_reference(digits);
    const ApproxReal u = s - ApproxReal(2 * pow10(s.scale()), 0, s.scale());
    return atanh_series(u) * Rational(-2);
}

ApproxReal pi_machin(int digits) {
    const int scale = working_scale(digits);
    return atan_series(Rational(Integer(1), Integer(5)), scale) * Rational(16) -
           atan_series(Rational(Integer(1), Integer(239)), scale) * Rational(4);
}

}  // namespace harmsum
