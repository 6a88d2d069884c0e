#pragma once

// Exact integers and rationals, binomial coefficients, and the finite
// difference sums built on them.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace harmsum {

using Integer = mpz_class;

/// Exact fraction kept in lowest terms with a positive denominator.
/// Zero is represented uniquely as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
    Rational(const Integer& value) : q_(value) {}  // NOLINT
    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "-p", "p/q" (q may be negative; zero denominator rejected).
    static Rational parse(std::string_view text);

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(int exponent) const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

Integer factorial(std::int64_t n);

/// base^exponent for exponent >= 0.
Integer ipow(const Integer& base, unsigned long exponent);

/// (-1)^k as +1 / -1.
constexpr int sign_power(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

/// Index -> value accessor, so callers can pass H_k, S_k(m)/k and friends
/// without materializing arrays.
using Sequence = std::function<Rational(std::int64_t)>;

/// n-th forward difference at 0: sum_{k=0}^n (-1)^{n-k} C(n,k) a_k.
Rational forward_difference_n(const Sequence& a, std::int64_t n);

/// sum_{k=1}^n (1/k) sum_{j=1}^k (-1)^j C(k,j) a_j
Rational lemma11_lhs(const Sequence& a, std::int64_t n);

/// sum_{k=1}^n (-1)^k C(n,k) a_k / k
Rational lemma11_rhs(const Sequence& a, std::int64_t n);

}  // namespace harmsum
