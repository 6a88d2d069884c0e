#include "harmsum/exact.hpp"

#include <ostream>
#include <stdexcept>

namespace harmsum {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        Integer v;
        if (part.empty() || v.set_str(part, 10) != 0) {
            throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
        }
        return v;
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(q_.get_den(), q_.get_num());
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of coprime integers stay coprime.
    mpq_class r;
    r.get_num() = n;
    r.get_den() = d;
    return Rational(std::move(r));
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // After step i the running value is C(n-k+i, i), so each division is exact.
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= static_cast<unsigned long>(n - k + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

Integer factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
    return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational forward_difference_n(const Sequence& a, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("forward_difference_n: negative order");
    Rational sum;
    Integer c = 1;  // C(n, k)
    for (std::int64_t k = 0; k <= n; ++k) {
        const Rational term = Rational(c) * a(k);
        if (sign_power(n - k) > 0) sum += term; else sum -= term;
        c *= static_cast<unsigned long>(n - k);
        if (k < n) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return sum;
}

Rational lemma11_lhs(const Sequence& a, std::int64_t n) {
    Rational outer;
    for (std::int64_t k = 1; k <= n; ++k) {
        Rational inner;
        Integer c = 1;  // C(k, j)
        for (std::int64_t j = 1; j <= k; ++j) {
            c *= static_cast<unsigned long>(k - j + 1);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j));
            const Rational term = Rational(c) * a(j);
            if (sign_power(j) > 0) inner += term; else inner -= term;
        }
        outer += inner / Rational(static_cast<long>(k));
    }
    return outer;
}

Rational lemma11_rhs(const Sequence& a, std::int64_t n) {
    Rational sum;
    for (std::int64_t k = 1; k <= n; ++k) {
        const Rational term = Rational(binomial(n, k)) * a(k) / Rational(static_cast<long>(k));
        if (sign_power(k) > 0) sum += term; else sum -= term;
    }
    return sum;
}

}  // namespace harmsum
