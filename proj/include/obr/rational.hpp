#pragma once

// Exact rational numbers backed by GMP's mpq_class.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace obr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : q_(static_cast<signed long>(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<signed long>(value)) {}  // NOLINT(google-explicit-constructor)

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        r.q_.canonicalize();
        return r;
    }

    [[nodiscard]] const mpq_class &raw() const { return q_; }

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    /// Largest integer <= this.
    [[nodiscard]] mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    /// Smallest integer >= this.
    [[nodiscard]] mpz_class ceil() const {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    /// Always "p/q", including integers ("3/1").
    [[nodiscard]] std::string str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) {
            throw Error("rational division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return from_mpq(mpq_class(-a.q_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

inline Rational make_rational(long long num, long long den) {
    if (den == 0) {
        throw Error("zero denominator");
    }
    mpq_class q(mpz_class(static_cast<signed long>(num)), mpz_class(static_cast<signed long>(den)));
    return Rational::from_mpq(std::move(q));
}

/// Parses "p/q" or "p" (optional leading '-'). Throws on malformed text or a
/// zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
        throw Error("malformed rational: '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
    mpz_class n(std::string(strip_plus(num)), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw Error("zero denominator in '" + std::string(text) + "'");
    }
    return Rational::from_mpq(mpq_class(n, d));
}

inline Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }
inline Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

}  // namespace obr
