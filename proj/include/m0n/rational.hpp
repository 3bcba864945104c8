// Exact rational numbers and forward-mode dual numbers over them.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace m0n {

/// Reduced fraction with a positive denominator. Field equality is
/// structural equality because every value is kept in canonical form.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed text
    /// and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error("not a number") when rhs is zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A value together with its exact first derivative with respect to a single
/// active variable.
struct DualRational {
    Rational value;
    Rational deriv;

    DualRational() = default;
    DualRational(Rational v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    DualRational(long v) : value(v) {}                  // NOLINT(google-explicit-constructor)
    DualRational(Rational v, Rational d) : value(std::move(v)), deriv(std::move(d)) {}

    /// The active variable itself: derivative one.
    static DualRational variable(Rational v) { return {std::move(v), Rational(1)}; }

    DualRational& operator+=(const DualRational& rhs);
    DualRational& operator-=(const DualRational& rhs);
    DualRational& operator*=(const DualRational& rhs);
    DualRational& operator/=(const DualRational& rhs);

    friend DualRational operator+(DualRational a, const DualRational& b) { return a += b; }
    friend DualRational operator-(DualRational a, const DualRational& b) { return a -= b; }
    friend DualRational operator*(DualRational a, const DualRational& b) { return a *= b; }
    friend DualRational operator/(DualRational a, const DualRational& b) { return a /= b; }
    DualRational operator-() const { return {-value, -deriv}; }

    friend bool operator==(const DualRational&, const DualRational&) = default;
};

inline const Rational& value_of(const Rational& r) { return r; }
inline const Rational& value_of(const DualRational& d) { return d.value; }

}  // namespace m0n
