#include "m0n/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace m0n {

namespace {

mpz_class parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational literal");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("not a number");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("not a number");
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

std::string Rational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

DualRational& DualRational::operator+=(const DualRational& rhs) {
    value += rhs.value;
    deriv += rhs.deriv;
    return *this;
}

DualRational& DualRational::operator-=(const DualRational& rhs) {
    value -= rhs.value;
    deriv -= rhs.deriv;
    return *this;
}

DualRational& DualRational::operator*=(const DualRational& rhs) {
    deriv = value * rhs.deriv + deriv * rhs.value;
    value *= rhs.value;
    return *this;
}

// (u/v)' = (u' v - u v') / v^2
DualRational& DualRational::operator/=(const DualRational& rhs) {
    if (rhs.value.is_zero()) throw std::domain_error("not a number");
    deriv = (deriv * rhs.value - value * rhs.deriv) / (rhs.value * rhs.value);
    value /= rhs.value;
    return *this;
}

}  // namespace m0n
