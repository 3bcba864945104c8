#include "m0n/determinant.hpp"
#include "m0n/rational.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using m0n::DualRational;
using m0n::Rational;
using m0n::RationalMatrix;

namespace {

// Independent oracle: Laplace expansion along the first row over the integers.
mpz_class cofactor_det(const std::vector<std::vector<long>>& m) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    mpz_class total = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::vector<long>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<long> row;
            for (std::size_t cc = 0; cc < k; ++cc) {
                if (cc != c) row.push_back(m[r][cc]);
            }
            minor.push_back(row);
        }
        const mpz_class term = m[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : mpz_class(-term);
    }
    return total;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("normalize reduces sign and gcd") {
    const Rational a(2, -4);
    CHECK(a.numerator() == -1);
    CHECK(a.denominator() == 2);
    const Rational z(0, 7);
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
    const Rational i(6, 3);
    CHECK(i == Rational(2));
    CHECK(i.denominator() == 1);
}

TEST_CASE("zero denominator is not a number") {
    CHECK_THROWS_WITH_AS(Rational(1, 0), "not a number", std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("3/0"), std::domain_error);
}

TEST_CASE("parse accepts p/q and integers") {
    CHECK(Rational::parse("1/64") == Rational(1, 64));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("det_sign on small fixed matrices") {
    CHECK(m0n::det_sign(RationalMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
    CHECK(m0n::det_sign(RationalMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
    CHECK(m0n::det_sign(RationalMatrix{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}) == 0);
    CHECK_THROWS_AS(m0n::det_sign(RationalMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(m0n::det_sign(RationalMatrix()), std::invalid_argument);

    RationalMatrix frac(2, 2);
    frac(0, 0) = Rational(1, 3);
    frac(0, 1) = Rational(1, 2);
    frac(1, 0) = Rational(1, 5);
    frac(1, 1) = Rational(1, 7);
    // 1/21 - 1/10 < 0
    CHECK(m0n::det_sign(frac) == -1);
}

TEST_CASE("det_sign agrees with cofactor expansion on random integer matrices") {
    std::mt19937 rng(20141101);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t k = 1 + static_cast<std::size_t>(trial % 6);
        std::vector<std::vector<long>> raw(k, std::vector<long>(k));
        RationalMatrix m(k, k);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                raw[r][c] = entry(rng);
                m(r, c) = Rational(raw[r][c]);
            }
        }
        CAPTURE(trial);
        CHECK(m0n::det_sign(m) == sgn(cofactor_det(raw)));
    }
}

TEST_CASE("det_sign is invariant under positive row scaling by fractions") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> entry(-4, 4), den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 2 + static_cast<std::size_t>(trial % 4);
        std::vector<std::vector<long>> raw(k, std::vector<long>(k));
        RationalMatrix m(k, k);
        for (std::size_t r = 0; r < k; ++r) {
            const Rational scale(1, den(rng));
            for (std::size_t c = 0; c < k; ++c) {
                raw[r][c] = entry(rng);
                m(r, c) = Rational(raw[r][c]) * scale;
            }
        }
        CHECK(m0n::det_sign(m) == sgn(cofactor_det(raw)));
    }
}

TEST_CASE("dual numbers reproduce the derivative of the case-A transition map") {
    // f(t) = (2 - x3)(t - 1)/(t - x3); df/dt = (2 - x3)(x3 - 1)(-1)/(t - x3)^2
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational x3 = Rational(3) + Rational(trial, 7);
        const Rational t = random_rational(rng);
        if (t == x3) continue;
        const DualRational td = DualRational::variable(t);
        const DualRational f = DualRational(Rational(2) - x3) * (td - DualRational(1)) / (td - DualRational(x3));
        const Rational expected = (Rational(2) - x3) * (x3 - Rational(1)) * Rational(-1) / ((t - x3) * (t - x3));
        CHECK(f.value == (Rational(2) - x3) * (t - Rational(1)) / (t - x3));
        CHECK(f.deriv == expected);
    }
}

TEST_CASE("dual division by a zero value throws") {
    CHECK_THROWS_AS(DualRational(1) / DualRational(Rational(0), Rational(1)), std::domain_error);
}

TEST_CASE("field axioms hold exactly on random rationals") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
        CHECK(((a < b) || (a == b) || (a > b)));
    }
}
