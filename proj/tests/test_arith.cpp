#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <cobkit/arith.hpp>

using cobkit::Int;
using cobkit::Rational;

namespace {

// Sawtooth ((x)) evaluated on a rational directly, independent of the
// integer accumulation used by dedekind_sum.
Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return 0;
    return x - Rational(x.floor()) - cobkit::make_rational(1, 2);
}

Rational dedekind_oracle(Int q, Int p) {
    Rational s;
    for (Int k = 1; k < p; ++k) s += sawtooth(cobkit::make_rational(k, p)) * sawtooth(cobkit::make_rational(k * q, p));
    return s;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int pow_mod(Int base, Int e, Int m) {
    Int r = 1;
    base = cobkit::mod(base, m);
    while (e > 0) {
        if (e & 1) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

TEST(GcdExt, Examples) {
    auto g = cobkit::gcd_ext(3, 1);
    EXPECT_EQ(g.g, 1);
    EXPECT_EQ(3 * g.x + 1 * g.y, 1);
    g = cobkit::gcd_ext(39, 17);
    EXPECT_EQ(g.g, 1);
    EXPECT_EQ(39 * g.x + 17 * g.y, 1);
    g = cobkit::gcd_ext(12, 18);
    EXPECT_EQ(g.g, 6);
    EXPECT_EQ(12 * g.x + 18 * g.y, 6);
}

TEST(GcdExt, SignsAndZero) {
    auto g = cobkit::gcd_ext(-12, 18);
    EXPECT_EQ(g.g, 6);
    EXPECT_EQ(-12 * g.x + 18 * g.y, 6);
    g = cobkit::gcd_ext(0, -5);
    EXPECT_EQ(g.g, 5);
    EXPECT_EQ(-5 * g.y, 5);
    EXPECT_THROW(cobkit::gcd_ext(0, 0), cobkit::domain_error);
}

TEST(GcdExt, BezoutOnRandomPairs) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> d(-100000, 100000);
    for (int i = 0; i < 1000; ++i) {
        Int a = d(rng), b = d(rng);
        if (a == 0 && b == 0) continue;
        auto g = cobkit::gcd_ext(a, b);
        EXPECT_GT(g.g, 0);
        EXPECT_EQ(a % g.g, 0);
        EXPECT_EQ(b % g.g, 0);
        EXPECT_EQ(a * g.x + b * g.y, g.g);
    }
}

TEST(Jacobi, Examples) {
    EXPECT_EQ(cobkit::jacobi(1, 15), 1);
    EXPECT_EQ(cobkit::jacobi(3, 7), -1);
    // (2|15) = 1 yet 2 is not a square mod 15.
    EXPECT_EQ(cobkit::jacobi(2, 15), 1);
    EXPECT_FALSE(cobkit::is_square_mod(2, 15));
    EXPECT_EQ(cobkit::jacobi(5, 15), 0);
    EXPECT_EQ(cobkit::jacobi(-1, 1), 1);
}

TEST(Jacobi, RejectsEvenOrNonpositiveModulus) {
    EXPECT_THROW(cobkit::jacobi(1, 8), cobkit::domain_error);
    EXPECT_THROW(cobkit::jacobi(1, 0), cobkit::domain_error);
    EXPECT_THROW(cobkit::jacobi(1, -3), cobkit::domain_error);
}

TEST(Jacobi, EulerCriterionOnPrimes) {
    for (Int p = 3; p < 200; p += 2) {
        if (!is_prime(p)) continue;
        for (Int a = -p; a <= 2 * p; ++a) {
            Int e = pow_mod(a, (p - 1) / 2, p);
            int expected = e == 0 ? 0 : (e == 1 ? 1 : -1);
            EXPECT_EQ(cobkit::jacobi(a, p), expected) << a << " " << p;
        }
    }
}

TEST(Jacobi, MultiplicativeInNumerator) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> num(-5000, 5000), half(0, 5000);
    for (int i = 0; i < 1000; ++i) {
        Int a = num(rng), b = num(rng), n = 2 * half(rng) + 1;
        EXPECT_EQ(cobkit::jacobi(a * b, n), cobkit::jacobi(a, n) * cobkit::jacobi(b, n));
    }
}

TEST(Jacobi, MultiplicativeInDenominator) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<Int> num(-5000, 5000), half(0, 300);
    for (int i = 0; i < 1000; ++i) {
        Int a = num(rng), m = 2 * half(rng) + 1, n = 2 * half(rng) + 1;
        EXPECT_EQ(cobkit::jacobi(a, m * n), cobkit::jacobi(a, m) * cobkit::jacobi(a, n));
    }
}

TEST(IsSquareMod, Examples) {
    EXPECT_FALSE(cobkit::is_square_mod(2, 5));
    EXPECT_FALSE(cobkit::is_square_mod(-2, 5));
    EXPECT_FALSE(cobkit::is_square_mod(2, 15));
    EXPECT_FALSE(cobkit::is_square_mod(-2, 15));
    for (Int n = 1; n < 50; ++n) EXPECT_TRUE(cobkit::is_square_mod(1, n));
    EXPECT_TRUE(cobkit::is_square_mod(2, 7));
    EXPECT_TRUE(cobkit::is_square_mod(-1, 5));
    EXPECT_TRUE(cobkit::is_square_mod(-6, 5));  // reduced to 4 first
}

TEST(IsSquareMod, ErrorsAndCap) {
    EXPECT_THROW(cobkit::is_square_mod(1, 0), cobkit::domain_error);
    EXPECT_THROW(cobkit::is_square_mod(1, cobkit::kMaxSquareModulus + 1), cobkit::resource_error);
    EXPECT_NO_THROW(cobkit::is_square_mod(1, 997));
}

TEST(IsSquareMod, AgreesWithJacobiOnOddPrimes) {
    for (Int p = 3; p < 300; p += 2) {
        if (!is_prime(p)) continue;
        for (Int a = -(p - 1); a < p; ++a) {
            bool residue = cobkit::jacobi(a, p) == 1 && a % p != 0;
            EXPECT_EQ(residue, cobkit::is_square_mod(a, p) && a % p != 0) << a << " mod " << p;
        }
    }
}

TEST(Dedekind, Examples) {
    EXPECT_EQ(cobkit::dedekind_sum(1, 1), Rational(0));
    EXPECT_EQ(cobkit::dedekind_sum(1, 3), cobkit::make_rational(1, 18));
    EXPECT_THROW(cobkit::dedekind_sum(2, 4), cobkit::domain_error);
    EXPECT_THROW(cobkit::dedekind_sum(1, 0), cobkit::domain_error);
}

TEST(Dedekind, MatchesSawtoothOracle) {
    for (Int p = 1; p <= 60; ++p)
        for (Int q = -p; q <= p; ++q)
            if (cobkit::gcd(q, p) == 1) EXPECT_EQ(cobkit::dedekind_sum(q, p), dedekind_oracle(q, p)) << q << "," << p;
}

TEST(Dedekind, ClosedFormForOne) {
    for (Int p = 1; p <= 50; ++p)
        EXPECT_EQ(cobkit::dedekind_sum(1, p), cobkit::make_rational((p - 1) * (p - 2), 12 * p)) << p;
}

TEST(Dedekind, Reciprocity) {
    for (Int p = 2; p <= 100; ++p)
        for (Int q = 1; q < p; ++q) {
            if (cobkit::gcd(p, q) != 1) continue;
            Rational lhs = cobkit::dedekind_sum(q, p) + cobkit::dedekind_sum(p, q);
            Rational rhs = cobkit::make_rational(-1, 4) +
                           (cobkit::make_rational(p, q) + cobkit::make_rational(q, p) + cobkit::make_rational(1, p * q)) /
                               Rational(12);
            EXPECT_EQ(lhs, rhs) << "p=" << p << " q=" << q;
        }
}
