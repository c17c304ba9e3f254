#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace cobkit {

struct ExtendedGcd {
    Int g;
    Int x;
    Int y;
};

// g = gcd(a, b) > 0 with a*x + b*y = g.
inline ExtendedGcd gcd_ext(Int a, Int b) {
    detail::require(a != 0 || b != 0, "gcd_ext: both arguments are zero");
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

inline Int gcd(Int a, Int b) { return detail::gcd_abs(a, b); }

// Least nonnegative residue of a mod n, n >= 1.
inline Int mod(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

/// Jacobi symbol (a|n) for odd n >= 1.
inline int jacobi(Int a, Int n) {
    detail::require(n >= 1 && n % 2 == 1, "jacobi: n must be odd and positive, got " + std::to_string(n));
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// Upper limit on the modulus accepted by is_square_mod.
inline constexpr Int kMaxSquareModulus = 1'000'000;

/// True iff k^2 = a (mod n) for some k. Decided by enumerating every k in
/// [0, n); the Jacobi symbol is not a substitute for composite n
/// ((2|15) = 1 although 2 is not a square mod 15).
inline bool is_square_mod(Int a, Int n) {
    detail::require(n >= 1, "is_square_mod: modulus must be positive, got " + std::to_string(n));
    if (n > kMaxSquareModulus)
        throw resource_error("is_square_mod: modulus " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kMaxSquareModulus));
    Int target = mod(a, n);
    for (Int k = 0; k < n; ++k) {
        if ((k * k) % n == target) return true;
    }
    return false;
}

/// Dedekind sum s(q,p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)) by direct summation.
///
/// Each summand is (2k - p)(2r - p) / (4p^2) with r = kq mod p, or zero when
/// p divides kq, so the whole sum is accumulated as one integer numerator.
inline Rational dedekind_sum(Int q, Int p) {
    detail::require(p >= 1, "dedekind_sum: p must be positive, got " + std::to_string(p));
    detail::require(gcd(q, p) == 1,
                    "dedekind_sum: gcd(" + std::to_string(q) + ", " + std::to_string(p) + ") != 1");
    Integer total = 0;
    for (Int k = 1; k < p; ++k) {
        Int r = mod(k * mod(q, p), p);
        if (r == 0) continue;
        total += Integer(2 * k - p) * Integer(2 * r - p);
    }
    return Rational(total, Integer(4) * p * p);
}

}  // namespace cobkit
