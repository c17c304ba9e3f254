#pragma once

/**
 * Bound records for the Z/2-homology-cobordism invariants m and m-bar.
 *
 * For a Z/2-homology sphere S,
 *
 *     m(S)     = sup { 5/4 sigma(X) - b2(X) : X smooth spin, boundary S }
 *     m-bar(S) = inf { 5/4 sigma(X) + b2(X) : X smooth spin, boundary S }
 *
 * Neither is computable in general, so an MBounds carries certified
 * one-sided bounds m >= m_lower and m-bar <= mbar_upper. Exact values are
 * only ever set by a named construction (see promote_exact), and the
 * provenance list records which facts a record was derived from.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cobkit {

/// Rokhlin invariant in Z/16, always even on a Z/2-homology sphere. Stored
/// as its representative in {0, 2, ..., 14}.
class RokhlinClass {
public:
    RokhlinClass() = default;
    explicit RokhlinClass(Int value) {
        Int r = value % 16;
        if (r < 0) r += 16;
        if (r % 2 != 0) throw domain_error("Rokhlin invariant must be even, got " + std::to_string(value));
        value_ = static_cast<int>(r);
    }

    int value() const { return value_; }
    int mod8() const { return value_ % 8; }
    bool is_zero() const { return value_ == 0; }

    RokhlinClass operator-() const { return RokhlinClass(-value_); }
    friend RokhlinClass operator+(RokhlinClass x, RokhlinClass y) { return RokhlinClass(x.value_ + y.value_); }
    friend bool operator==(RokhlinClass, RokhlinClass) = default;

private:
    int value_ = 0;
};

struct MBounds {
    Rational m_lower;
    Rational mbar_upper;
    std::optional<Rational> m_exact;
    std::optional<Rational> mbar_exact;
    std::optional<RokhlinClass> rokhlin;
    std::vector<std::string> provenance;

    // Structural equality on the numeric content; provenance is ignored.
    bool same_values(const MBounds& o) const {
        return m_lower == o.m_lower && mbar_upper == o.mbar_upper && m_exact == o.m_exact &&
               mbar_exact == o.mbar_exact && rokhlin == o.rokhlin;
    }
};

/// sigma and b2 of a smooth spin 4-manifold bounding the sphere in question.
struct SpinFillingData {
    Int sigma = 0;
    Int b2 = 0;
};

namespace detail {

inline bool multiple_of(const Rational& x, int den) { return (Integer(den) % x.den()) == 0; }

}  // namespace detail

/// Throws internal_error if a record breaks any structural invariant of m
/// and m-bar: ordering, quarter/half-integrality, the equality clause and
/// m = m-bar = R/4 (mod 2).
inline void check_invariants(const MBounds& b) {
    using detail::ensure;
    ensure(b.m_lower <= b.mbar_upper, "MBounds: m_lower " + b.m_lower.to_fraction() + " exceeds mbar_upper " +
                                          b.mbar_upper.to_fraction());
    ensure(detail::multiple_of(b.m_lower, 4) && detail::multiple_of(b.mbar_upper, 4),
           "MBounds: bounds must be multiples of 1/4");
    ensure(b.m_exact.has_value() == b.mbar_exact.has_value(), "MBounds: exact values come in pairs");
    if (!b.m_exact) return;
    const Rational& m = *b.m_exact;
    const Rational& mb = *b.mbar_exact;
    ensure(detail::multiple_of(m, 2) && detail::multiple_of(mb, 2), "MBounds: exact values must be multiples of 1/2");
    ensure(m <= mb, "MBounds: m_exact exceeds mbar_exact");
    ensure(b.m_lower <= m && mb <= b.mbar_upper, "MBounds: exact values lie outside the bounds");
    Rational gap = mb - m;
    ensure(gap.is_integer() && gap.num() % 2 == 0, "MBounds: mbar_exact - m_exact is not an even integer");
    if (m == mb) ensure(m.is_zero() && (!b.rokhlin || b.rokhlin->is_zero()), "MBounds: m = mbar forces m = 0 and R = 0");
    if (b.rokhlin) {
        Rational diff = m - Rational(b.rokhlin->value(), 4);
        ensure(diff.is_integer() && diff.num() % 2 == 0, "MBounds: m_exact is not R/4 mod 2");
    }
}

/// The 3-sphere: m = m-bar = 0, R = 0.
inline MBounds s3_bounds() {
    MBounds b{0, 0, Rational(0), Rational(0), RokhlinClass(0), {"S3 bounds D4"}};
    return b;
}

/// One filling X gives m >= 5/4 sigma - b2 and m-bar <= 5/4 sigma + b2; its
/// signature also fixes R = sigma mod 16.
inline MBounds bound_from_filling(const SpinFillingData& f) {
    detail::require(f.b2 >= 0, "bound_from_filling: b2 must be nonnegative, got " + std::to_string(f.b2));
    Rational weighted = Rational(5 * f.sigma, 4);
    return MBounds{weighted - Rational(f.b2),
                   weighted + Rational(f.b2),
                   std::nullopt,
                   std::nullopt,
                   RokhlinClass(f.sigma),
                   {"spin filling sigma=" + std::to_string(f.sigma) + " b2=" + std::to_string(f.b2)}};
}

/// Intersection of two bound records for the same sphere.
inline MBounds merge(const MBounds& x, const MBounds& y) {
    MBounds r;
    r.m_lower = std::max(x.m_lower, y.m_lower);
    r.mbar_upper = std::min(x.mbar_upper, y.mbar_upper);
    detail::ensure(r.m_lower <= r.mbar_upper, "merge: bounds " + r.m_lower.to_fraction() + " > " +
                                                  r.mbar_upper.to_fraction() + " are contradictory");
    auto pick = [](const std::optional<Rational>& u, const std::optional<Rational>& v, const char* what) {
        if (u && v) detail::ensure(*u == *v, std::string("merge: conflicting ") + what);
        return u ? u : v;
    };
    r.m_exact = pick(x.m_exact, y.m_exact, "m_exact");
    r.mbar_exact = pick(x.mbar_exact, y.mbar_exact, "mbar_exact");
    if (x.rokhlin && y.rokhlin) detail::ensure(*x.rokhlin == *y.rokhlin, "merge: conflicting Rokhlin invariants");
    r.rokhlin = x.rokhlin ? x.rokhlin : y.rokhlin;
    r.provenance = x.provenance;
    r.provenance.insert(r.provenance.end(), y.provenance.begin(), y.provenance.end());
    return r;
}

/// Sets exact values on a record whose bounds already pin them: the caller
/// supplies the construction that proves m-bar - m = gap.
inline MBounds promote_exact(MBounds b, const Rational& m, const Rational& mbar, std::string reason) {
    detail::ensure(b.m_lower == m && b.mbar_upper == mbar, "promote_exact: exact values must coincide with the bounds");
    b.m_exact = m;
    b.mbar_exact = mbar;
    b.provenance.push_back(std::move(reason));
    check_invariants(b);
    return b;
}

/// m(-S) = -m-bar(S), m-bar(-S) = -m(S), R(-S) = -R(S).
inline MBounds reverse_orientation(const MBounds& b) {
    MBounds r;
    r.m_lower = -b.mbar_upper;
    r.mbar_upper = -b.m_lower;
    if (b.mbar_exact) r.m_exact = -*b.mbar_exact;
    if (b.m_exact) r.mbar_exact = -*b.m_exact;
    if (b.rokhlin) r.rokhlin = -*b.rokhlin;
    r.provenance = b.provenance;
    r.provenance.emplace_back("orientation reversed");
    return r;
}

/// m is superadditive and m-bar subadditive under connected sum, so only
/// bounds survive; exact inputs never give exact outputs. R is additive.
inline MBounds connected_sum(const MBounds& x, const MBounds& y) {
    MBounds r;
    r.m_lower = x.m_lower + y.m_lower;
    r.mbar_upper = x.mbar_upper + y.mbar_upper;
    if (x.rokhlin && y.rokhlin) r.rokhlin = *x.rokhlin + *y.rokhlin;
    r.provenance = {"connected sum"};
    return r;
}

/// Closed smooth spin 4-manifold data allowed by Rokhlin's theorem and the
/// 10/8 inequality: sigma = 0 mod 16, and b2 >= 5/4 |sigma| + 2 unless
/// sigma = 0.
inline bool furuta_allows(Int sigma, Int b2) {
    detail::require(b2 >= 0, "furuta_allows: b2 must be nonnegative");
    if (sigma % 16 != 0) return false;
    if (sigma == 0) return true;
    Int mag = sigma < 0 ? -sigma : sigma;
    return 4 * b2 >= 5 * mag + 8;
}

enum class OrderVerdict { infinite, unknown };

struct OrderCertificate {
    OrderVerdict verdict = OrderVerdict::unknown;
    std::string reason;
};

/// Certificates for infinite order in the Z/2-homology cobordism group.
/// Never claims finiteness.
inline OrderCertificate infinite_order_certificate(const MBounds& b) {
    if (b.m_lower > 0) return {OrderVerdict::infinite, "m >= " + b.m_lower.to_decimal() + " > 0"};
    if (b.mbar_upper < 0) return {OrderVerdict::infinite, "mbar <= " + b.mbar_upper.to_decimal() + " < 0"};
    if (b.rokhlin && !b.rokhlin->is_zero()) {
        if (b.m_exact && b.m_exact->is_zero())
            return {OrderVerdict::infinite, "m = 0 and R = " + std::to_string(b.rokhlin->value()) + " != 0"};
        // Same criterion applied to the reversed orientation.
        if (b.mbar_exact && b.mbar_exact->is_zero())
            return {OrderVerdict::infinite, "mbar = 0 and R = " + std::to_string(b.rokhlin->value()) + " != 0"};
    }
    return {OrderVerdict::unknown, "no certificate"};
}

/// Double branched cover of a knot K with signature sigma_k and slice genus
/// at most genus_upper: 5/4 sigma -+ 2g bracket m and m-bar, R = sigma mod 16.
inline MBounds branched_cover_bounds(Int sigma_k, Int genus_upper) {
    detail::require(genus_upper >= 0, "branched_cover_bounds: genus bound must be nonnegative");
    detail::require(sigma_k % 2 == 0, "branched_cover_bounds: knot signature must be even, got " + std::to_string(sigma_k));
    Rational weighted = Rational(5 * sigma_k, 4);
    return MBounds{weighted - Rational(2 * genus_upper),
                   weighted + Rational(2 * genus_upper),
                   std::nullopt,
                   std::nullopt,
                   RokhlinClass(sigma_k),
                   {"branched cover: sigma(K)=" + std::to_string(sigma_k) + ", g*(K)<=" + std::to_string(genus_upper)}};
}

}  // namespace cobkit
