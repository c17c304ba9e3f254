#pragma once

/**
 * Integral surgery on knots.
 *
 * Conventions: n is the (odd) framing, eps = sign(n), h = |n| = #H_1. A
 * Rokhlin class is handled through its representative in {0, 2, ..., 14};
 * every mod 8 congruence below is evaluated on that representative, which
 * is well defined because 8 divides 16.
 */

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cobordism.hpp"
#include "errors.hpp"
#include "lens.hpp"

namespace cobkit {

namespace detail {

inline void require_odd_framing(Int n, const char* who) {
    require(n % 2 != 0, std::string(who) + ": framing must be odd, got " + std::to_string(n));
}

inline void require_odd_order(Int h, const char* who) {
    require(h >= 1 && h % 2 == 1, std::string(who) + ": #H_1 must be odd and positive, got " + std::to_string(h));
}

}  // namespace detail

/// Arf(K) for a knot whose n-surgery has Rokhlin invariant R, or nullopt when
/// n - eps = -R (mod 8) fails, i.e. no knot with that framing gives R.
inline std::optional<int> arf_from_surgery(Int n, RokhlinClass rokhlin) {
    detail::require_odd_framing(n, "arf_from_surgery");
    const Int eps = n > 0 ? 1 : -1;
    const Int x = n - eps + rokhlin.value();
    if (mod(x, 8) != 0) return std::nullopt;
    return static_cast<int>(mod(x, 16) / 8);
}

/// Inverse of arf_from_surgery: the Rokhlin invariant of n-surgery on a knot
/// with the given Arf invariant.
inline RokhlinClass rokhlin_from_surgery(Int n, int arf) {
    detail::require_odd_framing(n, "rokhlin_from_surgery");
    detail::require(arf == 0 || arf == 1, "rokhlin_from_surgery: Arf invariant must be 0 or 1");
    const Int eps = n > 0 ? 1 : -1;
    return RokhlinClass(8 * arf - (n - eps));
}

struct AllowedSigns {
    bool positive = false;
    bool negative = false;

    bool empty() const { return !positive && !negative; }
    friend bool operator==(const AllowedSigns&, const AllowedSigns&) = default;
};

/// Framing signs compatible with h - 1 = -/+ R (mod 8): minus for positive
/// framings, plus for negative ones.
inline AllowedSigns congruence_obstruction(Int h, RokhlinClass rokhlin) {
    detail::require_odd_order(h, "congruence_obstruction");
    return {mod(h - 1 + rokhlin.value(), 8) == 0, mod(h - 1 - rokhlin.value(), 8) == 0};
}

/// A closed characteristic surface F in a simply connected W whose boundary
/// is a Z/2-homology sphere.
struct CharSurfaceData {
    Int self_int = 0;  // F.F
    Int genus = 0;     // g(F)
    int arf = 0;       // Arf(F) in {0, 1}
    Int ambient_sigma = 0;
    Int ambient_b2 = 0;
};

/// The spin 4-manifold obtained by surgering F away:
///   b2' = b2 + 2(g - 1) + |F.F + 8 eps Arf| + 4 Arf
///   sigma' = sigma - (F.F + 8 eps Arf)
inline SpinFillingData spin_surgery_model(const CharSurfaceData& c) {
    detail::require(c.self_int != 0, "spin_surgery_model: F.F must be nonzero");
    detail::require(c.arf == 0 || c.arf == 1, "spin_surgery_model: Arf invariant must be 0 or 1");
    detail::require(c.genus >= 0 && c.ambient_b2 >= 0, "spin_surgery_model: genus and b2 must be nonnegative");
    const Int eps = c.self_int > 0 ? 1 : -1;
    const Int shifted = c.self_int + 8 * eps * c.arf;
    const Int mag = shifted < 0 ? -shifted : shifted;
    return {c.ambient_sigma - shifted, c.ambient_b2 + 2 * (c.genus - 1) + mag + 4 * c.arf};
}

/// Bounds on m and m-bar of n-surgery on a knot of slice genus at most
/// genus_upper and Rokhlin invariant R of the result. With mu = Arf(K):
///   mu = 0:  m-bar <= (4-5eps)/4 (h-1) + 2g,      m >= (-4-5eps)/4 (h-1) - 2g
///   mu = 1:  m-bar <= (4-5eps)/4 (h+7) + 2g + 4,  m >= (-4-5eps)/4 (h+7) - 2g - 4
inline MBounds m_bounds_from_surgery(Int n, RokhlinClass rokhlin, Int genus_upper) {
    detail::require(genus_upper >= 0, "m_bounds_from_surgery: genus bound must be nonnegative");
    auto mu = arf_from_surgery(n, rokhlin);
    if (!mu)
        throw domain_error("m_bounds_from_surgery: framing " + std::to_string(n) + " is incompatible with R = " +
                           std::to_string(rokhlin.value()) + " (need n - sign(n) = -R mod 8)");
    const Int eps = n > 0 ? 1 : -1;
    const Int h = n > 0 ? n : -n;
    const Int base = *mu == 0 ? h - 1 : h + 7;
    const Rational extra = Rational(2 * genus_upper + 4 * *mu);
    MBounds b;
    b.mbar_upper = Rational((4 - 5 * eps) * base, 4) + extra;
    b.m_lower = Rational((-4 - 5 * eps) * base, 4) - extra;
    b.rokhlin = rokhlin;
    b.provenance = {"surgery n=" + std::to_string(n) + " on a knot with g*<=" + std::to_string(genus_upper) +
                    ", Arf=" + std::to_string(*mu)};
    return b;
}

/// Lower bound for g*(K) over all knots K with integral surgery giving a
/// sphere with #H_1 = h, Rokhlin invariant R and m >= m_lower. Needs
/// R != 4 (mod 8) and h - 1 = -R (mod 8); clamped at 0.
inline Rational slice_genus_lower(Int h, RokhlinClass rokhlin, const Rational& m_lower) {
    detail::require_odd_order(h, "slice_genus_lower");
    detail::require(rokhlin.mod8() != 4, "slice_genus_lower: needs R != 4 mod 8, got R = " + std::to_string(rokhlin.value()));
    detail::require(mod(h - 1 + rokhlin.value(), 8) == 0,
                    "slice_genus_lower: needs h - 1 = -R mod 8, got h = " + std::to_string(h) +
                        ", R = " + std::to_string(rokhlin.value()));
    const Int mu = mod(h - 1 + rokhlin.value(), 16) / 8;
    Rational bound = Rational(h - 1, 8) + m_lower / Rational(2) - Rational(mu);
    return bound.sign() < 0 ? Rational(0) : bound;
}

// ---------------------------------------------------------------------------
// Obstructions

enum class TestVerdict { pass, obstructed };

struct ObstructionTest {
    std::string name;
    TestVerdict verdict = TestVerdict::pass;
    std::string detail;
};

/// L(p,q) is integral surgery on a knot only if q or -q is a square mod p.
inline ObstructionTest qr_obstruction(Int p, Int q) {
    detail::require(p >= 1, "qr_obstruction: p must be positive");
    detail::require(gcd(p, q) == 1, "qr_obstruction: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    const bool plus = is_square_mod(q, p);
    const bool minus = is_square_mod(-q, p);
    const std::string what = std::to_string(q) + " and " + std::to_string(-q) + " mod " + std::to_string(p);
    if (plus || minus)
        return {"quadratic_residue", TestVerdict::pass,
                (plus ? std::to_string(q) : std::to_string(-q)) + " is a square mod " + std::to_string(p)};
    return {"quadratic_residue", TestVerdict::obstructed, "neither of " + what + " is a square"};
}

/// For a knot with unknotting number one and determinant det: its double
/// branched cover is not integral surgery on a knot when neither 2 nor -2
/// is a square mod |det|.
inline ObstructionTest unknotting_one_obstruction(Int det) {
    const Int mag = det < 0 ? -det : det;
    detail::require(mag > 1, "unknotting_one_obstruction: need |det| > 1, got " + std::to_string(det));
    detail::require(mag % 2 == 1, "unknotting_one_obstruction: knot determinant must be odd, got " + std::to_string(det));
    const bool plus = is_square_mod(2, mag);
    const bool minus = is_square_mod(-2, mag);
    if (plus || minus)
        return {"unknotting_one_linking_form", TestVerdict::pass,
                std::string(plus ? "2" : "-2") + " is a square mod " + std::to_string(mag)};
    return {"unknotting_one_linking_form", TestVerdict::obstructed,
            "neither 2 nor -2 is a square mod " + std::to_string(mag)};
}

/// n-surgery (n odd, n > 0) on a slice knot is Z/2-homology cobordant to
/// -L(n,1).
inline MBounds slice_knot_surgery_class(Int n) {
    detail::require_odd_framing(n, "slice_knot_surgery_class");
    detail::require(n > 0, "slice_knot_surgery_class: framing must be positive, got " + std::to_string(n));
    if (n == 1) return s3_bounds();
    MBounds b = reverse_orientation(m_bounds(LensSpace::make(n, 1)));
    b.provenance.push_back("surgery on a slice knot is cobordant to -L(n,1)");
    return b;
}

enum class Conclusion { not_integral_surgery_on_knot, framing_sign_forced, inconclusive };

struct ObstructionReport {
    std::vector<ObstructionTest> tests;
    Conclusion conclusion = Conclusion::inconclusive;
    int forced_sign = 0;  // +1 or -1 when conclusion is framing_sign_forced
};

inline std::string conclusion_name(const ObstructionReport& r) {
    switch (r.conclusion) {
        case Conclusion::not_integral_surgery_on_knot:
            return "not_integral_surgery_on_knot";
        case Conclusion::framing_sign_forced:
            return r.forced_sign > 0 ? "framing_sign_forced:+" : "framing_sign_forced:-";
        case Conclusion::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

struct SurgeryQuery {
    Int h = 0;
    RokhlinClass rokhlin;
    std::optional<LensSpace> lens;               // adds the quadratic-residue test
    std::optional<Int> unknotting_one_det;       // adds the unknotting-number-one test
};

/// Runs every applicable test. A framing sign is admissible when its
/// congruence holds and no sign-independent test obstructs; the sphere is
/// ruled out when no sign is admissible.
inline ObstructionReport surgery_check(const SurgeryQuery& query) {
    detail::require_odd_order(query.h, "surgery_check");
    if (query.lens)
        detail::require(query.lens->alpha == query.h, "surgery_check: lens space order does not match h");
    ObstructionReport report;
    const auto signs = congruence_obstruction(query.h, query.rokhlin);
    const std::string hs = std::to_string(query.h - 1);
    const std::string rs = std::to_string(query.rokhlin.value());
    report.tests.push_back({"congruence_positive_framing",
                            signs.positive ? TestVerdict::pass : TestVerdict::obstructed,
                            "h-1 = " + hs + (signs.positive ? " = " : " != ") + "-R = -" + rs + " mod 8"});
    report.tests.push_back({"congruence_negative_framing",
                            signs.negative ? TestVerdict::pass : TestVerdict::obstructed,
                            "h-1 = " + hs + (signs.negative ? " = " : " != ") + "R = " + rs + " mod 8"});
    bool blocked = false;
    if (query.lens) {
        report.tests.push_back(qr_obstruction(query.lens->alpha, query.lens->beta));
        blocked |= report.tests.back().verdict == TestVerdict::obstructed;
    }
    if (query.unknotting_one_det) {
        report.tests.push_back(unknotting_one_obstruction(*query.unknotting_one_det));
        blocked |= report.tests.back().verdict == TestVerdict::obstructed;
    }
    const bool pos = signs.positive && !blocked;
    const bool neg = signs.negative && !blocked;
    if (!pos && !neg) {
        report.conclusion = Conclusion::not_integral_surgery_on_knot;
    } else if (pos != neg) {
        report.conclusion = Conclusion::framing_sign_forced;
        report.forced_sign = pos ? 1 : -1;
    }
    return report;
}

}  // namespace cobkit
