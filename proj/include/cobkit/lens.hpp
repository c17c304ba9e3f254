#pragma once

/**
 * Lens spaces L(alpha, beta) with alpha odd, oriented as the double branched
 * cover of the two-bridge knot S(alpha, beta). With that convention L(3,1)
 * covers the left-handed trefoil and is -3 surgery on the unknot.
 *
 * Bounds come from the branched cover estimate applied to an admissible
 * continued fraction of alpha/beta. For even beta the bounds are computed
 * on the mirror L(alpha, alpha - beta) = -L(alpha, beta) and reversed.
 */

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cobordism.hpp"
#include "contfrac.hpp"
#include "twobridge.hpp"

namespace cobkit {

struct LensSpace {
    Int alpha = 0;
    Int beta = 0;

    static LensSpace make(Int alpha, Int beta) {
        detail::require(alpha % 2 != 0, "L(" + std::to_string(alpha) + "," + std::to_string(beta) +
                                            "): alpha must be odd for a Z/2-homology sphere");
        detail::require(0 < beta && beta < alpha, "L(" + std::to_string(alpha) + "," + std::to_string(beta) +
                                                      "): need 0 < beta < alpha");
        detail::require(gcd(alpha, beta) == 1, "L(" + std::to_string(alpha) + "," + std::to_string(beta) +
                                                   "): alpha and beta must be coprime");
        return {alpha, beta};
    }

    LensSpace mirror() const { return {alpha, alpha - beta}; }
    std::string name() const { return "L(" + std::to_string(alpha) + "," + std::to_string(beta) + ")"; }

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

struct LensBounds {
    MBounds bounds;
    AdmissibleCF cf;        // decomposition of alpha/beta, or of the mirror when mirrored
    bool mirrored = false;  // true for even beta
};

/// Bounds for L(alpha, beta) from the given decomposition, or from
/// find_admissible_cf when none is supplied. A supplied decomposition must
/// target alpha/beta (odd beta) or alpha/(alpha - beta) (even beta).
inline LensBounds lens_bounds(const LensSpace& lens, const std::optional<AdmissibleCF>& cf = std::nullopt) {
    const bool mirrored = lens.beta % 2 == 0;
    const LensSpace odd = mirrored ? lens.mirror() : lens;
    AdmissibleCF used = cf ? *cf : find_admissible_cf(odd.alpha, odd.beta);
    detail::require(used.alpha == odd.alpha && used.beta == odd.beta,
                    "continued fraction " + format_cf(used) + " evaluates to " + std::to_string(used.alpha) + "/" +
                        std::to_string(used.beta) + ", expected " + std::to_string(odd.alpha) + "/" +
                        std::to_string(odd.beta));
    FourPlat plat(used);
    MBounds b = branched_cover_bounds(signature(plat), slice_genus_upper(plat).genus);
    b.provenance = {"two-bridge knot S(" + std::to_string(odd.alpha) + "," + std::to_string(odd.beta) + ") = P" +
                    format_cf(used)};
    if (mirrored) b = reverse_orientation(b);
    check_invariants(b);
    return {std::move(b), std::move(used), mirrored};
}

inline MBounds m_bounds(const LensSpace& lens) { return lens_bounds(lens).bounds; }

inline RokhlinClass rokhlin(const LensSpace& lens) {
    const bool mirrored = lens.beta % 2 == 0;
    const LensSpace odd = mirrored ? lens.mirror() : lens;
    RokhlinClass r(signature(FourPlat(find_admissible_cf(odd.alpha, odd.beta))));
    return mirrored ? -r : r;
}

// ---------------------------------------------------------------------------
// Order classification

struct OrderAnnotation {
    std::string label;  // short table form, e.g. "<=2"
    std::string note;
};

/// Known order facts that are not derived here. Keyed up to orientation.
inline std::optional<OrderAnnotation> order_annotation(const LensSpace& lens) {
    struct Entry {
        Int alpha, beta;
        const char* label;
        const char* note;
    };
    static constexpr std::array<Entry, 3> table{{
        {5, 3, "<=2", "order at most 2: admits an orientation-reversing diffeomorphism"},
        {9, 5, "0", "order 0: bounds a Z/2-acyclic 4-manifold (Casson-Harer)"},
        {13, 5, "<=2", "order at most 2: admits an orientation-reversing diffeomorphism"},
    }};
    for (const auto& e : table) {
        if (e.alpha != lens.alpha) continue;
        if (e.beta == lens.beta || e.alpha - e.beta == lens.beta) return OrderAnnotation{e.label, e.note};
    }
    return std::nullopt;
}

struct LensOrder {
    OrderVerdict verdict = OrderVerdict::unknown;
    std::vector<std::string> certificates;
    std::optional<OrderAnnotation> annotation;
    LensBounds bounds;
    std::optional<AdmissibleCF> positive_cf;  // of alpha/beta, or of the mirror for even beta
};

/// Infinite when the bounds certify it or an all-positive decomposition
/// exists; otherwise unknown, with any static annotation attached verbatim.
inline LensOrder classify_order(const LensSpace& lens, const std::optional<AdmissibleCF>& cf = std::nullopt) {
    LensOrder out;
    out.bounds = lens_bounds(lens, cf);
    auto cert = infinite_order_certificate(out.bounds.bounds);
    if (cert.verdict == OrderVerdict::infinite) out.certificates.push_back(cert.reason);
    const LensSpace odd = lens.beta % 2 == 0 ? lens.mirror() : lens;
    out.positive_cf = find_positive_cf(odd.alpha, odd.beta);
    if (out.positive_cf) out.certificates.push_back("all-positive decomposition " + format_cf(*out.positive_cf));
    out.verdict = out.certificates.empty() ? OrderVerdict::unknown : OrderVerdict::infinite;
    out.annotation = order_annotation(lens);
    return out;
}

inline std::string order_label(const LensOrder& o) {
    if (o.verdict == OrderVerdict::infinite) return "inf";
    if (o.annotation) return o.annotation->label;
    return "?";
}

// ---------------------------------------------------------------------------
// The table of odd-order lens spaces up to 13

struct Table1Row {
    LensSpace lens;
    AdmissibleCF cf;
    Rational m_lower;
    Rational mbar_upper;
    std::string order;
};

/// Decompositions used for each row. (5,3) and (13,3) use [1,2,-2] and
/// [4,2,1]; the other rows use the customary sequences.
inline constexpr std::array<std::pair<std::pair<Int, Int>, std::string_view>, 13> kTable1Decompositions{{
    {{3, 1}, "[3]"},
    {{5, 3}, "[1,2,-2]"},
    {{7, 1}, "[7]"},
    {{7, 3}, "[2,4,-1]"},
    {{9, 1}, "[9]"},
    {{9, 5}, "[1,2,-1,-2,-1]"},
    {{11, 1}, "[11]"},
    {{11, 3}, "[3,2,-2]"},
    {{11, 5}, "[2,6,-1]"},
    {{13, 1}, "[13]"},
    {{13, 3}, "[4,2,1]"},
    {{13, 5}, "[2,2,-3]"},
    {{13, 7}, "[1,2,-1,-4,-1]"},
}};

inline std::vector<Table1Row> table1() {
    std::vector<Table1Row> rows;
    rows.reserve(kTable1Decompositions.size());
    for (const auto& [target, text] : kTable1Decompositions) {
        LensSpace lens = LensSpace::make(target.first, target.second);
        AdmissibleCF cf = parse_cf(text);
        LensOrder order = classify_order(lens, cf);
        const MBounds& b = order.bounds.bounds;
        rows.push_back({lens, cf, b.m_lower, b.mbar_upper, order_label(order)});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Parametric families

enum class LensFamily { ten_n_plus_one, series_16k7 };

struct FamilyMember {
    LensSpace lens;
    AdmissibleCF cf;
};

/// L(10n+1, 8n+1) with [1,4,2n], and L(16k+7, 7k+3) for even k with
/// [2,4,-1,-2,1,k,-1].
inline FamilyMember family(LensFamily which, Int parameter) {
    detail::require(parameter >= 1, "family parameter must be positive, got " + std::to_string(parameter));
    if (which == LensFamily::ten_n_plus_one) {
        Int n = parameter;
        AdmissibleCF cf = make_admissible_cf({1, 2 * n}, {2});
        detail::ensure(cf.alpha == 10 * n + 1 && cf.beta == 8 * n + 1, "family: [1,4,2n] does not evaluate to (10n+1)/(8n+1)");
        return {LensSpace::make(10 * n + 1, 8 * n + 1), cf};
    }
    Int k = parameter;
    detail::require(k % 2 == 0, "series family needs even k, got " + std::to_string(k));
    AdmissibleCF cf = make_admissible_cf({2, -1, 1, -1}, {2, -1, k / 2});
    detail::ensure(cf.alpha == 16 * k + 7 && cf.beta == 7 * k + 3,
                   "family: [2,4,-1,-2,1,k,-1] does not evaluate to (16k+7)/(7k+3)");
    return {LensSpace::make(16 * k + 7, 7 * k + 3), cf};
}

}  // namespace cobkit
