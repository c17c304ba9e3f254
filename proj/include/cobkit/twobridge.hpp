#pragma once

#include <algorithm>
#include <numeric>
#include <string>

#include "contfrac.hpp"
#include "errors.hpp"

namespace cobkit {

/// The 4-plat P(a1, b1, ..., an), i.e. the two-bridge link S(alpha, beta)
/// of its admissible continued fraction. Orientation convention: S(3,1) is
/// the left-handed trefoil and has signature +2.
class FourPlat {
public:
    explicit FourPlat(AdmissibleCF cf) : cf_(std::move(cf)) {
        auto check = validate_admissible(cf_);
        if (!check) throw domain_error("FourPlat: continued fraction violates " + check.clause);
    }

    const AdmissibleCF& cf() const { return cf_; }

    Int sum_a() const { return std::accumulate(cf_.a.begin(), cf_.a.end(), Int{0}); }

    // A knot exactly when the a-terms have odd sum; otherwise two components.
    bool is_knot() const { return sum_a() % 2 != 0; }

private:
    AdmissibleCF cf_;
};

struct OddCounts {
    Int o_plus = 0;
    Int o_minus = 0;

    friend bool operator==(const OddCounts&, const OddCounts&) = default;
};

inline OddCounts odd_counts(const FourPlat& plat) {
    OddCounts c;
    for (Int ai : plat.cf().a) {
        if (ai % 2 == 0) continue;
        (ai > 0 ? c.o_plus : c.o_minus) += 1;
    }
    return c;
}

/// sigma = sum(a_i) - sign(a_n).
inline Int signature(const FourPlat& plat) {
    Int last = plat.cf().a.back();
    return plat.sum_a() - (last > 0 ? 1 : -1);
}

inline Int determinant(const FourPlat& plat) { return plat.cf().alpha; }

/// g* <= g_target + max(pos, neg) when the knot becomes the target after
/// pos positive and neg negative crossing changes.
inline Int crossing_change_genus_bound(Int g_target, Int pos, Int neg) {
    detail::require(g_target >= 0 && pos >= 0 && neg >= 0, "crossing_change_genus_bound: arguments must be nonnegative");
    return g_target + std::max(pos, neg);
}

struct GenusEstimate {
    Int genus = 0;             // the slice genus upper bound
    Int positive_changes = 0;  // crossing changes turning negative a_i into -1 or 0
    Int negative_changes = 0;  // crossing changes turning positive a_i into 1 or 0
    Int seifert_genus = 0;     // genus of the obvious Seifert surface after the changes
    Int lhs = 0;               // sum(|a_i| - a_i) + 2 o+ - 2
    Int rhs = 0;               // sum(|a_i| + a_i) + 2 o- - 2
};

/// Slice genus upper bound max(lhs, rhs) / 4 for a knot plat, together with
/// the crossing-change counts it is assembled from.
inline GenusEstimate slice_genus_upper(const FourPlat& plat) {
    if (!plat.is_knot())
        throw unsupported_input("slice_genus_upper: " + format_cf(plat.cf()) +
                                " is a two-component link (sum of a_i is even); only knots are supported");
    const auto odd = odd_counts(plat);
    Int abs_minus = 0;  // sum(|a_i| - a_i)
    Int abs_plus = 0;   // sum(|a_i| + a_i)
    for (Int ai : plat.cf().a) {
        Int mag = ai < 0 ? -ai : ai;
        abs_minus += mag - ai;
        abs_plus += mag + ai;
    }
    GenusEstimate e;
    e.lhs = abs_minus + 2 * odd.o_plus - 2;
    e.rhs = abs_plus + 2 * odd.o_minus - 2;
    Int top = std::max(e.lhs, e.rhs);
    detail::ensure(top >= 0 && top % 4 == 0, "slice_genus_upper: max term " + std::to_string(top) + " not a multiple of 4");
    e.genus = top / 4;
    Int p4 = abs_minus - 2 * odd.o_minus;
    Int n4 = abs_plus - 2 * odd.o_plus;
    detail::ensure(p4 % 4 == 0 && n4 % 4 == 0, "slice_genus_upper: crossing-change counts not integral");
    e.positive_changes = p4 / 4;
    e.negative_changes = n4 / 4;
    e.seifert_genus = (odd.o_plus + odd.o_minus - 1) / 2;
    return e;
}

}  // namespace cobkit
