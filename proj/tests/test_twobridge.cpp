#include <map>
#include <vector>

#include <gtest/gtest.h>

#include <cobkit/twobridge.hpp>

using cobkit::AdmissibleCF;
using cobkit::FourPlat;
using cobkit::Int;

namespace {

// Classical lattice-point formula for the signature of S(p, q), p and q odd.
Int lattice_signature(Int p, Int q) {
    Int s = 0;
    for (Int i = 1; i < p; ++i) s += ((i * q / p) % 2 == 0) ? 1 : -1;
    return s;
}

FourPlat plat(Int alpha, Int beta) { return FourPlat(cobkit::find_admissible_cf(alpha, beta)); }

// All admissible decompositions with n <= 3, |a_i| <= 9, |b_i| <= 4 whose
// value has numerator at most 41, keyed by value.
std::map<std::pair<Int, Int>, std::vector<AdmissibleCF>> enumerate_small() {
    std::map<std::pair<Int, Int>, std::vector<AdmissibleCF>> out;
    std::vector<Int> a, b;
    auto consider = [&]() {
        AdmissibleCF cf;
        cf.a = a;
        cf.b = b;
        cobkit::Rational v;
        try {
            v = cobkit::eval_cf(a, b);
        } catch (const cobkit::evaluation_error&) {
            return;
        }
        if (v.sign() <= 0 || v.num() > 41) return;
        cf.alpha = cobkit::to_int(v.num());
        cf.beta = cobkit::to_int(v.den());
        if (cobkit::validate_admissible(cf).ok) out[{cf.alpha, cf.beta}].push_back(cf);
    };
    auto rec = [&](auto&& self) -> void {
        consider();
        if (a.size() == 3) return;
        for (Int bt = -4; bt <= 4; ++bt) {
            if (bt == 0 || (bt > 0) != (a.back() > 0)) continue;
            for (Int at = -9; at <= 9; ++at) {
                if (at == 0) continue;
                b.push_back(bt);
                a.push_back(at);
                self(self);
                a.pop_back();
                b.pop_back();
            }
        }
    };
    for (Int first = -9; first <= 9; ++first) {
        if (first == 0) continue;
        a = {first};
        b.clear();
        rec(rec);
    }
    return out;
}

}  // namespace

TEST(TwoBridge, TrefoilAndTorusKnots) {
    FourPlat t = plat(3, 1);
    EXPECT_TRUE(t.is_knot());
    EXPECT_EQ(cobkit::signature(t), 2);
    EXPECT_EQ(cobkit::determinant(t), 3);
    EXPECT_EQ(cobkit::slice_genus_upper(t).genus, 1);
    for (Int n = 3; n <= 25; n += 2) {
        FourPlat k = plat(n, 1);
        EXPECT_EQ(cobkit::signature(k), n - 1);
        EXPECT_EQ(cobkit::slice_genus_upper(k).genus, (n - 1) / 2);
    }
}

TEST(TwoBridge, OddCounts) {
    FourPlat k(cobkit::parse_cf("[1,2,-1,-2,-1]"));
    EXPECT_EQ(cobkit::odd_counts(k), (cobkit::OddCounts{1, 2}));
    EXPECT_EQ(cobkit::signature(k), 0);
    auto e = cobkit::slice_genus_upper(k);
    EXPECT_EQ(e.lhs, 4 + 2 - 2);
    EXPECT_EQ(e.rhs, 2 + 4 - 2);
    EXPECT_EQ(e.genus, 1);
}

TEST(TwoBridge, LinksAreUnsupported) {
    FourPlat link(cobkit::parse_cf("[2]"));
    EXPECT_FALSE(link.is_knot());
    EXPECT_THROW(cobkit::slice_genus_upper(link), cobkit::unsupported_input);
    FourPlat hopf_like(cobkit::find_admissible_cf(8, 3));
    EXPECT_FALSE(hopf_like.is_knot());
}

TEST(TwoBridge, RejectsInvalidDecomposition) {
    AdmissibleCF bad{{1, -2}, {-1}, 3, 1};
    EXPECT_THROW(FourPlat{bad}, cobkit::domain_error);
}

TEST(TwoBridge, CrossingChangeBound) {
    EXPECT_EQ(cobkit::crossing_change_genus_bound(1, 2, 3), 4);
    EXPECT_EQ(cobkit::crossing_change_genus_bound(0, 0, 0), 0);
    EXPECT_THROW(cobkit::crossing_change_genus_bound(-1, 0, 0), cobkit::domain_error);
}

TEST(TwoBridge, GenusEstimateDecomposes) {
    for (Int alpha = 3; alpha <= 99; alpha += 2)
        for (Int beta = 1; beta < alpha; beta += 2) {
            if (cobkit::gcd(alpha, beta) != 1) continue;
            auto e = cobkit::slice_genus_upper(plat(alpha, beta));
            EXPECT_EQ(e.genus, cobkit::crossing_change_genus_bound(e.seifert_genus, e.positive_changes,
                                                                   e.negative_changes))
                << alpha << "/" << beta;
        }
}

TEST(TwoBridge, SignatureMatchesLatticeFormula) {
    for (Int alpha = 3; alpha <= 199; alpha += 2)
        for (Int beta = 1; beta < alpha; beta += 2)
            if (cobkit::gcd(alpha, beta) == 1)
                EXPECT_EQ(cobkit::signature(plat(alpha, beta)), lattice_signature(alpha, beta)) << alpha << "/" << beta;
}

TEST(TwoBridge, GenusBoundsSignature) {
    for (Int alpha = 3; alpha <= 199; alpha += 2)
        for (Int beta = 1; beta < alpha; beta += 2) {
            if (cobkit::gcd(alpha, beta) != 1) continue;
            FourPlat k = plat(alpha, beta);
            Int sigma = cobkit::signature(k);
            Int g = cobkit::slice_genus_upper(k).genus;
            EXPECT_GE(2 * g, sigma < 0 ? -sigma : sigma) << alpha << "/" << beta;
        }
}

TEST(TwoBridge, SignatureIndependentOfPresentation) {
    auto all = enumerate_small();
    std::size_t multi = 0;
    for (const auto& [target, cfs] : all) {
        auto [alpha, beta] = target;
        if (cfs.size() > 1) ++multi;
        for (const auto& cf : cfs) {
            FourPlat k(cf);
            EXPECT_EQ(k.is_knot(), alpha % 2 == 1) << cobkit::format_cf(cf);
            if (alpha % 2 == 1)
                EXPECT_EQ(cobkit::signature(k), lattice_signature(alpha, beta)) << cobkit::format_cf(cf);
            EXPECT_EQ(cobkit::signature(k), cobkit::signature(FourPlat(cfs.front()))) << cobkit::format_cf(cf);
        }
    }
    EXPECT_GT(multi, 50u);
}

TEST(TwoBridge, SmallCases) {
    auto sig = [](const char* text) { return cobkit::signature(FourPlat(cobkit::parse_cf(text))); };
    EXPECT_EQ(sig("[3]"), 2);
    EXPECT_EQ(sig("[2,4,-1]"), 2);
    EXPECT_EQ(sig("[2,4,-1,-2,1,4,-1]"), 2);
    EXPECT_EQ(cobkit::odd_counts(FourPlat(cobkit::parse_cf("[3]"))), (cobkit::OddCounts{1, 0}));
    EXPECT_EQ(cobkit::odd_counts(FourPlat(cobkit::parse_cf("[2,2,-3]"))), (cobkit::OddCounts{0, 1}));
    EXPECT_EQ(cobkit::crossing_change_genus_bound(0, 1, 0), 1);
    EXPECT_EQ(cobkit::crossing_change_genus_bound(2, 3, 5), 7);
    // The unknot [1] has alpha = beta = 1 and is outside the admissible range.
    EXPECT_THROW(FourPlat(cobkit::AdmissibleCF{{1}, {}, 1, 1}), cobkit::domain_error);
}
