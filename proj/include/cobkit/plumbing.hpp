#pragma once

/**
 * The star-shaped plumbing T_{p,q,r}: a central (-2)-sphere with three
 * chains of (-2)-spheres of lengths p-1, q-1, r-1 attached. Its boundary
 * Sigma_{p,q,r} is a Z/2-homology sphere when pqr - pq - pr - qr is odd.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cobordism.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace cobkit {

class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

    static SymmetricMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        SymmetricMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            detail::require(rows[i].size() == rows.size(), "matrix is not square");
            for (std::size_t j = 0; j < rows.size(); ++j) m.data_[i * m.n_ + j] = rows[i][j];
        }
        for (std::size_t i = 0; i < m.n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                detail::require(m(i, j) == m(j, i), "matrix is not symmetric");
        return m;
    }

    std::size_t size() const { return n_; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    // Sets both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, Int v) {
        data_[i * n_ + j] = v;
        data_[j * n_ + i] = v;
    }

private:
    std::size_t n_ = 0;
    std::vector<Int> data_;
};

struct Inertia {
    Int positive = 0;
    Int negative = 0;
    Int zero = 0;

    Int signature() const { return positive - negative; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by symmetric congruence over the rationals. Pivots on
/// the lowest-index nonzero diagonal entry; when the remaining diagonal is
/// zero, splits off the lowest-index nonzero off-diagonal pair as a
/// hyperbolic plane (+1, -1).
inline Inertia inertia(const SymmetricMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;

    Inertia out;
    while (!live.empty()) {
        std::size_t pivot = n;
        for (std::size_t i : live) {
            if (!a[i][i].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot != n) {
            const Rational d = a[pivot][pivot];
            (d.sign() > 0 ? out.positive : out.negative) += 1;
            std::erase(live, pivot);
            for (std::size_t j : live) {
                if (a[j][pivot].is_zero()) continue;
                const Rational f = a[j][pivot] / d;
                for (std::size_t k : live) a[j][k] -= f * a[pivot][k];
            }
            continue;
        }
        std::size_t pi = n, pj = n;
        for (std::size_t x = 0; x < live.size() && pi == n; ++x)
            for (std::size_t y = x + 1; y < live.size(); ++y)
                if (!a[live[x]][live[y]].is_zero()) {
                    pi = live[x];
                    pj = live[y];
                    break;
                }
        if (pi == n) {
            out.zero += static_cast<Int>(live.size());
            break;
        }
        out.positive += 1;
        out.negative += 1;
        const Rational b = a[pi][pj];
        std::erase(live, pi);
        std::erase(live, pj);
        // Subtract C B^{-1} C^T with B = [[0, b], [b, 0]].
        std::vector<std::vector<Rational>> next = a;
        for (std::size_t k : live)
            for (std::size_t l : live) next[k][l] = a[k][l] - (a[k][pi] * a[pj][l] + a[k][pj] * a[pi][l]) / b;
        a = std::move(next);
    }
    return out;
}

inline Int signature_exact(const SymmetricMatrix& m) { return inertia(m).signature(); }

/// Fraction-free (Bareiss) determinant with row pivoting.
inline Integer determinant_exact(const SymmetricMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------

struct StarPlumbing {
    Int p = 0, q = 0, r = 0;
    SymmetricMatrix matrix;

    Int rank() const { return static_cast<Int>(matrix.size()); }
};

/// Vertex 0 is the centre; each arm is a chain hanging off it.
inline StarPlumbing star_plumbing(Int p, Int q, Int r) {
    detail::require(1 <= p && p <= q && q <= r, "T_{p,q,r} needs 1 <= p <= q <= r, got (" + std::to_string(p) + "," +
                                                    std::to_string(q) + "," + std::to_string(r) + ")");
    const auto n = static_cast<std::size_t>(p + q + r - 2);
    StarPlumbing t{p, q, r, SymmetricMatrix(n)};
    for (std::size_t i = 0; i < n; ++i) t.matrix.set(i, i, -2);
    std::size_t next = 1;
    for (Int arm : {p - 1, q - 1, r - 1}) {
        std::size_t prev = 0;
        for (Int k = 0; k < arm; ++k, ++next) {
            t.matrix.set(prev, next, 1);
            prev = next;
        }
    }
    return t;
}

/// p <= q <= r, exactly one even, 1/p + 1/q + 1/r < 1, p + q + r <= 22.
struct MpqrTriple {
    Int p = 0, q = 0, r = 0;

    static MpqrTriple make(Int p, Int q, Int r) {
        const std::string name = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
        detail::require(1 <= p && p <= q && q <= r, name + ": need 1 <= p <= q <= r");
        const int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
        detail::require(evens == 1, name + ": exactly one of p, q, r must be even");
        detail::require(p * q + p * r + q * r < p * q * r, name + ": need 1/p + 1/q + 1/r < 1");
        detail::require(p + q + r <= 22, name + ": need p + q + r <= 22");
        return {p, q, r};
    }

    Int sum() const { return p + q + r; }
};

/// Every valid triple, in lexicographic order.
inline std::vector<MpqrTriple> all_mpqr_triples() {
    std::vector<MpqrTriple> out;
    for (Int p = 1; p <= 22; ++p)
        for (Int q = p; p + q <= 22; ++q)
            for (Int r = q; p + q + r <= 22; ++r) {
                try {
                    out.push_back(MpqrTriple::make(p, q, r));
                } catch (const domain_error&) {
                }
            }
    return out;
}

struct TpqrInvariants {
    Integer det;  // |det|, sign depends on vertex order
    Int sigma = 0;
    Int rank = 0;
    Inertia inertia;
};

inline TpqrInvariants tpqr_invariants(const MpqrTriple& t) {
    StarPlumbing plumb = star_plumbing(t.p, t.q, t.r);
    TpqrInvariants inv;
    Integer det = determinant_exact(plumb.matrix);
    inv.det = det < 0 ? Integer(-det) : det;
    Integer expected = Integer(t.p * t.q * t.r - t.p * t.q - t.p * t.r - t.q * t.r);
    if (expected < 0) expected = -expected;
    detail::ensure(inv.det == expected, "T_{p,q,r}: |det| = " + inv.det.str() + " differs from |pqr-pq-pr-qr| = " +
                                            expected.str());
    detail::ensure(inv.det % 2 == 1, "T_{p,q,r}: determinant is even");
    inv.inertia = inertia(plumb.matrix);
    inv.sigma = inv.inertia.signature();
    detail::ensure(inv.sigma == 4 - t.sum(), "T_{p,q,r}: signature differs from 4 - p - q - r");
    inv.rank = plumb.rank();
    return inv;
}

/// Exact m and m-bar of Sigma_{p,q,r}: the plumbing X_{p,q,r} bounds it and
/// the complement of X_{p,q,r} in K3 bounds its reverse. The two fillings
/// leave a gap of 2, and m-bar > m (R != 0 or m-bar < 0) closes it.
inline MBounds sigma_pqr_bounds(const MpqrTriple& t) {
    const Int s = t.sum();
    const SpinFillingData plumbing{4 - s, s - 2};
    const SpinFillingData k3_complement{-16 - plumbing.sigma, 22 - plumbing.b2};
    detail::ensure(furuta_allows(-16, 22), "K3 data must satisfy the 10/8 inequality");
    MBounds b = merge(bound_from_filling(plumbing), reverse_orientation(bound_from_filling(k3_complement)));
    const Rational m = Rational(4 - s, 4);
    detail::ensure(b.m_lower == m && b.mbar_upper == m + 2, "sigma_pqr_bounds: fillings do not pin a gap of 2");
    const bool strict = !b.rokhlin->is_zero() || b.mbar_upper < 0 || b.m_lower > 0;
    detail::ensure(strict, "sigma_pqr_bounds: cannot rule out m = mbar");
    return promote_exact(std::move(b), m, m + 2, "plumbing T_{p,q,r} and K3 complement, mbar > m");
}

struct MontesinosInvariants {
    Int slice_genus = 0;
    Int unknotting = 0;
    Int signature = 0;
};

/// The Montesinos knot m(2; (p,p-1), (q,q-1), (r,r-1)), whose double branched
/// cover is -Sigma_{p,q,r}. The lower bound from m(-Sigma_{p,q,r}) meets the
/// upper bound from untwisting the three rational tangles.
inline MontesinosInvariants montesinos_invariants(const MpqrTriple& t) {
    const Int s = t.sum();
    const Int sigma = s - 4;
    const MBounds cover = reverse_orientation(sigma_pqr_bounds(t));
    // 2 g* >= 5/4 sigma - m(cover)
    const Rational twice_lower = Rational(5 * sigma, 4) - *cover.m_exact;
    detail::ensure(twice_lower.is_integer() && twice_lower.num() % 2 == 0, "montesinos: genus lower bound not integral");
    const Int lower = to_int(twice_lower.num()) / 2;
    Int upper = 0;
    for (Int x : {t.p, t.q, t.r}) upper += x % 2 == 0 ? x / 2 : (x - 1) / 2;
    detail::ensure(lower == upper, "montesinos: slice genus bounds do not meet");
    return {lower, upper, sigma};
}

}  // namespace cobkit
