/**
 * @file complexes.hpp
 * @brief The three chain complexes computing twisted Artin-group homology.
 *
 * build_plane: the column complex of the plane on n points with local
 *   coefficients; degree q is spanned by compositions of n with q-n parts and
 *   the differential merges adjacent columns through signed shuffle lifts.
 * build_plane_induced: the same complex on n+1 points with coefficients in
 *   the induced representation of a type-B representation (slot index folded
 *   into the coefficient basis index).
 * build_punctured: the column complex of the punctured plane; cells carry the
 *   axis column i and the below-origin count j, and merges against the axis
 *   split by how many points pass below the origin.
 * build_bar: the reduced two-sided bar-type complex of the bimodule over the
 *   shuffle algebra, restricted to one internal degree; its faces are the
 *   algebra and bimodule multiplications.  The input space must already carry
 *   the sign twist, which replaces the explicit shuffle signs of the other
 *   two complexes.
 *
 * Everything built here is immutable afterwards and safe for concurrent
 * read-only use.
 */
#pragma once

#include "braidhom/field.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/shuffles.hpp"
#include "braidhom/spaces.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace braidhom {

enum class LabelKind { cell, marked_cell, fchain };

struct BasisLabel {
    LabelKind kind = LabelKind::cell;
    Composition lambda;
    int i = 0;    // marked_cell: axis column (1-based); fchain: bimodule factor position
    int j = 0;    // marked_cell: points below the origin (0-based); fchain: W position in its factor (1-based)
    int rep = 0;  // coefficient basis index

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
    friend auto operator<=>(const BasisLabel& a, const BasisLabel& b) {
        return std::tie(a.kind, a.lambda.parts, a.i, a.j, a.rep) <=>
               std::tie(b.kind, b.lambda.parts, b.i, b.j, b.rep);
    }

    std::string to_string() const {
        std::string s = lambda.to_string();
        if (kind == LabelKind::marked_cell) s += ",i=" + std::to_string(i) + ",j=" + std::to_string(j);
        if (kind == LabelKind::fchain) s += ",pos=" + std::to_string(i) + ",w=" + std::to_string(j);
        s += ",b=" + std::to_string(rep);
        return s;
    }
};

struct GradedComplex {
    int lo = 0, hi = -1;  // empty when hi < lo
    std::vector<std::vector<BasisLabel>> bases;  // [q - lo]
    std::vector<SparseMat> boundary;             // [q - lo], d_q : C_q -> C_{q-1}; d_lo has zero rows
    FieldCtxPtr ctx;

    int dim(int q) const {
        if (q < lo || q > hi) return 0;
        return static_cast<int>(bases[static_cast<size_t>(q - lo)].size());
    }
    const std::vector<BasisLabel>& basis(int q) const { return bases[static_cast<size_t>(q - lo)]; }
    const SparseMat& d(int q) const { return boundary[static_cast<size_t>(q - lo)]; }

    long euler_characteristic() const {
        long chi = 0;
        for (int q = lo; q <= hi; ++q) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(dim(q));
        return chi;
    }
};

inline bool check_d_squared(const GradedComplex& c) {
    for (int q = c.lo + 1; q <= c.hi; ++q)
        if (!c.d(q - 1).mul(c.d(q)).is_zero()) return false;
    return true;
}

namespace detail {

inline std::map<BasisLabel, int> index_of(const std::vector<BasisLabel>& basis) {
    std::map<BasisLabel, int> m;
    for (size_t k = 0; k < basis.size(); ++k) m.emplace(basis[k], static_cast<int>(k));
    return m;
}

}  // namespace detail

/// Column complex of the plane on n points with coefficients acted on by
/// `act` (a positive-braid-word action on a dim_t-dimensional space).
/// Degrees n+1..2n; n = 0 yields the one-point complex in degree 0.
inline GradedComplex build_plane(int n, int dim_t, const FieldCtxPtr& ctx,
                                 const std::function<SparseVec(const BraidWord&, const SparseVec&)>& act) {
    GradedComplex c;
    c.ctx = ctx;
    if (n == 0) {
        c.lo = c.hi = 0;
        c.bases.push_back({});
        for (int b = 0; b < dim_t; ++b) c.bases[0].push_back(BasisLabel{LabelKind::cell, Composition{{}}, 0, 0, b});
        c.boundary.emplace_back(0, dim_t);
        return c;
    }
    c.lo = n + 1;
    c.hi = 2 * n;
    for (int q = c.lo; q <= c.hi; ++q) {
        std::vector<BasisLabel> basis;
        for (const auto& lam : compositions(n, q - n))
            for (int b = 0; b < dim_t; ++b) basis.push_back(BasisLabel{LabelKind::cell, lam, 0, 0, b});
        c.bases.push_back(std::move(basis));
    }
    for (int q = c.lo; q <= c.hi; ++q) {
        SparseMat d(c.dim(q - 1), c.dim(q));
        if (q > c.lo) {
            auto rows = detail::index_of(c.basis(q - 1));
            const auto& cols = c.basis(q);
            for (size_t col = 0; col < cols.size(); ++col) {
                const auto& lab = cols[col];
                const Composition& lam = lab.lambda;
                for (int m = 1; m <= lam.length() - 1; ++m) {
                    Composition rho = coarsen(lam, m);
                    int offset = lam.prefix(m);
                    int face_sign = (m % 2 == 1) ? 1 : -1;
                    for (const auto& g : enumerate_shuffles(lam.parts[static_cast<size_t>(m - 1)],
                                                            lam.parts[static_cast<size_t>(m)])) {
                        SparseVec v;
                        v.emplace(lab.rep, FieldElement::one(ctx));
                        v = act(word_of(g, offset), v);
                        int s = face_sign * sign(g);
                        for (const auto& [idx, coeff] : v) {
                            BasisLabel target{LabelKind::cell, rho, 0, 0, idx};
                            FieldElement val = s > 0 ? coeff : -coeff;
                            d.add_to(rows.at(target), static_cast<int>(col), val);
                        }
                    }
                }
            }
        }
        c.boundary.push_back(std::move(d));
    }
    return c;
}

/// Column complex of the plane on V^(x)n for a braided space.
inline GradedComplex build_plane(int n, const BraidedSpace& space) {
    int dim_t = 1;
    for (int k = 0; k < n; ++k) dim_t *= space.dim_v;
    return build_plane(n, dim_t, space.ctx, [&space, n](const BraidWord& w, const SparseVec& v) {
        return act_plain_word(space, w, n, v);
    });
}

/// Column complex on n+1 points with coefficients in the induced
/// representation: the coefficient index folds the slot as
/// rep = (slot-1)*slot_dim + b.
inline GradedComplex build_plane_induced(const InducedRep& rep) {
    int n = rep.n();
    int d = rep.slot_dim();
    int dim_t = rep.slot_count() * d;
    auto act = [&rep, d](const BraidWord& w, const SparseVec& v) {
        SparseVec out;
        for (const auto& [idx, coeff] : v) {
            int slot = idx / d + 1;
            SparseVec e;
            e.emplace(idx % d, coeff);
            auto [slot2, v2] = rep.apply_word(slot, w, std::move(e));
            for (const auto& [b, x] : v2) {
                auto it = out.find((slot2 - 1) * d + b);
                if (it == out.end())
                    out.emplace((slot2 - 1) * d + b, x);
                else
                    it->second += x;
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    };
    return build_plane(n + 1, dim_t, rep.ctx(), act);
}

/// Column complex of the punctured plane on n points with coefficients.
/// Degrees n..2n.  Cells are (lambda composition of n+1, axis column i,
/// below-origin count j) tensored with the coefficient basis; the overall
/// origin position is iota = j + 1 + (sum of parts before i).  Column merges
/// away from the axis act by signed plain shuffles; merges against the axis
/// distribute over how many points pass below the origin, which is read off
/// from the slot where the lifted word lands.
inline GradedComplex build_punctured(const InducedRep& rep) {
    int n = rep.n();
    int d = rep.slot_dim();
    GradedComplex c;
    c.ctx = rep.ctx();
    c.lo = n;
    c.hi = 2 * n;
    for (int q = c.lo; q <= c.hi; ++q) {
        std::vector<BasisLabel> basis;
        for (const auto& lam : compositions(n + 1, q - n + 1))
            for (int i = 1; i <= lam.length(); ++i)
                for (int j = 0; j < lam.parts[static_cast<size_t>(i - 1)]; ++j)
                    for (int b = 0; b < d; ++b)
                        basis.push_back(BasisLabel{LabelKind::marked_cell, lam, i, j, b});
        c.bases.push_back(std::move(basis));
    }
    for (int q = c.lo; q <= c.hi; ++q) {
        SparseMat dq(c.dim(q - 1), c.dim(q));
        if (q > c.lo) {
            auto rows = detail::index_of(c.basis(q - 1));
            const auto& cols = c.basis(q);
            for (size_t col = 0; col < cols.size(); ++col) {
                const auto& lab = cols[col];
                const Composition& lam = lab.lambda;
                int i = lab.i, j = lab.j;
                int iota = j + 1 + lam.prefix(i);
                for (int m = 1; m <= lam.length() - 1; ++m) {
                    Composition rho = coarsen(lam, m);
                    int offset = lam.prefix(m);
                    int target_i = (m <= i - 1) ? i - 1 : i;
                    int face_sign = (m % 2 == 1) ? 1 : -1;
                    for (const auto& g : enumerate_shuffles(lam.parts[static_cast<size_t>(m - 1)],
                                                            lam.parts[static_cast<size_t>(m)])) {
                        SparseVec e;
                        e.emplace(lab.rep, FieldElement::one(rep.ctx()));
                        auto [slot2, v2] = rep.apply_word(iota, word_of(g, offset), std::move(e));
                        int target_j = slot2 - 1 - rho.prefix(target_i);
                        if (target_j < 0 || target_j >= rho.parts[static_cast<size_t>(target_i - 1)])
                            throw std::logic_error("build_punctured: landed slot outside the merged axis column");
                        if (m != i - 1 && m != i && target_j != j)
                            throw std::logic_error("build_punctured: off-axis merge moved the origin");
                        int s = face_sign * sign(g);
                        for (const auto& [idx, coeff] : v2) {
                            BasisLabel target{LabelKind::marked_cell, rho, target_i, target_j, idx};
                            FieldElement val = s > 0 ? coeff : -coeff;
                            dq.add_to(rows.at(target), static_cast<int>(col), val);
                        }
                    }
                }
            }
        }
        c.boundary.push_back(std::move(dq));
    }
    return c;
}

/// Reduced bar-type complex of the bimodule in one internal degree N >= 1,
/// built from a space that already carries the sign twist.  Degree q is
/// spanned by compositions of N into q positive factor degrees, a factor
/// position holding the W tensor, and the W position inside that factor; the
/// coefficient index runs over the full N-factor tensor with W at its overall
/// position.  Faces multiply adjacent factors; no explicit shuffle signs
/// appear because the twisted braiding carries them.
inline GradedComplex build_bar(const LeftBraidedSpace& twisted, int N) {
    if (N < 1) throw std::invalid_argument("build_bar: internal degree must be >= 1");
    if (!twisted.phi) throw FieldError("build_bar: space must be separable");
    MarkedAction act(twisted);
    int tensor_dim = twisted.dim_w;
    for (int k = 0; k < N - 1; ++k) tensor_dim *= twisted.dim_v;
    GradedComplex c;
    c.ctx = twisted.ctx;
    c.lo = 1;
    c.hi = N;
    for (int q = 1; q <= N; ++q) {
        std::vector<BasisLabel> basis;
        for (const auto& lam : compositions(N, q))
            for (int i = 1; i <= q; ++i)
                for (int j = 1; j <= lam.parts[static_cast<size_t>(i - 1)]; ++j)
                    for (int b = 0; b < tensor_dim; ++b)
                        basis.push_back(BasisLabel{LabelKind::fchain, lam, i, j, b});
        c.bases.push_back(std::move(basis));
    }
    for (int q = 1; q <= N; ++q) {
        SparseMat dq(c.dim(q - 1), c.dim(q));
        if (q > 1) {
            auto rows = detail::index_of(c.basis(q - 1));
            const auto& cols = c.basis(q);
            for (size_t col = 0; col < cols.size(); ++col) {
                const auto& lab = cols[col];
                const Composition& lam = lab.lambda;
                int i = lab.i, j = lab.j;
                int iota = j + lam.prefix(i);  // overall W position, 1-based
                for (int m = 1; m <= lam.length() - 1; ++m) {
                    Composition rho = coarsen(lam, m);
                    int offset = lam.prefix(m);
                    int target_i = (m <= i - 1) ? i - 1 : i;
                    int face_sign = (m % 2 == 1) ? 1 : -1;
                    for (const auto& g : enumerate_shuffles(lam.parts[static_cast<size_t>(m - 1)],
                                                            lam.parts[static_cast<size_t>(m)])) {
                        SparseVec v;
                        v.emplace(lab.rep, FieldElement::one(twisted.ctx));
                        int iota2 = act.apply_word(word_of(g, offset), iota, N, v);
                        int target_j = iota2 - rho.prefix(target_i);
                        if (target_j < 1 || target_j > rho.parts[static_cast<size_t>(target_i - 1)])
                            throw std::logic_error("build_bar: W factor left the merged block");
                        for (const auto& [idx, coeff] : v) {
                            BasisLabel target{LabelKind::fchain, rho, target_i, target_j, idx};
                            FieldElement val = face_sign > 0 ? coeff : -coeff;
                            dq.add_to(rows.at(target), static_cast<int>(col), val);
                        }
                    }
                }
            }
        }
        c.boundary.push_back(std::move(dq));
    }
    return c;
}

}  // namespace braidhom
