/**
 * @file homology.hpp
 * @brief Exact homology of the graded complexes, the matrix-level
 *        isomorphism checks between the three routes, and the degree
 *        bookkeeping that turns complex homology into Artin-group homology.
 *
 * All ranks are computed by exact Gaussian elimination over the scalar
 * field (see linalg.hpp), so every dimension is exact.  The duality
 * re-indexing lives only in artin_homology; builders never shift degrees.
 */
#pragma once

#include "braidhom/complexes.hpp"
#include "braidhom/spaces.hpp"

#include <map>
#include <optional>
#include <string>

namespace braidhom {

struct HomologyTable {
    Family family = Family::B;
    int n = 0;
    std::string coefficients;  // description only
    std::string route;
    std::string field;
    std::map<int, long> dims;  // group degree j -> dimension; absent means 0

    long dim(int j) const {
        auto it = dims.find(j);
        return it == dims.end() ? 0 : it->second;
    }

    bool same_dims(const HomologyTable& other) const {
        int top = std::max(n, other.n);
        for (int j = -1; j <= top + 1; ++j)
            if (dim(j) != other.dim(j)) return false;
        return true;
    }
};

/// dims(q) = dim C_q - rank d_q - rank d_{q+1}.  Requires d^2 = 0; also
/// cross-checks the Euler characteristic of the result against the complex.
inline std::map<int, long> homology_dims(const GradedComplex& c, RankMode mode = RankMode::division) {
    if (!check_d_squared(c)) throw std::logic_error("homology_dims: differential does not square to zero");
    std::map<int, long> out;
    std::map<int, long> ranks;
    for (int q = c.lo; q <= c.hi; ++q) ranks[q] = rank(c.d(q), mode);
    ranks[c.hi + 1] = 0;
    long chi_h = 0;
    for (int q = c.lo; q <= c.hi; ++q) {
        long h = c.dim(q) - ranks[q] - ranks[q + 1];
        if (h < 0) throw std::logic_error("homology_dims: negative dimension");
        if (h > 0) out[q] = h;
        chi_h += (q % 2 == 0 ? 1 : -1) * h;
    }
    if (chi_h != c.euler_characteristic())
        throw std::logic_error("homology_dims: Euler characteristic mismatch");
    return out;
}

// ---------------------------------------------------------------------------
// Matrix-level isomorphism checks between routes

namespace detail {

/// Compares two complexes under a degree shift and a label translation,
/// reporting the first offending entry.
inline bool compare_under_map(const GradedComplex& a, const GradedComplex& b, int shift,
                              const std::function<BasisLabel(const BasisLabel&)>& translate,
                              std::string* diag) {
    auto fail = [&](const std::string& msg) {
        if (diag) *diag = msg;
        return false;
    };
    for (int q = a.lo; q <= a.hi; ++q) {
        if (a.dim(q) != b.dim(q + shift))
            return fail("basis size mismatch at degree " + std::to_string(q) + ": " +
                        std::to_string(a.dim(q)) + " vs " + std::to_string(b.dim(q + shift)));
    }
    std::map<int, std::vector<int>> maps;  // a-index -> b-index per degree
    for (int q = a.lo; q <= a.hi; ++q) {
        auto b_index = index_of(b.basis(q + shift));
        std::vector<int> m;
        m.reserve(a.basis(q).size());
        for (const auto& lab : a.basis(q)) {
            auto it = b_index.find(translate(lab));
            if (it == b_index.end()) return fail("unmatched basis label " + lab.to_string());
            m.push_back(it->second);
        }
        maps[q] = std::move(m);
    }
    for (int q = a.lo + 1; q <= a.hi; ++q) {
        SparseMat mapped(b.dim(q - 1 + shift), b.dim(q + shift));
        const auto& rmap = maps[q - 1];
        const auto& cmap = maps[q];
        for (const auto& [rc, v] : a.d(q).a)
            mapped.set(rmap[static_cast<size_t>(rc.first)], cmap[static_cast<size_t>(rc.second)], v);
        if (!(mapped == b.d(q + shift))) {
            if (diag) {
                const SparseMat& want = b.d(q + shift);
                for (const auto& [rc, v] : mapped.a) {
                    auto it = want.a.find(rc);
                    if (it == want.a.end() || !(it->second == v)) {
                        *diag = "entry mismatch at degree " + std::to_string(q) + " row " +
                                std::to_string(rc.first) + " col " + std::to_string(rc.second);
                        return false;
                    }
                }
                *diag = "extra entries at degree " + std::to_string(q + shift);
            }
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// The punctured-plane complex agrees with the plane complex on one more
/// point with induced coefficients, two degrees up, under
/// (lambda, i, j, b) -> (lambda, slot iota, b) with iota = j+1+prefix(i).
inline bool iso_check_punctured_vs_plane(const InducedRep& rep, std::string* diag = nullptr) {
    GradedComplex dn = build_punctured(rep);
    GradedComplex cn = build_plane_induced(rep);
    int d = rep.slot_dim();
    auto translate = [d](const BasisLabel& lab) {
        int iota = lab.j + 1 + lab.lambda.prefix(lab.i);
        return BasisLabel{LabelKind::cell, lab.lambda, 0, 0, (iota - 1) * d + lab.rep};
    };
    return detail::compare_under_map(dn, cn, 2, translate, diag);
}

/// The bar-type complex of the sign-twisted bimodule agrees with the plane
/// complex with induced coefficients under
/// (lambda, pos i, w j, b) -> (lambda, slot iota, b) with iota = j+prefix(i),
/// degree q matching degree q+n+1.
inline bool iso_check_bar_vs_plane(int n, const LeftBraidedSpace& space, std::string* diag = nullptr) {
    if (!space.phi) throw FieldError("iso_check_bar_vs_plane: space must be separable");
    GradedComplex fn = build_bar(epsilon_twist(space), n + 1);
    InducedRep rep = InducedRep::separable(space, n);
    GradedComplex cn = build_plane_induced(rep);
    int d = rep.slot_dim();
    auto translate = [d](const BasisLabel& lab) {
        int iota = lab.j + lab.lambda.prefix(lab.i);
        return BasisLabel{LabelKind::cell, lab.lambda, 0, 0, (iota - 1) * d + lab.rep};
    };
    return detail::compare_under_map(fn, cn, n + 1, translate, diag);
}

// ---------------------------------------------------------------------------
// Artin-group homology via the three routes

enum class Route { C, D, F };

inline std::string route_name(Route r) {
    switch (r) {
        case Route::C: return "C";
        case Route::D: return "D";
        case Route::F: return "F";
    }
    return "?";
}

inline std::optional<Route> route_from_name(const std::string& s) {
    if (s == "C" || s == "c") return Route::C;
    if (s == "D" || s == "d") return Route::D;
    if (s == "F" || s == "f") return Route::F;
    return std::nullopt;
}

/// Homology of the type-B group on n strands with coefficients in the
/// representation attached to a left-braided space.  The coefficient
/// representation is dualized internally; the routes differ only in which
/// complex is built and how its degrees re-index:
///   route D: dim H_j = dims(2n - j)     on the punctured-plane complex,
///   route C: dim H_j = dims(2n + 2 - j) on the plane complex with induced
///            coefficients,
///   route F: dim H_j = dims(n + 1 - j)  on the bar-type complex of the
///            dualized, sign-twisted bimodule.
inline HomologyTable artin_homology(int n, const LeftBraidedSpace& space, Route route,
                                    std::optional<IndModel> model = std::nullopt,
                                    RankMode mode = RankMode::division) {
    if (n < 0) throw std::invalid_argument("artin_homology: n must be >= 0");
    LeftBraidedSpace dual = dualize(space);
    HomologyTable t;
    t.family = Family::B;
    t.n = n;
    t.route = route_name(route);
    t.field = space.ctx->describe();
    std::map<int, long> dims;
    int top_degree = 0;
    if (route == Route::F) {
        if (!space.phi) throw FieldError("route F requires a separable coefficient space");
        dims = homology_dims(build_bar(epsilon_twist(dual), n + 1), mode);
        top_degree = n + 1;
    } else {
        IndModel m = model.value_or(space.phi ? IndModel::separable : IndModel::generic);
        InducedRep rep = (m == IndModel::separable)
                             ? InducedRep::separable(dual, n)
                             : InducedRep::generic(dualize(rep_from_left_braided(space, n)));
        if (route == Route::D) {
            dims = homology_dims(build_punctured(rep), mode);
            top_degree = 2 * n;
        } else {
            dims = homology_dims(build_plane_induced(rep), mode);
            top_degree = 2 * n + 2;
        }
    }
    for (const auto& [q, h] : dims) t.dims[top_degree - q] = h;
    return t;
}

/// Same computation from bare generator matrices (no separated braiding):
/// only the generic model is available and route F is rejected.
inline HomologyTable artin_homology(int n, const GenRep& rep_b, Route route,
                                    RankMode mode = RankMode::division) {
    if (rep_b.family != Family::B) throw std::invalid_argument("artin_homology: family-B representation required");
    if (rep_b.n != n) throw std::invalid_argument("artin_homology: representation strand count mismatch");
    if (route == Route::F)
        throw FieldError("route F requires a separable coefficient space, not bare generator matrices");
    InducedRep rep = InducedRep::generic(dualize(rep_b));
    HomologyTable t;
    t.family = Family::B;
    t.n = n;
    t.route = route_name(route);
    t.field = rep_b.ctx->describe();
    std::map<int, long> dims;
    int top_degree;
    if (route == Route::D) {
        dims = homology_dims(build_punctured(rep), mode);
        top_degree = 2 * n;
    } else {
        dims = homology_dims(build_plane_induced(rep), mode);
        top_degree = 2 * n + 2;
    }
    for (const auto& [q, h] : dims) t.dims[top_degree - q] = h;
    return t;
}

/// Homology of the braid group on n strands with coefficients in V^(x)n,
/// via the plane complex of the dualized space: dim H_j = dims(2n - j).
inline HomologyTable artin_homology_a(int n, const BraidedSpace& space,
                                      RankMode mode = RankMode::division) {
    if (n < 0) throw std::invalid_argument("artin_homology_a: n must be >= 0");
    HomologyTable t;
    t.family = Family::A;
    t.n = n;
    t.route = "C";
    t.field = space.ctx->describe();
    auto dims = homology_dims(build_plane(n, dualize(space)), mode);
    for (const auto& [q, h] : dims) t.dims[2 * n - q] = h;
    return t;
}

}  // namespace braidhom
