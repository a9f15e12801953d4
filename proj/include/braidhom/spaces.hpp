/**
 * @file spaces.hpp
 * @brief Braided and left-braided vector spaces, braid-group representations
 *        on tensor powers, and the induced representation of a type-B
 *        representation inside the parent braid group.
 *
 * The braid group on n strands has generators sigma_1..sigma_{n-1}; the
 * type-B group on n strands sits inside the (n+1)-strand group as the braids
 * whose last strand is pure, generated by sigma_1..sigma_{n-1} and tau_n.
 * A left-braided space (V, W, sigma, tau) yields a type-B representation on
 * V^(x)n (x) W; its induced representation decomposes into n+1 slots indexed
 * by where the last strand ends.  Two computable models of that induced
 * action are provided: a generic one that works for any type-B representation
 * and a separable one that threads a factor W through tensor powers of V
 * using the separated braiding phi.
 *
 * All structures are immutable after validation; every action is a pure
 * function, so values may be shared across threads.
 */
#pragma once

#include "braidhom/field.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/shuffles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace braidhom {

struct BraidedSpace {
    int dim_v = 1;
    SparseMat sigma;  // on V (x) V
    FieldCtxPtr ctx;
};

struct LeftBraidedSpace {
    int dim_v = 1, dim_w = 1;
    SparseMat sigma;                // on V (x) V
    SparseMat tau;                  // on V (x) W
    std::optional<SparseMat> phi;   // V (x) W -> W (x) V, the separated braiding
    FieldCtxPtr ctx;

    BraidedSpace braided() const { return BraidedSpace{dim_v, sigma, ctx}; }
};

/// The tensor-swap map X (x) Y -> Y (x) X.
inline SparseMat swap_matrix(int dim_x, int dim_y, const FieldCtxPtr& ctx) {
    SparseMat m(dim_y * dim_x, dim_x * dim_y);
    for (int x = 0; x < dim_x; ++x)
        for (int y = 0; y < dim_y; ++y)
            m.set(y + dim_y * x, x + dim_x * y, FieldElement::one(ctx));
    return m;
}

/// One-dimensional left-braided space: sigma = q, tau = p, phi = u * swap.
inline LeftBraidedSpace one_dim_space(const FieldElement& q, const FieldElement& p, const FieldElement& u) {
    if (q.is_zero() || p.is_zero() || u.is_zero())
        throw FieldError("one_dim_space: braiding scalars must be units");
    LeftBraidedSpace s;
    s.dim_v = s.dim_w = 1;
    s.ctx = q.ctx();
    s.sigma = SparseMat(1, 1);
    s.sigma.set(0, 0, q);
    s.tau = SparseMat(1, 1);
    s.tau.set(0, 0, p);
    SparseMat phi(1, 1);
    phi.set(0, 0, u);
    s.phi = phi;
    return s;
}

inline bool check_braid_equation(const SparseMat& sigma, int dim_v, const FieldCtxPtr& ctx) {
    if (sigma.rows != dim_v * dim_v || sigma.cols != dim_v * dim_v)
        throw std::invalid_argument("check_braid_equation: sigma has wrong size");
    SparseMat id = SparseMat::identity(dim_v, ctx);
    SparseMat s1 = tensor_product(sigma, id);  // sigma (x) id
    SparseMat s2 = tensor_product(id, sigma);  // id (x) sigma
    return s1.mul(s2).mul(s1) == s2.mul(s1).mul(s2);
}

inline bool check_braid_equation(const BraidedSpace& s) {
    return is_invertible(s.sigma, s.ctx) && check_braid_equation(s.sigma, s.dim_v, s.ctx);
}

/// The type-B braid equation on V (x) V (x) W.
inline bool check_lbvs(const SparseMat& sigma, const SparseMat& tau, int dim_v, int dim_w,
                       const FieldCtxPtr& ctx) {
    if (sigma.cols != dim_v * dim_v || tau.cols != dim_v * dim_w)
        throw std::invalid_argument("check_lbvs: map sizes inconsistent with dims");
    SparseMat iv = SparseMat::identity(dim_v, ctx);
    SparseMat iw = SparseMat::identity(dim_w, ctx);
    SparseMat A = tensor_product(sigma, iw);  // sigma (x) id_W
    SparseMat B = tensor_product(iv, tau);    // id_V (x) tau
    return A.mul(B).mul(A).mul(B) == B.mul(A).mul(B).mul(A);
}

inline bool check_lbvs(const LeftBraidedSpace& s) {
    return check_braid_equation(s.braided()) && is_invertible(s.tau, s.ctx) &&
           check_lbvs(s.sigma, s.tau, s.dim_v, s.dim_w, s.ctx);
}

/// The two defining identities of a separated braiding phi on V (x) V (x) W.
inline bool check_separable(const SparseMat& sigma, const SparseMat& tau, const SparseMat& phi,
                            int dim_v, int dim_w, const FieldCtxPtr& ctx) {
    if (phi.cols != dim_v * dim_w || phi.rows != dim_w * dim_v)
        throw std::invalid_argument("check_separable: phi has wrong size");
    SparseMat iv = SparseMat::identity(dim_v, ctx);
    SparseMat iw = SparseMat::identity(dim_w, ctx);
    SparseMat phi1 = tensor_product(phi, iv);   // phi (x) id_V
    SparseMat phi2 = tensor_product(iv, phi);   // id_V (x) phi
    // (1)  (id_W (x) sigma) (phi (x) id) (id (x) phi) = (phi (x) id) (id (x) phi) (sigma (x) id_W)
    SparseMat lhs1 = tensor_product(iw, sigma).mul(phi1).mul(phi2);
    SparseMat rhs1 = phi1.mul(phi2).mul(tensor_product(sigma, iw));
    if (!(lhs1 == rhs1)) return false;
    // (2)  (tau (x) id) (id (x) phi) = (id (x) phi) (sigma (x) id) (id (x) tau) (sigma^{-1} (x) id)
    SparseMat lhs2 = tensor_product(tau, iv).mul(phi2);
    SparseMat rhs2 = phi2.mul(tensor_product(sigma, iw))
                         .mul(tensor_product(iv, tau))
                         .mul(tensor_product(inverse(sigma, ctx), iw));
    return lhs2 == rhs2;
}

inline bool check_separable(const LeftBraidedSpace& s) {
    if (!s.phi) throw FieldError("check_separable: space carries no separated braiding");
    return is_invertible(*s.phi, s.ctx) &&
           check_separable(s.sigma, s.tau, *s.phi, s.dim_v, s.dim_w, s.ctx);
}

/// Assembles the block map on (V + W)^(x)2 with psi := tau o phi^{-1} and a
/// zero W (x) W block, and tests the braid equation on (V + W)^(x)3.
inline bool check_lax_sum(const LeftBraidedSpace& s) {
    if (!s.phi) throw FieldError("check_lax_sum: space carries no separated braiding");
    int dv = s.dim_v, dw = s.dim_w, dx = dv + dw;
    SparseMat psi = s.tau.mul(inverse(*s.phi, s.ctx));  // W (x) V -> V (x) W
    SparseMat sx(dx * dx, dx * dx);
    for (const auto& [rc, v] : s.sigma.a) {
        int av = rc.second % dv, bv = rc.second / dv;
        int rv = rc.first % dv, sv = rc.first / dv;
        sx.add_to(rv + dx * sv, av + dx * bv, v);
    }
    for (const auto& [rc, v] : s.phi->a) {  // (V,W) -> (W,V)
        int av = rc.second % dv, bw = rc.second / dv;
        int rw = rc.first % dw, sv = rc.first / dw;
        sx.add_to((dv + rw) + dx * sv, av + dx * (dv + bw), v);
    }
    for (const auto& [rc, v] : psi.a) {  // (W,V) -> (V,W)
        int aw = rc.second % dw, bv = rc.second / dw;
        int rv = rc.first % dv, sw = rc.first / dv;
        sx.add_to(rv + dx * (dv + sw), (dv + aw) + dx * bv, v);
    }
    return check_braid_equation(sx, dx, s.ctx);
}

/// Inverse-transpose, the structure map of the dual space under the
/// factor-wise dual-basis pairing.
inline SparseMat dual_map(const SparseMat& m, const FieldCtxPtr& ctx) {
    return inverse(m, ctx).transpose();
}

inline BraidedSpace dualize(const BraidedSpace& s) {
    return BraidedSpace{s.dim_v, dual_map(s.sigma, s.ctx), s.ctx};
}

inline LeftBraidedSpace dualize(const LeftBraidedSpace& s) {
    LeftBraidedSpace d = s;
    d.sigma = dual_map(s.sigma, s.ctx);
    d.tau = dual_map(s.tau, s.ctx);
    if (s.phi) d.phi = dual_map(*s.phi, s.ctx);
    return d;
}

/// Sign twist: sigma -> -sigma, phi -> -phi, tau unchanged.  Involutive, and
/// preserves separability.
inline LeftBraidedSpace epsilon_twist(const LeftBraidedSpace& s) {
    LeftBraidedSpace t = s;
    t.sigma = s.sigma.scaled(-FieldElement::one(s.ctx));
    if (s.phi) t.phi = s.phi->scaled(-FieldElement::one(s.ctx));
    return t;
}

// ---------------------------------------------------------------------------
// Generator representations

enum class Family { A, B };

struct GenRep {
    Family family = Family::A;
    int n = 1;    // strand parameter: family A acts on n strands, family B on n+1 with a pure last strand
    int dim = 1;
    FieldCtxPtr ctx;
    std::vector<SparseMat> sigma;  // sigma_1..sigma_{n-1}
    std::optional<SparseMat> tau;  // tau_n, family B only

    const SparseMat& sigma_mat(int i) const {
        if (i < 1 || i > n - 1) throw std::out_of_range("GenRep: sigma index out of range");
        return sigma[static_cast<size_t>(i - 1)];
    }

    bool check_relations(std::string* diag = nullptr) const {
        auto fail = [&](const std::string& msg) {
            if (diag) *diag = msg;
            return false;
        };
        for (int i = 1; i <= n - 1; ++i)
            if (!is_invertible(sigma_mat(i), ctx)) return fail("sigma_" + std::to_string(i) + " singular");
        if (family == Family::B && n >= 1) {
            if (!tau) return fail("family B representation without tau");
            if (!is_invertible(*tau, ctx)) return fail("tau singular");
        }
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j)
                if (!(sigma_mat(i).mul(sigma_mat(j)) == sigma_mat(j).mul(sigma_mat(i))))
                    return fail("far commutation fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        for (int i = 1; i + 1 <= n - 1; ++i) {
            const SparseMat &a = sigma_mat(i), &b = sigma_mat(i + 1);
            if (!(a.mul(b).mul(a) == b.mul(a).mul(b)))
                return fail("braid relation fails at " + std::to_string(i));
        }
        if (family == Family::B && n >= 1) {
            for (int i = 1; i <= n - 2; ++i)
                if (!(sigma_mat(i).mul(*tau) == tau->mul(sigma_mat(i))))
                    return fail("tau commutation fails at " + std::to_string(i));
            if (n >= 2) {
                const SparseMat& s = sigma_mat(n - 1);
                if (!(s.mul(*tau).mul(s).mul(*tau) == tau->mul(s).mul(*tau).mul(s)))
                    return fail("type-B relation fails");
            }
        }
        return true;
    }
};

/// sigma_i = id^(i-1) (x) sigma (x) id^(n-i-1) at position i of a tensor power.
inline SparseMat positional_map(const SparseMat& two_factor, int pos, const std::vector<int>& dims,
                                int out_d1, int out_d2, const FieldCtxPtr& ctx) {
    int low_dim = 1, high_dim = 1;
    for (int k = 0; k < pos - 1; ++k) low_dim *= dims[static_cast<size_t>(k)];
    for (size_t k = static_cast<size_t>(pos + 1); k < dims.size(); ++k) high_dim *= dims[k];
    (void)out_d1;
    (void)out_d2;
    return tensor_product(tensor_product(SparseMat::identity(low_dim, ctx), two_factor),
                          SparseMat::identity(high_dim, ctx));
}

/// Family-A representation on V^(x)n.
inline GenRep rep_from_braided(const BraidedSpace& s, int n) {
    GenRep r;
    r.family = Family::A;
    r.n = n;
    r.ctx = s.ctx;
    r.dim = 1;
    for (int k = 0; k < n; ++k) r.dim *= s.dim_v;
    std::vector<int> dims(static_cast<size_t>(n), s.dim_v);
    for (int i = 1; i <= n - 1; ++i)
        r.sigma.push_back(positional_map(s.sigma, i, dims, s.dim_v, s.dim_v, s.ctx));
    return r;
}

/// Family-B representation on V^(x)n (x) W.
inline GenRep rep_from_left_braided(const LeftBraidedSpace& s, int n) {
    GenRep r;
    r.family = Family::B;
    r.n = n;
    r.ctx = s.ctx;
    r.dim = s.dim_w;
    for (int k = 0; k < n; ++k) r.dim *= s.dim_v;
    std::vector<int> dims(static_cast<size_t>(n) + 1, s.dim_v);
    dims.back() = s.dim_w;
    for (int i = 1; i <= n - 1; ++i)
        r.sigma.push_back(positional_map(s.sigma, i, dims, s.dim_v, s.dim_v, s.ctx));
    if (n >= 1) r.tau = positional_map(s.tau, n, dims, s.dim_v, s.dim_w, s.ctx);
    return r;
}

inline GenRep dualize(const GenRep& r) {
    GenRep d = r;
    for (auto& m : d.sigma) m = dual_map(m, r.ctx);
    if (d.tau) d.tau = dual_map(*d.tau, r.ctx);
    return d;
}

// ---------------------------------------------------------------------------
// Tensor actions

/// Applies a positive braid word to an all-V tensor of `total` factors.
inline SparseVec act_plain_word(const BraidedSpace& s, const BraidWord& w, int total, SparseVec v) {
    std::vector<int> dims(static_cast<size_t>(total), s.dim_v);
    for (int m : w) {
        if (m < 1 || m >= total) throw std::out_of_range("act_plain_word: generator out of range");
        v = apply_two_factor(s.sigma, dims, m, s.dim_v, s.dim_v, v);
    }
    return v;
}

/// One letter of a type-B word on the layout V^(x)n (x) W.
struct BnLetter {
    int index = 0;     // sigma index, 1..n-1
    bool is_tau = false;
};

/// Applies a type-B word to V^(x)n (x) W.  sigma_i braids two V factors; tau
/// acts on the last pair (V, W) without moving W.  A sigma index touching the
/// W factor is illegal.
inline SparseVec act_type_b_word(const LeftBraidedSpace& s, const std::vector<BnLetter>& word, int n,
                                 SparseVec v) {
    std::vector<int> dims(static_cast<size_t>(n) + 1, s.dim_v);
    dims.back() = s.dim_w;
    for (const auto& g : word) {
        if (g.is_tau) {
            v = apply_two_factor(s.tau, dims, n, s.dim_v, s.dim_w, v);
        } else {
            if (g.index < 1 || g.index > n - 1)
                throw std::out_of_range("act_type_b_word: sigma index would move the W factor");
            v = apply_two_factor(s.sigma, dims, g.index, s.dim_v, s.dim_v, v);
        }
    }
    return v;
}

/// Precomputed maps for braid actions on tensors carrying one W factor.
struct MarkedAction {
    int dim_v, dim_w;
    SparseMat sigma;        // V (x) V
    SparseMat phi;          // V (x) W -> W (x) V
    SparseMat tau_phi_inv;  // W (x) V -> V (x) W
    FieldCtxPtr ctx;

    explicit MarkedAction(const LeftBraidedSpace& s)
        : dim_v(s.dim_v), dim_w(s.dim_w), sigma(s.sigma), ctx(s.ctx) {
        if (!s.phi) throw FieldError("marked braid action requires a separated braiding");
        phi = *s.phi;
        tau_phi_inv = s.tau.mul(inverse(phi, s.ctx));
    }

    std::vector<int> layout(int total, int pos) const {
        std::vector<int> dims(static_cast<size_t>(total), dim_v);
        dims[static_cast<size_t>(pos - 1)] = dim_w;
        return dims;
    }

    /// Applies generator m; returns the new W position.  sigma fixes W,
    /// phi moves it one step left, tau o phi^{-1} one step right.
    int apply_gen(int m, int pos, int total, SparseVec& v) const {
        if (m < 1 || m >= total) throw std::out_of_range("marked action: generator out of range");
        auto dims = layout(total, pos);
        if (m == pos - 1) {
            v = apply_two_factor(phi, dims, pos - 1, dim_w, dim_v, v);
            return pos - 1;
        }
        if (m == pos) {
            v = apply_two_factor(tau_phi_inv, dims, pos, dim_v, dim_w, v);
            return pos + 1;
        }
        v = apply_two_factor(sigma, dims, m, dim_v, dim_v, v);
        return pos;
    }

    int apply_word(const BraidWord& w, int pos, int total, SparseVec& v) const {
        for (int m : w) pos = apply_gen(m, pos, total, v);
        return pos;
    }
};

// ---------------------------------------------------------------------------
// Induced representation

/// A vector in the induced representation: one coefficient vector per slot.
struct IndSlotVector {
    int n = 0;  // slots run 1..n+1
    std::map<int, SparseVec> slots;

    void add(int slot, const SparseVec& v, const FieldElement& c) {
        add_scaled(slots[slot], v, c);
        if (slots[slot].empty()) slots.erase(slot);
    }
    friend bool operator==(const IndSlotVector&, const IndSlotVector&) = default;
};

enum class IndModel { generic, separable };

/// The induced representation of a type-B representation on n strands inside
/// the braid group on n+1 strands, with slot-wise generator actions.
///
/// generic model:   slot i is an abstract copy of the underlying
///                  representation L; sigma_i acts through the four-case
///                  coset bookkeeping, with the slot-crossing case rewritten
///                  as the type-B word sigma_i..sigma_{n-1} tau_n
///                  sigma_{n-1}^{-1}..sigma_i^{-1}.
/// separable model: slot i is V^(x)i-1 (x) W (x) V^(x)n-i+1 and generators
///                  act position-wise, with phi and tau o phi^{-1} moving the
///                  W factor across slots.
class InducedRep {
public:
    static InducedRep generic(const GenRep& rep) {
        if (rep.family != Family::B) throw std::invalid_argument("InducedRep::generic needs a family-B representation");
        InducedRep r;
        r.model_ = IndModel::generic;
        r.n_ = rep.n;
        r.dim_ = rep.dim;
        r.ctx_ = rep.ctx;
        r.rep_ = rep;
        // slot-crossing conjugates: sigma_i .. sigma_{n-1} tau sigma_{n-1}^{-1} .. sigma_i^{-1}
        if (rep.n >= 1) {
            r.cross_.resize(static_cast<size_t>(rep.n));
            SparseMat acc = *rep.tau;
            r.cross_[static_cast<size_t>(rep.n - 1)] = acc;  // slot n
            for (int i = rep.n - 1; i >= 1; --i) {
                const SparseMat& s = rep.sigma_mat(i);
                acc = s.mul(acc).mul(inverse(s, rep.ctx));
                r.cross_[static_cast<size_t>(i - 1)] = acc;
            }
        }
        return r;
    }

    static InducedRep separable(const LeftBraidedSpace& space, int n) {
        InducedRep r;
        r.model_ = IndModel::separable;
        r.n_ = n;
        r.ctx_ = space.ctx;
        r.space_ = space;
        r.marked_.emplace(space);
        r.dim_ = space.dim_w;
        for (int k = 0; k < n; ++k) r.dim_ *= space.dim_v;
        return r;
    }

    IndModel model() const { return model_; }
    int n() const { return n_; }
    int slot_count() const { return n_ + 1; }
    int slot_dim() const { return dim_; }
    const FieldCtxPtr& ctx() const { return ctx_; }
    const LeftBraidedSpace& space() const { return *space_; }

    /// Action of sigma_m (1 <= m <= n) on a vector sitting in one slot.
    std::pair<int, SparseVec> apply_gen(int slot, int m, SparseVec v) const {
        if (m < 1 || m > n_) throw std::out_of_range("InducedRep: generator index out of range");
        if (slot < 1 || slot > n_ + 1) throw std::out_of_range("InducedRep: slot out of range");
        if (model_ == IndModel::separable) {
            int pos = marked_->apply_gen(m, slot, n_ + 1, v);
            return {pos, std::move(v)};
        }
        if (m <= slot - 2) return {slot, rep_->sigma_mat(m).apply(v)};
        if (m == slot - 1) return {slot - 1, std::move(v)};
        if (m == slot) return {slot + 1, cross_[static_cast<size_t>(slot - 1)].apply(v)};
        return {slot, rep_->sigma_mat(m - 1).apply(v)};
    }

    std::pair<int, SparseVec> apply_word(int slot, const BraidWord& w, SparseVec v) const {
        for (int m : w) {
            auto [s2, v2] = apply_gen(slot, m, std::move(v));
            slot = s2;
            v = std::move(v2);
        }
        return {slot, std::move(v)};
    }

    IndSlotVector apply_gen(int m, const IndSlotVector& x) const {
        IndSlotVector out;
        out.n = x.n;
        for (const auto& [slot, vec] : x.slots) {
            auto [s2, v2] = apply_gen(slot, m, vec);
            out.add(s2, v2, FieldElement::one(ctx_));
        }
        return out;
    }

    IndSlotVector apply_word(const BraidWord& w, const IndSlotVector& x) const {
        IndSlotVector cur = x;
        for (int m : w) cur = apply_gen(m, cur);
        return cur;
    }

private:
    IndModel model_ = IndModel::generic;
    int n_ = 0;
    int dim_ = 1;
    FieldCtxPtr ctx_;
    std::optional<GenRep> rep_;
    std::vector<SparseMat> cross_;
    std::optional<LeftBraidedSpace> space_;
    std::optional<MarkedAction> marked_;
};

/// Spec-level entry points on whole slot vectors.
inline IndSlotVector induced_action_separable(const LeftBraidedSpace& space, int n, int generator,
                                              const IndSlotVector& v) {
    return InducedRep::separable(space, n).apply_gen(generator, v);
}

inline std::pair<int, SparseVec> induced_action_generic(const GenRep& rep, int generator, int slot,
                                                        const SparseVec& ell) {
    return InducedRep::generic(rep).apply_gen(slot, generator, ell);
}

/// The slot identification used to compare the two models: embeds an element
/// of V^(x)n (x) W into the slot-i layout by threading W leftwards with phi.
inline SparseVec xi_embed(const LeftBraidedSpace& space, int n, int slot, SparseVec v) {
    MarkedAction act(space);
    std::vector<int> dims(static_cast<size_t>(n) + 1, space.dim_v);
    int pos = n + 1;
    for (int target = n; target >= slot; --target) {
        auto layout = act.layout(n + 1, pos);
        v = apply_two_factor(act.phi, layout, target, space.dim_w, space.dim_v, v);
        pos = target;
    }
    (void)dims;
    return v;
}

}  // namespace braidhom
