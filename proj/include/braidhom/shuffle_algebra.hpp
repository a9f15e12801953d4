/**
 * @file shuffle_algebra.hpp
 * @brief The quantum shuffle algebra of a braided vector space, the bimodule
 *        of tensors carrying one W factor, and the one-dimensional closed
 *        multiplication formulas.
 *
 * Elements are sparse maps keyed by internal degree and tensor basis index;
 * bimodule elements also record the position of the W factor.  Products are
 * computed by brute-force sums over shuffles acting through lifted braid
 * words; the closed forms are checked against that brute force in the tests,
 * never the other way around.
 */
#pragma once

#include "braidhom/field.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/shuffles.hpp"
#include "braidhom/spaces.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace braidhom {

struct AlgebraElement {
    // (internal degree n, basis index over V^(x)n) -> coefficient
    std::map<std::pair<int, int>, FieldElement> terms;

    static AlgebraElement unit(const FieldCtxPtr& ctx) {
        AlgebraElement e;
        e.terms.emplace(std::make_pair(0, 0), FieldElement::one(ctx));
        return e;
    }

    /// x_n = [1|...|1] with n letters, for one-dimensional V.
    static AlgebraElement x(int n, const FieldCtxPtr& ctx) {
        if (n < 0) throw std::invalid_argument("AlgebraElement::x: negative degree");
        AlgebraElement e;
        e.terms.emplace(std::make_pair(n, 0), FieldElement::one(ctx));
        return e;
    }

    void add_term(int deg, int idx, const FieldElement& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(deg, idx);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

struct BimoduleElement {
    // (internal degree q, W position 1..q, basis index over V^(x)i-1 (x) W (x) V^(x)q-i)
    std::map<std::tuple<int, int, int>, FieldElement> terms;

    /// y_{i,n} = [1|..|1|w^(i)|1|..|1], for one-dimensional V and W.
    static BimoduleElement y(int i, int n, const FieldCtxPtr& ctx) {
        if (n < 1 || i < 1 || i > n) throw std::invalid_argument("BimoduleElement::y: bad indices");
        BimoduleElement e;
        e.terms.emplace(std::make_tuple(n, i, 0), FieldElement::one(ctx));
        return e;
    }

    void add_term(int deg, int wpos, int idx, const FieldElement& c) {
        if (c.is_zero()) return;
        auto key = std::make_tuple(deg, wpos, idx);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend bool operator==(const BimoduleElement&, const BimoduleElement&) = default;

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : terms) {
            auto [deg, wpos, idx] = key;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.to_string() << ")*y[" << wpos << "," << deg << "]";
            if (idx != 0) os << "#" << idx;
        }
        if (first) os << "0";
        return os.str();
    }
};

/// Quantum shuffle product: sum over (n,m)-shuffles of lifted braid actions
/// on the concatenated tensor.
inline AlgebraElement shuffle_product(const AlgebraElement& a, const AlgebraElement& b,
                                      const BraidedSpace& space) {
    AlgebraElement out;
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            auto [n, ia] = ka;
            auto [m, ib] = kb;
            int dvn = 1;
            for (int k = 0; k < n; ++k) dvn *= space.dim_v;
            int concat = ia + dvn * ib;
            FieldElement c = ca * cb;
            if (n + m == 0) {
                out.add_term(0, 0, c);
                continue;
            }
            for (const auto& g : enumerate_shuffles(n, m)) {
                SparseVec v;
                v.emplace(concat, FieldElement::one(space.ctx));
                v = act_plain_word(space, word_of(g), n + m, std::move(v));
                for (const auto& [idx, coeff] : v) out.add_term(n + m, idx, coeff * c);
            }
        }
    }
    return out;
}

/// Left multiplication a * mu, summing lifted (p,q)-shuffle actions on the
/// concatenation with the W factor at position p + i.
inline BimoduleElement bimodule_left_mult(const AlgebraElement& a, const BimoduleElement& mu,
                                          const LeftBraidedSpace& space) {
    if (!space.phi) throw FieldError("bimodule multiplication requires a separated braiding");
    MarkedAction act(space);
    BimoduleElement out;
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [km, cm] : mu.terms) {
            auto [p, ia] = ka;
            auto [q, i, im] = km;
            int dvp = 1;
            for (int k = 0; k < p; ++k) dvp *= space.dim_v;
            int concat = ia + dvp * im;
            int total = p + q;
            int pos = p + i;
            FieldElement c = ca * cm;
            for (const auto& g : enumerate_shuffles(p, q)) {
                SparseVec v;
                v.emplace(concat, FieldElement::one(space.ctx));
                int pos2 = act.apply_word(word_of(g), pos, total, v);
                for (const auto& [idx, coeff] : v) out.add_term(total, pos2, idx, coeff * c);
            }
        }
    }
    return out;
}

/// Right multiplication mu * b; the W factor starts at its position inside mu.
inline BimoduleElement bimodule_right_mult(const BimoduleElement& mu, const AlgebraElement& b,
                                           const LeftBraidedSpace& space) {
    if (!space.phi) throw FieldError("bimodule multiplication requires a separated braiding");
    MarkedAction act(space);
    BimoduleElement out;
    for (const auto& [km, cm] : mu.terms) {
        for (const auto& [kb, cb] : b.terms) {
            auto [p, i, im] = km;
            auto [m, ib] = kb;
            int dmu = space.dim_w;
            for (int k = 0; k < p - 1; ++k) dmu *= space.dim_v;
            int concat = im + dmu * ib;
            int total = p + m;
            FieldElement c = cm * cb;
            for (const auto& g : enumerate_shuffles(p, m)) {
                SparseVec v;
                v.emplace(concat, FieldElement::one(space.ctx));
                int pos2 = act.apply_word(word_of(g), i, total, v);
                for (const auto& [idx, coeff] : v) out.add_term(total, pos2, idx, coeff * c);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// One-dimensional closed forms

struct OneDimParams {
    FieldElement q, p, u;

    OneDimParams(FieldElement q_, FieldElement p_, FieldElement u_)
        : q(std::move(q_)), p(std::move(p_)), u(std::move(u_)) {
        if (q.is_zero() || p.is_zero() || u.is_zero())
            throw FieldError("OneDimParams: parameters must be units");
    }
    const FieldCtxPtr& ctx() const { return q.ctx(); }
    LeftBraidedSpace space() const { return one_dim_space(q, p, u); }
};

/// Coefficient of x_{n+m} in x_n * x_m: the quantum binomial binom(n+m, m)_q.
inline FieldElement gamma_product(int n, int m, const FieldElement& q) {
    if (n < 0 || m < 0) throw std::invalid_argument("gamma_product: negative degree");
    return quantum_binomial(n + m, m, q);
}

/// x_m y_n = sum_h u^{m-h} q^{(n-1)(m-h)} binom(n-1+h, h)_q y_{n+h, n+m}.
inline BimoduleElement closed_form_xy(int n, int m, const OneDimParams& par) {
    if (n < 1 || m < 1) throw std::invalid_argument("closed_form_xy: degrees must be >= 1");
    BimoduleElement out;
    for (int h = 0; h <= m; ++h) {
        FieldElement coeff = par.u.pow(m - h) * par.q.pow(static_cast<long>(n - 1) * (m - h)) *
                             quantum_binomial(n - 1 + h, h, par.q);
        out.add_term(n + m, n + h, 0, coeff);
    }
    return out;
}

/// y_n x_m = sum_h (p/u)^h binom(n-1+h, h)_q y_{n+h, n+m}.
inline BimoduleElement closed_form_yx(int n, int m, const OneDimParams& par) {
    if (n < 1 || m < 1) throw std::invalid_argument("closed_form_yx: degrees must be >= 1");
    BimoduleElement out;
    FieldElement ratio = par.p * par.u.inv();
    for (int h = 0; h <= m; ++h) {
        FieldElement coeff = ratio.pow(h) * quantum_binomial(n - 1 + h, h, par.q);
        out.add_term(n + m, n + h, 0, coeff);
    }
    return out;
}

/// Coefficients of x_{m-h} y_{n+h} (h = 0..m) in the expansion of y_n x_m:
/// u^{-m} q^{-(m-h)(n-1+h)} binom(n-1+h,h)_q prod_{k<h} (p - q^{-(n-1+k)}).
/// Requires every written q-power invertible, i.e. q not a small root of
/// unity; at roots of unity use root_of_unity_leading_coeff instead.
inline std::vector<FieldElement> change_of_basis_yx(int n, int m, const OneDimParams& par) {
    if (n < 1 || m < 1) throw std::invalid_argument("change_of_basis_yx: degrees must be >= 1");
    std::vector<FieldElement> out;
    FieldElement u_inv_m = par.u.inv().pow(m);
    FieldElement prod = FieldElement::one(par.ctx());
    for (int h = 0; h <= m; ++h) {
        FieldElement coeff = u_inv_m * par.q.pow(-static_cast<long>(m - h) * (n - 1 + h)) *
                             quantum_binomial(n - 1 + h, h, par.q) * prod;
        out.push_back(coeff);
        prod *= par.p - par.q.pow(-(static_cast<long>(n) - 1 + h));
    }
    return out;
}

/// The y_{n+m} coefficient of y_n x_m modulo left multiples, valid when q is
/// a primitive root of unity of exact order `order`:
/// u^{-m} ceil(n/m) prod_{k<m} (p - q^{-(n-1+k)}) with m = order.
inline FieldElement root_of_unity_leading_coeff(int n, int order, const OneDimParams& par) {
    if (n < 1 || order < 1) throw std::invalid_argument("root_of_unity_leading_coeff: bad indices");
    auto d = multiplicative_order(par.q, order);
    if (!d || *d != order)
        throw FieldError("root_of_unity_leading_coeff: q does not have exact order " + std::to_string(order));
    long ceil_nm = (n + order - 1) / order;
    FieldElement coeff = par.u.inv().pow(order) * FieldElement::from_int(par.ctx(), ceil_nm);
    for (int k = 0; k < order; ++k)
        coeff *= par.p - par.q.pow(-(static_cast<long>(n) - 1 + k));
    return coeff;
}

}  // namespace braidhom
