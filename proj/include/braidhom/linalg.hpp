/**
 * @file linalg.hpp
 * @brief Sparse exact matrices and vectors over a FieldElement scalar.
 *
 * Tensor bases are flattened little-endian: for factors with dimensions
 * d_1, ..., d_r the basis tuple (i_1, ..., i_r) has index
 * i_1 + d_1*(i_2 + d_2*(i_3 + ...)).  The first factor varies fastest.
 * This convention is fixed here once and used everywhere.
 */
#pragma once

#include "braidhom/field.hpp"

#include <map>
#include <utility>
#include <vector>

namespace braidhom {

/// index -> nonzero coefficient
using SparseVec = std::map<int, FieldElement>;

inline void add_scaled(SparseVec& dst, const SparseVec& src, const FieldElement& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : src) {
        auto it = dst.find(k);
        if (it == dst.end()) {
            FieldElement w = v * c;
            if (!w.is_zero()) dst.emplace(k, std::move(w));
        } else {
            it->second += v * c;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

inline bool vec_equal(const SparseVec& a, const SparseVec& b) { return a == b; }

struct SparseMat {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, FieldElement> a;  // no stored zeros

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c) {}

    static SparseMat identity(int n, const FieldCtxPtr& ctx) {
        SparseMat m(n, n);
        for (int k = 0; k < n; ++k) m.a.emplace(std::make_pair(k, k), FieldElement::one(ctx));
        return m;
    }

    void set(int r, int c, const FieldElement& v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseMat::set");
        if (v.is_zero())
            a.erase({r, c});
        else
            a.insert_or_assign({r, c}, v);
    }

    void add_to(int r, int c, const FieldElement& v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseMat::add_to");
        if (v.is_zero()) return;
        auto it = a.find({r, c});
        if (it == a.end()) {
            a.emplace(std::make_pair(r, c), v);
        } else {
            it->second += v;
            if (it->second.is_zero()) a.erase(it);
        }
    }

    FieldElement get(int r, int c, const FieldCtxPtr& ctx) const {
        auto it = a.find({r, c});
        return it == a.end() ? FieldElement::zero(ctx) : it->second;
    }

    bool is_zero() const { return a.empty(); }

    friend bool operator==(const SparseMat& x, const SparseMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    SparseMat mul(const SparseMat& other) const {
        if (cols != other.rows) throw std::invalid_argument("SparseMat::mul: size mismatch");
        // column-indexed view of *this for cache-friendly accumulation
        SparseMat out(rows, other.cols);
        std::map<int, std::vector<std::pair<int, FieldElement>>> by_row_left;
        for (const auto& [rc, v] : a) by_row_left[rc.first].emplace_back(rc.second, v);
        std::map<int, std::vector<std::pair<int, FieldElement>>> by_row_right;
        for (const auto& [rc, v] : other.a) by_row_right[rc.first].emplace_back(rc.second, v);
        for (const auto& [r, lrow] : by_row_left) {
            std::map<int, FieldElement> acc;
            for (const auto& [k, lv] : lrow) {
                auto it = by_row_right.find(k);
                if (it == by_row_right.end()) continue;
                for (const auto& [c, rv] : it->second) {
                    auto jt = acc.find(c);
                    if (jt == acc.end())
                        acc.emplace(c, lv * rv);
                    else
                        jt->second += lv * rv;
                }
            }
            for (auto& [c, v] : acc)
                if (!v.is_zero()) out.a.emplace(std::make_pair(r, c), std::move(v));
        }
        return out;
    }

    SparseVec apply(const SparseVec& v) const {
        SparseVec out;
        std::map<int, std::vector<std::pair<int, FieldElement>>> by_col;
        for (const auto& [rc, x] : a) by_col[rc.second].emplace_back(rc.first, x);
        for (const auto& [c, coeff] : v) {
            auto it = by_col.find(c);
            if (it == by_col.end()) continue;
            for (const auto& [r, x] : it->second) {
                auto jt = out.find(r);
                if (jt == out.end())
                    out.emplace(r, x * coeff);
                else
                    jt->second += x * coeff;
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    SparseMat transpose() const {
        SparseMat t(cols, rows);
        for (const auto& [rc, v] : a) t.a.emplace(std::make_pair(rc.second, rc.first), v);
        return t;
    }

    SparseMat scaled(const FieldElement& c) const {
        SparseMat s(rows, cols);
        if (c.is_zero()) return s;
        for (const auto& [rc, v] : a) s.a.emplace(rc, v * c);
        return s;
    }

    SparseMat minus(const SparseMat& other) const {
        if (rows != other.rows || cols != other.cols)
            throw std::invalid_argument("SparseMat::minus: size mismatch");
        SparseMat d = *this;
        for (const auto& [rc, v] : other.a) {
            auto it = d.a.find(rc);
            if (it == d.a.end()) {
                d.a.emplace(rc, -v);
            } else {
                it->second -= v;
                if (it->second.is_zero()) d.a.erase(it);
            }
        }
        return d;
    }
};

/// Kronecker product in the little-endian convention: if A acts on the first
/// factor and B on the second, the product acts on index iA + rowsA*iB.
inline SparseMat tensor_product(const SparseMat& A, const SparseMat& B) {
    SparseMat out(A.rows * B.rows, A.cols * B.cols);
    for (const auto& [rcA, vA] : A.a)
        for (const auto& [rcB, vB] : B.a)
            out.a.emplace(std::make_pair(rcA.first + A.rows * rcB.first, rcA.second + A.cols * rcB.second),
                          vA * vB);
    return out;
}

/// Applies a two-factor map M : F_pos (x) F_{pos+1} -> G_pos (x) G_{pos+1} at
/// 1-based position `pos` of a tensor with little-endian factor dims `dims`.
/// M is indexed pairwise little-endian: column x + dimX*y, row x' + out_d1*y'.
/// The output layout replaces dims[pos-1], dims[pos] by out_d1, out_d2.
inline SparseVec apply_two_factor(const SparseMat& M, const std::vector<int>& dims, int pos, int out_d1,
                                  int out_d2, const SparseVec& v) {
    int r = static_cast<int>(dims.size());
    if (pos < 1 || pos + 1 > r) throw std::out_of_range("apply_two_factor: position out of range");
    int d1 = dims[static_cast<size_t>(pos - 1)], d2 = dims[static_cast<size_t>(pos)];
    if (M.cols != d1 * d2 || M.rows != out_d1 * out_d2)
        throw std::invalid_argument("apply_two_factor: matrix size mismatch");
    long stride = 1;
    for (int k = 0; k < pos - 1; ++k) stride *= dims[static_cast<size_t>(k)];
    long in_block = stride * d1 * d2;
    long out_block = stride * out_d1 * out_d2;
    std::map<int, std::vector<std::pair<int, FieldElement>>> by_col;
    for (const auto& [rc, x] : M.a) by_col[rc.second].emplace_back(rc.first, x);
    SparseVec out;
    for (const auto& [idx, coeff] : v) {
        long low = idx % stride;
        long mid = (idx / stride) % (static_cast<long>(d1) * d2);
        long high = idx / in_block;
        auto it = by_col.find(static_cast<int>(mid));
        if (it == by_col.end()) continue;
        for (const auto& [row, x] : it->second) {
            long out_idx = low + stride * row + out_block * high;
            auto jt = out.find(static_cast<int>(out_idx));
            if (jt == out.end())
                out.emplace(static_cast<int>(out_idx), x * coeff);
            else
                jt->second += x * coeff;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

enum class RankMode { division, fraction_free };

/// Exact rank by Gaussian elimination with sparsity pivoting (the pivot row is
/// the shortest remaining row).  The fraction-free mode runs integer Bareiss
/// elimination and is only available over Q.
inline long rank(const SparseMat& m, RankMode mode = RankMode::division) {
    if (m.a.empty()) return 0;
    const FieldCtxPtr ctx = m.a.begin()->second.ctx();
    if (mode == RankMode::fraction_free) {
        if (ctx->kind != FieldKind::rationals)
            throw FieldError("fraction-free rank requires rational entries");
        // clear denominators row-wise, then dense Bareiss
        std::vector<std::vector<BigInt>> d(static_cast<size_t>(m.rows),
                                           std::vector<BigInt>(static_cast<size_t>(m.cols), BigInt(0)));
        std::vector<BigInt> lcm_row(static_cast<size_t>(m.rows), BigInt(1));
        for (const auto& [rc, v] : m.a) {
            BigInt den = denominator(v.rational_value());
            BigInt& l = lcm_row[static_cast<size_t>(rc.first)];
            l = l / gcd(l, den) * den;
        }
        for (const auto& [rc, v] : m.a) {
            const Rational& r = v.rational_value();
            d[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] =
                numerator(r) * (lcm_row[static_cast<size_t>(rc.first)] / denominator(r));
        }
        long rk = 0;
        BigInt prev(1);
        for (int c = 0; c < m.cols && rk < m.rows; ++c) {
            int piv = -1;
            for (int r = static_cast<int>(rk); r < m.rows; ++r)
                if (d[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(d[static_cast<size_t>(piv)], d[static_cast<size_t>(rk)]);
            for (int r = static_cast<int>(rk) + 1; r < m.rows; ++r) {
                for (int k = c + 1; k < m.cols; ++k)
                    d[static_cast<size_t>(r)][static_cast<size_t>(k)] =
                        (d[static_cast<size_t>(rk)][static_cast<size_t>(c)] * d[static_cast<size_t>(r)][static_cast<size_t>(k)] -
                         d[static_cast<size_t>(r)][static_cast<size_t>(c)] * d[static_cast<size_t>(rk)][static_cast<size_t>(k)]) /
                        prev;
                d[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
            }
            prev = d[static_cast<size_t>(rk)][static_cast<size_t>(c)];
            ++rk;
        }
        return rk;
    }
    // sparse row elimination
    std::vector<std::map<int, FieldElement>> rows_v(static_cast<size_t>(m.rows));
    for (const auto& [rc, v] : m.a) rows_v[static_cast<size_t>(rc.first)].emplace(rc.second, v);
    std::vector<bool> used(static_cast<size_t>(m.rows), false);
    long rk = 0;
    while (true) {
        int best = -1;
        size_t best_len = 0;
        for (int r = 0; r < m.rows; ++r) {
            if (used[static_cast<size_t>(r)] || rows_v[static_cast<size_t>(r)].empty()) continue;
            if (best < 0 || rows_v[static_cast<size_t>(r)].size() < best_len) {
                best = r;
                best_len = rows_v[static_cast<size_t>(r)].size();
            }
        }
        if (best < 0) break;
        used[static_cast<size_t>(best)] = true;
        ++rk;
        auto pivot_it = rows_v[static_cast<size_t>(best)].begin();
        int pc = pivot_it->first;
        FieldElement pv_inv = pivot_it->second.inv();
        std::map<int, FieldElement> pivot_row = rows_v[static_cast<size_t>(best)];
        for (int r = 0; r < m.rows; ++r) {
            if (used[static_cast<size_t>(r)]) continue;
            auto it = rows_v[static_cast<size_t>(r)].find(pc);
            if (it == rows_v[static_cast<size_t>(r)].end()) continue;
            FieldElement factor = it->second * pv_inv;
            for (const auto& [c, v] : pivot_row) {
                auto jt = rows_v[static_cast<size_t>(r)].find(c);
                if (jt == rows_v[static_cast<size_t>(r)].end()) {
                    FieldElement w = -(v * factor);
                    if (!w.is_zero()) rows_v[static_cast<size_t>(r)].emplace(c, std::move(w));
                } else {
                    jt->second -= v * factor;
                    if (jt->second.is_zero()) rows_v[static_cast<size_t>(r)].erase(jt);
                }
            }
        }
    }
    return rk;
}

/// Matrix inverse by Gauss-Jordan; throws FieldError on singular input.
inline SparseMat inverse(const SparseMat& m, const FieldCtxPtr& ctx) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: matrix not square");
    int n = m.rows;
    std::vector<std::vector<FieldElement>> w(static_cast<size_t>(n),
                                             std::vector<FieldElement>(static_cast<size_t>(2 * n), FieldElement::zero(ctx)));
    for (const auto& [rc, v] : m.a) w[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    for (int k = 0; k < n; ++k) w[static_cast<size_t>(k)][static_cast<size_t>(n + k)] = FieldElement::one(ctx);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!w[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw FieldError("inverse: singular matrix");
        std::swap(w[static_cast<size_t>(piv)], w[static_cast<size_t>(c)]);
        FieldElement inv_p = w[static_cast<size_t>(c)][static_cast<size_t>(c)].inv();
        for (int k = c; k < 2 * n; ++k) w[static_cast<size_t>(c)][static_cast<size_t>(k)] *= inv_p;
        for (int r = 0; r < n; ++r) {
            if (r == c || w[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) continue;
            FieldElement f = w[static_cast<size_t>(r)][static_cast<size_t>(c)];
            for (int k = c; k < 2 * n; ++k)
                w[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * w[static_cast<size_t>(c)][static_cast<size_t>(k)];
        }
    }
    SparseMat out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!w[static_cast<size_t>(r)][static_cast<size_t>(n + c)].is_zero())
                out.a.emplace(std::make_pair(r, c), w[static_cast<size_t>(r)][static_cast<size_t>(n + c)]);
    return out;
}

inline bool is_invertible(const SparseMat& m, const FieldCtxPtr& ctx) {
    if (m.rows != m.cols) return false;
    try {
        inverse(m, ctx);
        return true;
    } catch (const FieldError&) {
        return false;
    }
}

}  // namespace braidhom
