/**
 * @file shuffles.hpp
 * @brief Compositions, (p,q)-shuffles, marked shuffles and their sign sums.
 *
 * A (p,q)-shuffle is a permutation of {1..p+q} that is order-preserving on
 * the first p and on the last q elements; it is stored as the image array of
 * the full permutation.  Marked shuffles additionally constrain where one
 * designated element goes and split into a fixed block move omega followed by
 * two smaller shuffles on disjoint windows.  Lifts to positive braids are
 * produced as reduced words of adjacent transpositions in application order
 * (first letter acts first); any reduced word would do since braidings
 * satisfy the braid relations, and we fix the bubble-sort word for
 * reproducibility.
 */
#pragma once

#include "braidhom/field.hpp"

#include <algorithm>
#include <vector>

namespace braidhom {

struct Composition {
    std::vector<int> parts;  // each >= 1

    int length() const { return static_cast<int>(parts.size()); }
    int total() const {
        int s = 0;
        for (int x : parts) s += x;
        return s;
    }
    /// Sum of parts strictly before 1-based index m.
    int prefix(int m) const {
        int s = 0;
        for (int k = 0; k < m - 1; ++k) s += parts[static_cast<size_t>(k)];
        return s;
    }
    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts <=> b.parts;
    }
    std::string to_string() const {
        std::string s = "(";
        for (size_t k = 0; k < parts.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(parts[k]);
        }
        return s + ")";
    }
};

/// All compositions of `total` with exactly `length` parts, lexicographic.
inline std::vector<Composition> compositions(int total, int length) {
    std::vector<Composition> out;
    if (length < 1 || length > total) return out;
    std::vector<int> cur(static_cast<size_t>(length), 1);
    // recursive enumeration in lexicographic order
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == length - 1) {
            cur[static_cast<size_t>(pos)] = remaining;
            out.push_back(Composition{cur});
            return;
        }
        for (int v = 1; v <= remaining - (length - pos - 1); ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

/// Merges parts m and m+1 (1-based m).
inline Composition coarsen(const Composition& lambda, int m) {
    if (m < 1 || m >= lambda.length())
        throw std::out_of_range("coarsen: merge index out of range");
    Composition rho;
    rho.parts.reserve(lambda.parts.size() - 1);
    for (int k = 0; k < lambda.length(); ++k) {
        if (k == m - 1)
            rho.parts.push_back(lambda.parts[static_cast<size_t>(k)] + lambda.parts[static_cast<size_t>(k + 1)]);
        else if (k != m)
            rho.parts.push_back(lambda.parts[static_cast<size_t>(k)]);
    }
    return rho;
}

inline long inversions(const std::vector<int>& image) {
    long inv = 0;
    for (size_t a = 0; a < image.size(); ++a)
        for (size_t b = a + 1; b < image.size(); ++b)
            if (image[a] > image[b]) ++inv;
    return inv;
}

struct ShufflePerm {
    std::vector<int> image;  // image[k] = gamma(k+1), values 1..p+q
    int p = 0, q = 0;

    int operator()(int k) const { return image[static_cast<size_t>(k - 1)]; }
    int size() const { return p + q; }
    friend bool operator==(const ShufflePerm&, const ShufflePerm&) = default;
};

inline std::vector<ShufflePerm> enumerate_shuffles(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("enumerate_shuffles: negative block");
    int n = p + q;
    std::vector<ShufflePerm> out;
    // choose the image set of the first block; both blocks stay ordered
    std::vector<int> pick(static_cast<size_t>(std::max(p, 0)));
    for (int k = 0; k < p; ++k) pick[static_cast<size_t>(k)] = k + 1;
    auto emit = [&]() {
        ShufflePerm s;
        s.p = p;
        s.q = q;
        s.image.assign(static_cast<size_t>(n), 0);
        std::vector<bool> used(static_cast<size_t>(n) + 1, false);
        for (int k = 0; k < p; ++k) {
            s.image[static_cast<size_t>(k)] = pick[static_cast<size_t>(k)];
            used[static_cast<size_t>(pick[static_cast<size_t>(k)])] = true;
        }
        int slot = 0;
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<size_t>(v)]) s.image[static_cast<size_t>(p + slot++)] = v;
        out.push_back(std::move(s));
    };
    if (p == 0) {
        emit();
        return out;
    }
    while (true) {
        emit();
        int k = p - 1;
        while (k >= 0 && pick[static_cast<size_t>(k)] == n - (p - 1 - k)) --k;
        if (k < 0) break;
        ++pick[static_cast<size_t>(k)];
        for (int t = k + 1; t < p; ++t) pick[static_cast<size_t>(t)] = pick[static_cast<size_t>(t - 1)] + 1;
    }
    return out;
}

inline int sign(const ShufflePerm& s) { return inversions(s.image) % 2 == 0 ? 1 : -1; }

/// c_{p,q}: the signed count of (p,q)-shuffles, equal to the quantum binomial
/// binom(p+q, q) at q = -1.  Computed by the Pascal-type recurrence; returns 0
/// for negative arguments so convolution identities can be written uniformly.
inline long long c_constant(int p, int q) {
    if (p < 0 || q < 0) return 0;
    // row-by-row: b(a, k) = b(a-1, k-1) + (-1)^k b(a-1, k)
    std::vector<long long> row(static_cast<size_t>(p + q) + 1, 0);
    row[0] = 1;
    for (int a = 1; a <= p + q; ++a) {
        for (int k = a; k >= 1; --k)
            row[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] + (k % 2 == 0 ? row[static_cast<size_t>(k)] : -row[static_cast<size_t>(k)]);
        // k = 0 entry stays 1
    }
    return row[static_cast<size_t>(q)];
}

/// binom(a, b)_q via the q-Pascal recurrence
/// binom(a,b) = binom(a-1,b-1) + q^b binom(a-1,b), never by dividing
/// q-factorials (which degenerate to 0/0 at roots of unity).
inline FieldElement quantum_binomial(int a, int b, const FieldElement& q) {
    if (b < 0 || b > a) throw std::invalid_argument("quantum_binomial: b out of range");
    auto ctx = q.ctx();
    std::vector<FieldElement> row(static_cast<size_t>(b) + 1, FieldElement::zero(ctx));
    row[0] = FieldElement::one(ctx);
    std::vector<FieldElement> qpow(static_cast<size_t>(b) + 1, FieldElement::one(ctx));
    for (int k = 1; k <= b; ++k) qpow[static_cast<size_t>(k)] = qpow[static_cast<size_t>(k - 1)] * q;
    for (int row_a = 1; row_a <= a; ++row_a)
        for (int k = std::min(b, row_a); k >= 1; --k)
            row[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] + qpow[static_cast<size_t>(k)] * row[static_cast<size_t>(k)];
    return row[static_cast<size_t>(b)];
}

enum class MarkKind {
    right,  // (p,(q,h),j): sends j+1 to j+h+1,   0 <= h <= q, 0 <= j <= p-1
    left,   // ((p,h),q,j): sends p+j+1 to h+j+1, 0 <= h <= p, 0 <= j <= q-1
};

struct MarkedShuffle {
    ShufflePerm base;
    MarkKind kind;
    int h = 0, j = 0;
};

inline void check_marked_bounds(MarkKind kind, int p, int q, int h, int j) {
    bool ok = (kind == MarkKind::right) ? (h >= 0 && h <= q && j >= 0 && j <= p - 1)
                                        : (h >= 0 && h <= p && j >= 0 && j <= q - 1);
    if (!ok) throw std::out_of_range("marked shuffle indices out of range");
}

inline std::vector<MarkedShuffle> enumerate_marked(MarkKind kind, int p, int q, int h, int j) {
    check_marked_bounds(kind, p, q, h, j);
    std::vector<MarkedShuffle> out;
    for (auto& s : enumerate_shuffles(p, q)) {
        bool match = (kind == MarkKind::right) ? s(j + 1) == j + h + 1 : s(p + j + 1) == h + j + 1;
        if (match) out.push_back(MarkedShuffle{s, kind, h, j});
    }
    return out;
}

struct MarkedDecomposition {
    std::vector<int> omega;  // fixed block move, image array on p+q letters
    ShufflePerm beta;        // low window: (j,h)-shuffle (right) / (h,j)-shuffle (left)
    ShufflePerm delta;       // high window: (p-j-1,q-h) (right) / (p-h,q-j-1) (left)
};

/// The unique factorization s = delta' o beta' o omega, where beta acts on the
/// window below the marked element's image and delta on the window above it.
inline MarkedDecomposition decompose_marked(const MarkedShuffle& s) {
    int p = s.base.p, q = s.base.q, h = s.h, j = s.j;
    int n = p + q;
    MarkedDecomposition d;
    d.omega.assign(static_cast<size_t>(n), 0);
    int low = 0;   // window [1, low], fixed point at low+1
    if (s.kind == MarkKind::right) {
        low = j + h;
        for (int m = 1; m <= n; ++m) {
            int im;
            if (m <= j) im = m;
            else if (m <= p) im = m + h;
            else if (m <= p + h) im = m - p + j;
            else im = m;
            d.omega[static_cast<size_t>(m - 1)] = im;
        }
    } else {
        low = h + j;
        for (int m = 1; m <= n; ++m) {
            int im;
            if (m <= h) im = m;
            else if (m <= p) im = m + j + 1;
            else if (m <= p + j + 1) im = m - p + h;
            else im = m;
            d.omega[static_cast<size_t>(m - 1)] = im;
        }
    }
    // rest = s o omega^{-1}: fixes low+1 and preserves the two windows
    std::vector<int> omega_inv(static_cast<size_t>(n));
    for (int m = 1; m <= n; ++m) omega_inv[static_cast<size_t>(d.omega[static_cast<size_t>(m - 1)] - 1)] = m;
    std::vector<int> rest(static_cast<size_t>(n));
    for (int m = 1; m <= n; ++m)
        rest[static_cast<size_t>(m - 1)] = s.base.image[static_cast<size_t>(omega_inv[static_cast<size_t>(m - 1)] - 1)];
    if (rest[static_cast<size_t>(low)] != low + 1)
        throw std::logic_error("decompose_marked: marked element not fixed after omega");
    auto window = [&](int from, int count, int bp, int bq) {
        ShufflePerm w;
        w.p = bp;
        w.q = bq;
        w.image.resize(static_cast<size_t>(count));
        for (int t = 0; t < count; ++t)
            w.image[static_cast<size_t>(t)] = rest[static_cast<size_t>(from + t - 1)] - (from - 1);
        return w;
    };
    if (s.kind == MarkKind::right) {
        d.beta = window(1, low, j, h);
        d.delta = window(low + 2, n - low - 1, p - j - 1, q - h);
    } else {
        d.beta = window(1, low, h, j);
        d.delta = window(low + 2, n - low - 1, p - h, q - j - 1);
    }
    return d;
}

/// Signed count over the marked shuffle family, by the closed forms
/// (-1)^{h(p-j)} c_{j,h} c_{p-j-1,q-h} and (-1)^{(j+1)(p-h)} c_{h,j} c_{p-h,q-j-1}.
inline long long c_marked(MarkKind kind, int p, int q, int h, int j) {
    check_marked_bounds(kind, p, q, h, j);
    if (kind == MarkKind::right) {
        long long s = (static_cast<long long>(h) * (p - j)) % 2 == 0 ? 1 : -1;
        return s * c_constant(j, h) * c_constant(p - j - 1, q - h);
    }
    long long s = (static_cast<long long>(j + 1) * (p - h)) % 2 == 0 ? 1 : -1;
    return s * c_constant(h, j) * c_constant(p - h, q - j - 1);
}

/// A positive braid word: 1-based generator indices in application order
/// (the first entry acts first).
using BraidWord = std::vector<int>;

/// Reduced word realizing the permutation `image` (1-based values), shifted
/// by `offset`: bubble sort of the strand order, one generator per swap.
/// The word length equals the inversion count.
inline BraidWord word_of(const std::vector<int>& image, int offset = 0) {
    int n = static_cast<int>(image.size());
    std::vector<int> strand(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) strand[static_cast<size_t>(k)] = k + 1;
    BraidWord w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k + 1 < n; ++k) {
            if (image[static_cast<size_t>(strand[static_cast<size_t>(k)] - 1)] >
                image[static_cast<size_t>(strand[static_cast<size_t>(k + 1)] - 1)]) {
                std::swap(strand[static_cast<size_t>(k)], strand[static_cast<size_t>(k + 1)]);
                w.push_back(offset + k + 1);
                changed = true;
            }
        }
    }
    return w;
}

inline BraidWord word_of(const ShufflePerm& s, int offset = 0) { return word_of(s.image, offset); }
inline BraidWord word_of(const MarkedShuffle& s, int offset = 0) { return word_of(s.base.image, offset); }

}  // namespace braidhom
