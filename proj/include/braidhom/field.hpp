/**
 * @file field.hpp
 * @brief Exact scalar arithmetic over Q and over the cyclotomic fields Q(zeta_m).
 *
 * Elements of Q(zeta_m) are stored as reduced residues modulo the m-th
 * cyclotomic polynomial Phi_m, so two elements are equal iff their
 * coefficient vectors are equal.  All arithmetic is exact; integers are
 * arbitrary precision.  FieldCtx instances are immutable after creation and
 * FieldElement values are immutable, so both may be shared freely between
 * threads.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidhom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FieldError : public std::runtime_error {
public:
    explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "a" or "a/b" (arbitrary precision, optional sign).
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw FieldError("rational with zero denominator: " + s);
        if (den < 0) {  // the component constructor requires a positive denominator
            den = -den;
            num = -num;
        }
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw FieldError("cannot parse rational '" + s + "': " + e.what());
    }
}

inline std::string render_rational(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

inline long euler_totient(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Coefficients of Phi_m in ascending power order (monic, integer, degree
/// totient(m)), computed by dividing x^m - 1 by Phi_d over all proper
/// divisors d of m.
inline std::vector<BigInt> cyclotomic_poly(long m) {
    if (m < 1) throw FieldError("cyclotomic_poly: m must be positive");
    std::vector<BigInt> num(static_cast<size_t>(m) + 1);
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;  // x^m - 1
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        std::vector<BigInt> phi_d = cyclotomic_poly(d);
        // exact division of num by the monic phi_d
        std::vector<BigInt> quot(num.size() - phi_d.size() + 1);
        std::vector<BigInt> rem = num;
        for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
            BigInt c = rem[static_cast<size_t>(k) + phi_d.size() - 1];
            quot[static_cast<size_t>(k)] = c;
            if (c == 0) continue;
            for (size_t t = 0; t < phi_d.size(); ++t)
                rem[static_cast<size_t>(k) + t] -= c * phi_d[t];
        }
        num = quot;
    }
    return num;
}

enum class FieldKind { rationals, cyclotomic };

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
public:
    FieldKind kind;
    long m = 0;                     // conductor, cyclotomic only
    std::vector<Rational> modulus;  // Phi_m, ascending, monic
    long degree = 1;                // totient(m) for cyclotomic, 1 for Q

    static FieldCtxPtr rationals() {
        static FieldCtxPtr ctx = std::make_shared<const FieldCtx>(FieldCtx{FieldKind::rationals, 0, {}, 1});
        return ctx;
    }

    static FieldCtxPtr cyclotomic(long m) {
        if (m < 1) throw FieldError("cyclotomic conductor must be positive");
        static std::mutex mu;
        static std::map<long, FieldCtxPtr> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        auto phi = cyclotomic_poly(m);
        FieldCtx ctx;
        ctx.kind = FieldKind::cyclotomic;
        ctx.m = m;
        ctx.modulus.assign(phi.begin(), phi.end());
        ctx.degree = static_cast<long>(phi.size()) - 1;
        auto ptr = std::make_shared<const FieldCtx>(std::move(ctx));
        cache.emplace(m, ptr);
        return ptr;
    }

    bool same_as(const FieldCtx& other) const {
        return kind == other.kind && m == other.m;
    }

    std::string describe() const {
        if (kind == FieldKind::rationals) return "Q";
        return "Q(zeta_" + std::to_string(m) + ")";
    }
};

/// An exact element of Q or Q(zeta_m): the reduced residue mod Phi_m.
class FieldElement {
public:
    FieldElement() : ctx_(FieldCtx::rationals()), c_(1, Rational(0)) {}

    static FieldElement zero(const FieldCtxPtr& ctx) { return FieldElement(ctx); }

    static FieldElement one(const FieldCtxPtr& ctx) {
        FieldElement e(ctx);
        e.c_[0] = 1;
        return e;
    }

    static FieldElement from_rational(const FieldCtxPtr& ctx, const Rational& r) {
        FieldElement e(ctx);
        e.c_[0] = r;
        return e;
    }

    static FieldElement from_int(const FieldCtxPtr& ctx, long v) {
        return from_rational(ctx, Rational(v));
    }

    /// zeta_m, the canonical generator. Over Q(zeta_1) this is 1.
    static FieldElement generator(const FieldCtxPtr& ctx) {
        if (ctx->kind != FieldKind::cyclotomic)
            throw FieldError("generator: context is not cyclotomic");
        std::vector<Rational> c(static_cast<size_t>(ctx->degree), Rational(0));
        if (ctx->degree == 1) {
            // Phi_m linear: zeta = -phi_0 (m = 1 gives 1, m = 2 gives -1).
            c[0] = -ctx->modulus[0];
        } else {
            c[1] = 1;
        }
        FieldElement e(ctx);
        e.c_ = std::move(c);
        return e;
    }

    /// Builds an element from ascending-power coefficients (any length;
    /// reduced mod Phi_m).
    static FieldElement from_coeffs(const FieldCtxPtr& ctx, std::vector<Rational> coeffs) {
        if (ctx->kind == FieldKind::rationals) {
            for (size_t k = 1; k < coeffs.size(); ++k)
                if (coeffs[k] != 0) throw FieldError("rational element with nonconstant coefficients");
            FieldElement e(ctx);
            if (!coeffs.empty()) e.c_[0] = coeffs[0];
            return e;
        }
        FieldElement e(ctx);
        e.c_ = reduce(*ctx, std::move(coeffs));
        return e;
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_one() const {
        if (c_[0] != 1) return false;
        for (size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != 0) return false;
        return true;
    }

    /// The constant coefficient; only meaningful projection over Q.
    const Rational& rational_value() const {
        if (ctx_->kind != FieldKind::rationals)
            throw FieldError("rational_value: element is not over Q");
        return c_[0];
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.ctx_->same_as(*b.ctx_) && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_ctx(a, b);
        FieldElement r = a;
        for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
        return r;
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_ctx(a, b);
        FieldElement r = a;
        for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
        return r;
    }

    friend FieldElement operator-(const FieldElement& a) {
        FieldElement r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_ctx(a, b);
        if (a.ctx_->kind == FieldKind::rationals) {
            FieldElement r(a.ctx_);
            r.c_[0] = a.c_[0] * b.c_[0];
            return r;
        }
        std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t s = 0; s < a.c_.size(); ++s) {
            if (a.c_[s] == 0) continue;
            for (size_t t = 0; t < b.c_.size(); ++t) {
                if (b.c_[t] == 0) continue;
                prod[s + t] += a.c_[s] * b.c_[t];
            }
        }
        FieldElement r(a.ctx_);
        r.c_ = reduce(*a.ctx_, std::move(prod));
        return r;
    }

    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    /// Multiplicative inverse via the extended Euclidean algorithm mod Phi_m.
    FieldElement inv() const {
        if (is_zero()) throw FieldError("division by zero");
        if (ctx_->kind == FieldKind::rationals) {
            BigInt num = denominator(c_[0]), den = numerator(c_[0]);
            if (den < 0) {
                den = -den;
                num = -num;
            }
            FieldElement r(ctx_);
            r.c_[0] = Rational(num, den);
            return r;
        }
        // extended Euclid on (this, Phi) over Q[x]
        std::vector<Rational> r0 = ctx_->modulus;
        std::vector<Rational> r1 = trimmed(c_);
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients on `this`
        while (!r1.empty()) {
            auto [q, rem] = poly_divmod(r0, r1);
            std::vector<Rational> s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd (a nonzero constant since Phi_m is irreducible over Q)
        if (r0.size() != 1)
            throw FieldError("inv: modulus and element share a factor");
        Rational g = r0[0];
        std::vector<Rational> out(static_cast<size_t>(ctx_->degree), Rational(0));
        for (size_t k = 0; k < s0.size(); ++k) out[k] = s0[k] / g;
        FieldElement r(ctx_);
        r.c_ = reduce(*ctx_, std::move(out));
        return r;
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inv();
    }

    /// Integer power; negative exponents go through inv().
    FieldElement pow(long e) const {
        if (e < 0) return inv().pow(-e);
        FieldElement acc = one(ctx_);
        FieldElement base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Human-readable form ("3/2", "1 - z^2").  The machine formats live in io.hpp.
    std::string to_string() const {
        if (ctx_->kind == FieldKind::rationals) return render_rational(c_[0]);
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Rational v = c_[k];
            if (!first) {
                os << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            first = false;
            bool unit_coeff = (v == 1 || v == -1) && k > 0;
            if (!unit_coeff)
                os << render_rational(v);
            else if (v == -1)
                os << "-";
            if (k >= 1) {
                if (!unit_coeff) os << "*";
                os << "z";
                if (k >= 2) os << "^" << k;
            }
        }
        if (first) os << "0";
        return os.str();
    }

private:
    explicit FieldElement(const FieldCtxPtr& ctx)
        : ctx_(ctx), c_(static_cast<size_t>(ctx->degree), Rational(0)) {}

    static void check_ctx(const FieldElement& a, const FieldElement& b) {
        if (!a.ctx_->same_as(*b.ctx_))
            throw FieldError("field context mismatch: " + a.ctx_->describe() + " vs " + b.ctx_->describe());
    }

    static std::vector<Rational> trimmed(std::vector<Rational> p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        return p;
    }

    static std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
        for (size_t s = 0; s < a.size(); ++s)
            for (size_t t = 0; t < b.size(); ++t) r[s + t] += a[s] * b[t];
        return trimmed(std::move(r));
    }

    static std::vector<Rational> poly_sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r = a;
        if (b.size() > r.size()) r.resize(b.size(), Rational(0));
        for (size_t t = 0; t < b.size(); ++t) r[t] -= b[t];
        return trimmed(std::move(r));
    }

    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
        std::vector<Rational> num, const std::vector<Rational>& den) {
        std::vector<Rational> quot;
        if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
        Rational lead = den.back();
        for (long k = static_cast<long>(num.size()) - static_cast<long>(den.size()); k >= 0; --k) {
            Rational c = num[static_cast<size_t>(k) + den.size() - 1] / lead;
            quot[static_cast<size_t>(k)] = c;
            if (c == 0) continue;
            for (size_t t = 0; t < den.size(); ++t)
                num[static_cast<size_t>(k) + t] -= c * den[t];
        }
        return {trimmed(std::move(quot)), trimmed(std::move(num))};
    }

    static std::vector<Rational> reduce(const FieldCtx& ctx, std::vector<Rational> p) {
        size_t deg = static_cast<size_t>(ctx.degree);
        // remainder by the monic modulus
        for (long k = static_cast<long>(p.size()) - 1; k >= static_cast<long>(deg); --k) {
            Rational c = p[static_cast<size_t>(k)];
            if (c == 0) continue;
            p[static_cast<size_t>(k)] = 0;
            for (size_t t = 0; t < deg; ++t)
                p[static_cast<size_t>(k) - deg + t] -= c * ctx.modulus[t];
        }
        p.resize(deg, Rational(0));
        return p;
    }

    FieldCtxPtr ctx_;
    std::vector<Rational> c_;
};

/// Smallest d <= bound with a^d = 1, if any.  Over Q only +-1 have finite
/// order; over Q(zeta_m) every root of unity has order dividing lcm(2, m),
/// so only those divisors are probed.
inline std::optional<long> multiplicative_order(const FieldElement& a, long bound) {
    if (a.is_zero()) throw FieldError("multiplicative_order: zero element");
    const auto& ctx = a.ctx();
    if (ctx->kind == FieldKind::rationals) {
        if (a.is_one()) return bound >= 1 ? std::optional<long>(1) : std::nullopt;
        if (a.rational_value() == -1) return bound >= 2 ? std::optional<long>(2) : std::nullopt;
        return std::nullopt;
    }
    long torsion = std::lcm<long>(2, ctx->m);
    for (long d = 1; d <= std::min(bound, torsion); ++d) {
        if (torsion % d != 0) continue;
        if (a.pow(d).is_one()) return d;
    }
    return std::nullopt;
}

}  // namespace braidhom
