/**
 * @file oracle.hpp
 * @brief Closed-form expected homology of the type-B groups with
 *        one-dimensional coefficients, keyed by the arithmetic of the
 *        parameter pair (q, p).
 *
 * The case split is driven by the multiplicative order of -q and by whether
 * p is a (negative or positive) power of -q.  The tables themselves are
 * encoded data, not re-derivations; any mismatch a route computation turns
 * up is a finding to report, never to patch here.
 */
#pragma once

#include "braidhom/field.hpp"
#include "braidhom/shuffles.hpp"

#include <map>
#include <optional>
#include <string>

namespace braidhom {

struct CaseTag {
    enum class Kind { generic_generic, generic_power, unity_generic, unity_r1, unity_r };
    Kind kind = Kind::generic_generic;
    long m = 0;  // exact multiplicative order of -q (unity cases)
    long r = 0;  // power index: p = (-q)^{-(r-1)} (generic_power) or p = (-q)^r (unity_r)

    std::string to_string() const {
        switch (kind) {
            case Kind::generic_generic: return "generic/generic";
            case Kind::generic_power: return "generic/power(r=" + std::to_string(r) + ")";
            case Kind::unity_generic: return "unity(m=" + std::to_string(m) + ")/generic";
            case Kind::unity_r1: return "unity(m=" + std::to_string(m) + ")/r=1";
            case Kind::unity_r: return "unity(m=" + std::to_string(m) + ")/r=" + std::to_string(r);
        }
        return "?";
    }
};

/// Decides the case of (q, p).  Powers are probed exactly: r <= n_max+1 in
/// the generic case (larger r cannot contribute within the requested range)
/// and r <= m in the unity case (powers of -q cycle with period m).
inline CaseTag classify(const FieldElement& q, const FieldElement& p, int n_max) {
    if (q.is_zero() || p.is_zero()) throw FieldError("classify: parameters must be units");
    FieldElement mq = -q;
    long bound = q.ctx()->kind == FieldKind::rationals ? 2 : 2 * q.ctx()->m;
    auto order = multiplicative_order(mq, bound);
    CaseTag tag;
    if (!order) {
        FieldElement mq_inv = mq.inv();
        FieldElement pw = FieldElement::one(q.ctx());  // (-q)^{-(r-1)} at r = 1
        for (long r = 1; r <= static_cast<long>(n_max) + 1; ++r) {
            if (p == pw) {
                tag.kind = CaseTag::Kind::generic_power;
                tag.r = r;
                return tag;
            }
            pw *= mq_inv;
        }
        tag.kind = CaseTag::Kind::generic_generic;
        return tag;
    }
    tag.m = *order;
    FieldElement pw = mq;  // (-q)^r at r = 1
    for (long r = 1; r <= tag.m; ++r) {
        if (p == pw) {
            tag.kind = (r == 1) ? CaseTag::Kind::unity_r1 : CaseTag::Kind::unity_r;
            tag.r = r;
            return tag;
        }
        pw *= mq;
    }
    tag.kind = CaseTag::Kind::unity_generic;
    return tag;
}

struct ExpectedTable {
    int n = 0;
    std::map<int, long> dims;  // degree j -> dimension; absent means 0

    long dim(int j) const {
        auto it = dims.find(j);
        return it == dims.end() ? 0 : it->second;
    }
};

/// The published dimension patterns, case by case.
inline ExpectedTable expected_homology(const CaseTag& tag, int n) {
    if (n < 0) throw std::invalid_argument("expected_homology: n must be >= 0");
    ExpectedTable t;
    t.n = n;
    auto put = [&](int j, long v) {
        if (v != 0 && j >= 0 && j <= n) t.dims[j] += v;
    };
    if (n == 0) {
        put(0, 1);
        return t;
    }
    switch (tag.kind) {
        case CaseTag::Kind::generic_generic:
        case CaseTag::Kind::unity_generic:
            break;
        case CaseTag::Kind::generic_power:
            if (n == tag.r) {
                put(static_cast<int>(tag.r) - 1, 1);
                put(static_cast<int>(tag.r), 1);
            }
            break;
        case CaseTag::Kind::unity_r1:
            if (n % tag.m == 0) {
                put(n - 1, 1);
                put(n, 1);
            }
            break;
        case CaseTag::Kind::unity_r: {
            long m = tag.m, r = tag.r;
            if (n % m == 0) {
                long k = n / m;
                put(static_cast<int>(n - 2 * k), 1);
                for (long j = n - 2 * k + 1; j <= n - 1; ++j) put(static_cast<int>(j), 2);
                put(n, 1);
            } else if ((n - (m - r + 1)) % m == 0 && n >= m - r + 1) {
                long k = (n - (m - r + 1)) / m;
                put(static_cast<int>(n - 2 * k - 1), 1);
                for (long j = n - 2 * k; j <= n - 1; ++j) put(static_cast<int>(j), 2);
                put(n, 1);
            }
            break;
        }
    }
    return t;
}

/// Inclusive vanishing bound B: the expected table is zero in every degree
/// j <= B.  Only stated for the unity cases.
inline Rational vanishing_line(const CaseTag& tag, int n) {
    if (tag.kind == CaseTag::Kind::unity_r1) return Rational(BigInt(n - 2));
    if (tag.kind == CaseTag::Kind::unity_r)
        return Rational(BigInt((tag.m - 2)) * n, BigInt(tag.m)) - 1;
    throw FieldError("vanishing_line: no statement for generic parameters");
}

/// Structure probe for the one-dimensional shuffle algebra: whether the
/// degree-1 class generates polynomially or truncates.  The coefficient of
/// x_d in x_1^{*d} is the cumulative product of the quantum integers [k]_q.
struct GammaReport {
    struct Row {
        int degree;
        FieldElement factor;      // [degree]_q, the new factor at this degree
        FieldElement cumulative;  // coefficient of x_degree in x_1^{*degree}
    };
    std::vector<Row> rows;
    std::optional<int> truncation_degree;  // smallest d with x_1^{*d} = 0
    bool polynomial = true;                // no truncation within the probe
};

inline GammaReport gamma_presentation(const FieldElement& q, int probe_degree) {
    GammaReport rep;
    FieldElement cum = FieldElement::one(q.ctx());
    for (int d = 1; d <= probe_degree; ++d) {
        FieldElement factor = quantum_binomial(d, 1, q);  // [d]_q
        cum *= factor;
        rep.rows.push_back(GammaReport::Row{d, factor, cum});
        if (cum.is_zero() && !rep.truncation_degree) {
            rep.truncation_degree = d;
            rep.polynomial = false;
        }
    }
    return rep;
}

}  // namespace braidhom
