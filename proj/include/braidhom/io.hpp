/**
 * @file io.hpp
 * @brief Machine formats: scalar and field-spec grammars, JSON fixtures for
 *        spaces and representations, complex export, homology reports.
 *
 * Scalars print as "a/b" over Q and as {"m": m, "coeffs": ["a/b", ...]} over
 * a cyclotomic field (coefficients in ascending power order).  The input
 * grammar additionally accepts sums of terms in the generator z, e.g.
 * "-z", "2*z^2", "1+z".  All JSON output uses insertion order, so identical
 * jobs produce byte-identical reports.
 */
#pragma once

#include "braidhom/complexes.hpp"
#include "braidhom/field.hpp"
#include "braidhom/homology.hpp"
#include "braidhom/spaces.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace braidhom {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Field specs

inline Json field_to_json(const FieldCtxPtr& ctx) {
    Json j;
    if (ctx->kind == FieldKind::rationals) {
        j["kind"] = "rationals";
    } else {
        j["kind"] = "cyclotomic";
        j["m"] = ctx->m;
    }
    return j;
}

inline FieldCtxPtr field_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return FieldCtx::rationals();
    if (kind == "cyclotomic") return FieldCtx::cyclotomic(j.at("m").get<long>());
    throw FieldError("unknown field kind: " + kind);
}

/// "Q" or "cyclo:m=3".
inline FieldCtxPtr parse_field_spec(const std::string& spec) {
    if (spec == "Q" || spec == "q" || spec == "rationals") return FieldCtx::rationals();
    const std::string prefix = "cyclo:m=";
    if (spec.rfind(prefix, 0) == 0) {
        long m = std::stol(spec.substr(prefix.size()));
        return FieldCtx::cyclotomic(m);
    }
    throw FieldError("cannot parse field spec '" + spec + "' (expected Q or cyclo:m=<int>)");
}

// ---------------------------------------------------------------------------
// Scalars

inline Json element_to_json(const FieldElement& a) {
    if (a.ctx()->kind == FieldKind::rationals) return Json(render_rational(a.rational_value()));
    Json j;
    j["m"] = a.ctx()->m;
    Json coeffs = Json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(render_rational(c));
    j["coeffs"] = coeffs;
    return j;
}

namespace detail {

/// Recursive-descent parser for sums of terms in the generator z:
/// expr := [sign] term (sign term)*, term := factor ('*' factor)*,
/// factor := rational | z[^k].
class ScalarParser {
public:
    ScalarParser(const std::string& text, const FieldCtxPtr& ctx) : ctx_(ctx) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }

    FieldElement parse() {
        FieldElement v = parse_expr();
        if (pos_ != s_.size()) throw FieldError("trailing characters in scalar '" + s_ + "'");
        return v;
    }

private:
    FieldElement parse_expr() {
        FieldElement acc = FieldElement::zero(ctx_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = (take() == '-');
        acc = parse_term();
        if (negative) acc = -acc;
        while (peek() == '+' || peek() == '-') {
            bool neg = (take() == '-');
            FieldElement t = parse_term();
            acc = neg ? acc - t : acc + t;
        }
        return acc;
    }

    FieldElement parse_term() {
        FieldElement acc = parse_factor();
        while (peek() == '*') {
            take();
            acc *= parse_factor();
        }
        return acc;
    }

    FieldElement parse_factor() {
        if (peek() == 'z') {
            take();
            long e = 1;
            if (peek() == '^') {
                take();
                e = take_int();
            }
            if (ctx_->kind != FieldKind::cyclotomic)
                throw FieldError("generator z requires a cyclotomic field");
            return FieldElement::generator(ctx_).pow(e);
        }
        std::string num = take_number();
        if (peek() == '/') {
            take();
            num += "/" + take_number();
        }
        return FieldElement::from_rational(ctx_, parse_rational(num));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char take() { return s_[pos_++]; }

    std::string take_number() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw FieldError("expected a number at '" + s_.substr(start) + "'");
        return s_.substr(start, pos_ - start);
    }

    long take_int() { return std::stol(take_number()); }

    std::string s_;
    size_t pos_ = 0;
    FieldCtxPtr ctx_;
};

}  // namespace detail

inline FieldElement parse_scalar(const std::string& text, const FieldCtxPtr& ctx) {
    return detail::ScalarParser(text, ctx).parse();
}

inline FieldElement element_from_json(const Json& j, const FieldCtxPtr& ctx) {
    if (j.is_string()) return parse_scalar(j.get<std::string>(), ctx);
    if (j.is_number_integer()) return FieldElement::from_int(ctx, j.get<long>());
    if (j.is_object()) {
        long m = j.at("m").get<long>();
        auto cyc = FieldCtx::cyclotomic(m);
        if (ctx->kind != FieldKind::cyclotomic || ctx->m != m)
            throw FieldError("cyclotomic element conductor does not match the ambient field");
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
        return FieldElement::from_coeffs(cyc, std::move(coeffs));
    }
    throw FieldError("cannot parse scalar from JSON value " + j.dump());
}

/// "q=1,p=-1,u=1" (u optional, default 1).  Values use the scalar grammar.
inline std::map<std::string, FieldElement> parse_assignments(const std::string& text,
                                                             const FieldCtxPtr& ctx) {
    std::map<std::string, FieldElement> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw FieldError("expected name=value in '" + item + "'");
        std::string name = item.substr(0, eq);
        out.emplace(name, parse_scalar(item.substr(eq + 1), ctx));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matrices and fixtures

inline Json matrix_to_json(const SparseMat& m) {
    Json entries = Json::array();
    for (const auto& [rc, v] : m.a) entries.push_back(Json::array({rc.first, rc.second, element_to_json(v)}));
    return entries;
}

inline SparseMat matrix_from_json(const Json& j, int rows, int cols, const FieldCtxPtr& ctx) {
    SparseMat m(rows, cols);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) throw FieldError("matrix entry must be [row, col, value]");
        m.set(e[0].get<int>(), e[1].get<int>(), element_from_json(e[2], ctx));
    }
    return m;
}

inline Json space_to_json(const LeftBraidedSpace& s) {
    Json j;
    j["dim_v"] = s.dim_v;
    j["dim_w"] = s.dim_w;
    j["sigma"] = matrix_to_json(s.sigma);
    j["tau"] = matrix_to_json(s.tau);
    if (s.phi) j["phi"] = matrix_to_json(*s.phi);
    j["field"] = field_to_json(s.ctx);
    return j;
}

inline LeftBraidedSpace space_from_json(const Json& j) {
    LeftBraidedSpace s;
    s.ctx = j.contains("field") ? field_from_json(j.at("field")) : FieldCtx::rationals();
    s.dim_v = j.at("dim_v").get<int>();
    s.dim_w = j.at("dim_w").get<int>();
    int vv = s.dim_v * s.dim_v, vw = s.dim_v * s.dim_w;
    s.sigma = matrix_from_json(j.at("sigma"), vv, vv, s.ctx);
    s.tau = matrix_from_json(j.at("tau"), vw, vw, s.ctx);
    if (j.contains("phi") && !j.at("phi").is_null())
        s.phi = matrix_from_json(j.at("phi"), vw, vw, s.ctx);
    return s;
}

inline LeftBraidedSpace space_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FieldError("cannot open fixture file " + path);
    Json j = Json::parse(in);
    return space_from_json(j);
}

// ---------------------------------------------------------------------------
// Complex and homology reports

inline Json complex_to_json(const GradedComplex& c) {
    Json j;
    j["degrees"] = Json::array({c.lo, c.hi});
    Json bases;
    Json boundaries;
    for (int q = c.lo; q <= c.hi; ++q) {
        Json labels = Json::array();
        for (const auto& lab : c.basis(q)) labels.push_back(lab.to_string());
        bases[std::to_string(q)] = labels;
        boundaries[std::to_string(q)] = matrix_to_json(c.d(q));
    }
    j["bases"] = bases;
    j["boundaries"] = boundaries;
    return j;
}

inline Json homology_to_json(const HomologyTable& t, const Json& field, const Json& coefficients,
                             std::optional<bool> oracle_match = std::nullopt) {
    Json j;
    j["group"] = (t.family == Family::A) ? "A" : "B";
    j["n"] = t.n;
    j["field"] = field;
    j["coefficients"] = coefficients;
    j["route"] = t.route;
    Json dims;
    for (int deg = 0; deg <= t.n; ++deg) dims[std::to_string(deg)] = t.dim(deg);
    j["dims"] = dims;
    if (oracle_match) j["oracle_match"] = *oracle_match;
    return j;
}

inline std::string homology_to_csv(const HomologyTable& t) {
    std::ostringstream os;
    os << "n,j,dim\n";
    for (int deg = 0; deg <= t.n; ++deg) os << t.n << "," << deg << "," << t.dim(deg) << "\n";
    return os.str();
}

inline std::string homology_to_text(const HomologyTable& t) {
    std::ostringstream os;
    os << (t.family == Family::A ? "A" : "B") << "_" << t.n << " [" << t.field << ", route " << t.route;
    if (!t.coefficients.empty()) os << ", " << t.coefficients;
    os << "] dims:";
    for (int deg = 0; deg <= t.n; ++deg) os << " " << t.dim(deg);
    return os.str();
}

}  // namespace braidhom
