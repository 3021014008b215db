#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scatlab/equiv.hpp"
#include "scatlab/error.hpp"
#include "scatlab/field.hpp"
#include "scatlab/linalg.hpp"
#include "scatlab/linpoly.hpp"
#include "scatlab/linset.hpp"
#include "scatlab/rmcode.hpp"

namespace scatlab {

using json = nlohmann::json;

namespace jio {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
    fail(errc::parse_error, where + ": " + what);
}

/// Non-negative integer, whether the document stored it signed or unsigned.
inline bool is_uint(const json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

/// Parse a field descriptor {"p":..,"h":..,"n":..,"modulus":[...](optional)}.
inline Ctx parse_field(const json& j, std::uint64_t table_threshold = 1ull << 24) {
    if (!j.is_object()) parse_fail("field", "expected an object");
    for (const char* key : {"p", "h", "n"})
        if (!j.contains(key) || !is_uint(j[key]))
            parse_fail(std::string("field.") + key, "missing or not an unsigned integer");
    std::uint64_t p = j["p"].get<std::uint64_t>();
    unsigned h = j["h"].get<unsigned>();
    unsigned n = j["n"].get<unsigned>();
    std::vector<std::uint32_t> modulus;
    if (j.contains("modulus")) {
        if (!j["modulus"].is_array()) parse_fail("field.modulus", "expected an array");
        for (std::size_t i = 0; i < j["modulus"].size(); ++i) {
            const auto& c = j["modulus"][i];
            if (!is_uint(c))
                parse_fail("field.modulus[" + std::to_string(i) + "]",
                           "expected an unsigned integer");
            modulus.push_back(c.get<std::uint32_t>());
        }
    }
    return FieldCtx::make(p, h, n, modulus, table_threshold);
}

inline json emit_field(const FieldCtx& F) {
    return json{{"p", F.p()}, {"h", F.h()}, {"n", F.n()}, {"modulus", F.modulus()}};
}

inline Elem parse_elem(const FieldCtx& F, const json& j, const std::string& where) {
    if (!is_uint(j)) parse_fail(where, "expected an unsigned integer element encoding");
    Elem x = j.get<Elem>();
    if (!F.valid(x))
        parse_fail(where, "element encoding " + std::to_string(x) + " is not < field order " +
                              std::to_string(F.order()));
    return x;
}

/// Parse a q-polynomial as an array [a0,...,a_{n-1}] of element encodings.
inline LinPoly parse_poly(const Ctx& ctx, const json& j, const std::string& where = "poly") {
    if (!j.is_array()) parse_fail(where, "expected an array of n coefficients");
    if (j.size() != ctx->n())
        parse_fail(where, "expected " + std::to_string(ctx->n()) + " coefficients, got " +
                              std::to_string(j.size()));
    std::vector<Elem> c(ctx->n());
    for (unsigned i = 0; i < ctx->n(); ++i)
        c[i] = parse_elem(*ctx, j[i], where + "[" + std::to_string(i) + "]");
    return LinPoly(ctx, std::move(c));
}

inline json emit_poly(const LinPoly& f) {
    json a = json::array();
    for (unsigned i = 0; i < f.ctx()->n(); ++i) a.push_back(f.coeff(i));
    return a;
}

inline std::vector<LinPoly> parse_polys(const Ctx& ctx, const json& j,
                                        const std::string& where = "gens") {
    if (!j.is_array()) parse_fail(where, "expected an array of polynomials");
    std::vector<LinPoly> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_poly(ctx, j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline json emit_polys(const std::vector<LinPoly>& ps) {
    json a = json::array();
    for (const auto& f : ps) a.push_back(emit_poly(f));
    return a;
}

/// Parse a projective subspace given by generating row vectors (each of
/// length n) over F_{q^n}.
inline FqnMat parse_rows(const Ctx& ctx, const json& j, const std::string& where = "rows") {
    if (!j.is_array() || j.empty()) parse_fail(where, "expected a non-empty array of rows");
    std::vector<std::vector<Elem>> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const auto& jr = j[r];
        std::string rw = where + "[" + std::to_string(r) + "]";
        if (!jr.is_array() || jr.size() != ctx->n())
            parse_fail(rw, "expected a row of " + std::to_string(ctx->n()) + " entries");
        std::vector<Elem> row(ctx->n());
        for (unsigned c = 0; c < ctx->n(); ++c)
            row[c] = parse_elem(*ctx, jr[c], rw + "[" + std::to_string(c) + "]");
        rows.push_back(std::move(row));
    }
    return mat_from_rows(ctx, rows);
}

inline json emit_rows(const FqnMat& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        a.push_back(row);
    }
    return a;
}

inline json emit_spectrum(const WeightSpectrum& sp) {
    json a = json::array();
    for (auto& [w, c] : sp.counts) a.push_back(json{{"weight", w}, {"points", c}});
    return a;
}

inline const char* status_name(EquivStatus s) {
    switch (s) {
        case EquivStatus::equivalent: return "equivalent";
        case EquivStatus::inequivalent_exhausted: return "inequivalent_exhausted";
        default: return "inconclusive_budget";
    }
}

inline json emit_verdict(const EquivVerdict& v) {
    json w = json::array();
    for (const auto& wt : v.witnesses)
        w.push_back(json{{"sigma_p_exp", wt.sigma_p_exp},
                         {"a", wt.a},
                         {"b", wt.b},
                         {"c", wt.c},
                         {"d", wt.d}});
    return json{{"status", status_name(v.status)},
                {"witnesses", w},
                {"search_log", v.search_log},
                {"completeness_caveat", v.completeness_caveat}};
}

inline json emit_idealiser(const RMCode::Idealiser& idl) {
    json out{{"dim_fq", idl.dim_fq}};
    if (idl.is_field)
        out["is_field"] = *idl.is_field;
    else
        out["is_field"] = nullptr;
    json basis = json::array();
    for (const auto& g : idl.basis) basis.push_back(emit_poly(g));
    out["basis"] = basis;
    return out;
}

/// Parse a JSON document from text with a structured error on failure.
inline json parse_text(const std::string& text, const std::string& where) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) parse_fail(where, "malformed JSON");
    return j;
}

}  // namespace jio

}  // namespace scatlab
