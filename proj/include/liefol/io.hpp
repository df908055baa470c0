#pragma once

// JSON interchange for algebras, parameter files and classification reports.
// Rationals travel as canonical strings ("p" or "p/q"), never as floats.
//
// Algebra document:
//   {
//     "dimension": n,
//     "basis": ["A","B",...],
//     "brackets": [ {"i":0, "j":1, "coeffs":["2","0",...]}, ... ],   // i < j
//     "vertical": [0,1,2]                                            // optional
//   }
// Unlisted (i,j) pairs are zero brackets; duplicate pairs are an error.

#include <liefol/families.hpp>
#include <liefol/geometry.hpp>
#include <liefol/symbolic.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace liefol {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedAlgebra {
    MetricLieAlgebra algebra;
    std::optional<std::vector<std::size_t>> vertical;
};

namespace detail {

inline Rational parse_rational_field(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_string()) throw ParseError(where + ": rational values must be strings");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

} // namespace detail

inline ParsedAlgebra parse_algebra_json(const nlohmann::json& doc)
{
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned())
        throw ParseError("'dimension' must be a positive integer");
    std::size_t dim = doc["dimension"].get<std::size_t>();
    if (dim == 0) throw ParseError("'dimension' must be a positive integer");

    if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].size() != dim)
        throw ParseError("'basis' must list exactly 'dimension' names");
    std::vector<std::string> names;
    for (const auto& n : doc["basis"]) {
        if (!n.is_string()) throw ParseError("'basis' entries must be strings");
        names.push_back(n.get<std::string>());
    }

    MetricLieAlgebra g = [&] {
        try {
            return MetricLieAlgebra(std::move(names));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad basis: ") + e.what());
        }
    }();

    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array()) throw ParseError("'brackets' must be an array");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        std::size_t entry = 0;
        for (const auto& b : doc["brackets"]) {
            std::string where = "brackets[" + std::to_string(entry++) + "]";
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
                throw ParseError(where + ": need fields i, j, coeffs");
            if (!b["i"].is_number_unsigned() || !b["j"].is_number_unsigned())
                throw ParseError(where + ": i and j must be nonnegative integers");
            std::size_t i = b["i"].get<std::size_t>();
            std::size_t j = b["j"].get<std::size_t>();
            if (i >= j || j >= dim) throw ParseError(where + ": need i < j < dimension");
            if (!seen.insert({i, j}).second)
                throw ParseError(where + ": duplicate pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            if (!b["coeffs"].is_array() || b["coeffs"].size() != dim)
                throw ParseError(where + ": coeffs must have length 'dimension'");
            Vec coeffs;
            for (const auto& c : b["coeffs"])
                coeffs.push_back(detail::parse_rational_field(c, where));
            g.set_bracket(i, j, std::move(coeffs));
        }
    }

    std::optional<std::vector<std::size_t>> vertical;
    if (doc.contains("vertical")) {
        if (!doc["vertical"].is_array()) throw ParseError("'vertical' must be an array of indices");
        std::vector<std::size_t> v;
        for (const auto& e : doc["vertical"]) {
            if (!e.is_number_unsigned()) throw ParseError("'vertical' entries must be nonnegative integers");
            std::size_t idx = e.get<std::size_t>();
            if (idx >= dim) throw ParseError("'vertical' index out of range: " + std::to_string(idx));
            v.push_back(idx);
        }
        try {
            Splitting check(dim, v); // validates nonempty / distinct / proper subset
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad 'vertical' block: ") + e.what());
        }
        vertical = std::move(v);
    }
    return {std::move(g), std::move(vertical)};
}

inline ParsedAlgebra load_algebra_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_algebra_json(doc);
}

inline nlohmann::json vec_to_json(const Vec& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

inline nlohmann::json algebra_to_json(const MetricLieAlgebra& g,
                                      const std::optional<std::vector<std::size_t>>& vertical = {})
{
    nlohmann::json doc;
    doc["dimension"] = g.dim();
    doc["basis"] = g.basis();
    nlohmann::json brackets = nlohmann::json::array();
    for (const auto& [pair, coeffs] : g.table()) {
        nlohmann::json b;
        b["i"] = pair.first;
        b["j"] = pair.second;
        b["coeffs"] = vec_to_json(coeffs);
        brackets.push_back(std::move(b));
    }
    doc["brackets"] = std::move(brackets);
    if (vertical) doc["vertical"] = *vertical;
    return doc;
}

inline void write_json_file(const std::string& path, const nlohmann::json& doc)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << doc.dump(2) << "\n";
}

// Parameter files are flat objects keyed by parameter name with rational
// strings; unknown keys are errors, missing keys default to zero.
namespace detail {

template <typename Params>
inline Params params_from_json(const nlohmann::json& doc,
                               const std::vector<std::pair<const char*, Rational Params::*>>& fields)
{
    if (!doc.is_object()) throw ParseError("parameter document must be a JSON object");
    Params p{};
    for (const auto& [key, value] : doc.items()) {
        bool known = false;
        for (const auto& [name, member] : fields) {
            if (key == name) {
                p.*member = parse_rational_field(value, "parameter '" + key + "'");
                known = true;
                break;
            }
        }
        if (!known) throw ParseError("unknown parameter key: '" + key + "'");
    }
    return p;
}

} // namespace detail

inline const std::vector<std::pair<const char*, Rational Semisimple13Params::*>>& semisimple13_fields()
{
    static const std::vector<std::pair<const char*, Rational Semisimple13Params::*>> fields = {
        {"b11", &Semisimple13Params::b11}, {"b21", &Semisimple13Params::b21},
        {"c11", &Semisimple13Params::c11}, {"c12", &Semisimple13Params::c12},
        {"c21", &Semisimple13Params::c21}, {"c22", &Semisimple13Params::c22},
        {"s14", &Semisimple13Params::s14}, {"s24", &Semisimple13Params::s24},
        {"t14", &Semisimple13Params::t14}, {"t15", &Semisimple13Params::t15},
        {"t24", &Semisimple13Params::t24}, {"t25", &Semisimple13Params::t25},
        {"rho", &Semisimple13Params::rho},
    };
    return fields;
}

inline const std::vector<std::pair<const char*, Rational Mixed11Params::*>>& mixed11_fields()
{
    static const std::vector<std::pair<const char*, Rational Mixed11Params::*>> fields = {
        {"b11", &Mixed11Params::b11},       {"b21", &Mixed11Params::b21},
        {"c11", &Mixed11Params::c11},       {"c12", &Mixed11Params::c12},
        {"c21", &Mixed11Params::c21},       {"c22", &Mixed11Params::c22},
        {"x1", &Mixed11Params::x1},         {"x2", &Mixed11Params::x2},
        {"y1", &Mixed11Params::y1},         {"rho", &Mixed11Params::rho},
        {"theta4", &Mixed11Params::theta4},
    };
    return fields;
}

inline Semisimple13Params semisimple13_from_json(const nlohmann::json& doc)
{
    return detail::params_from_json<Semisimple13Params>(doc, semisimple13_fields());
}

inline Mixed11Params mixed11_from_json(const nlohmann::json& doc)
{
    return detail::params_from_json<Mixed11Params>(doc, mixed11_fields());
}

// Reduction results: substitutions as {"var": "polynomial-string"} with the
// polynomials printed in canonical graded-lex term order.
inline nlohmann::json reduction_to_json(const ReductionResult& r)
{
    nlohmann::json doc;
    nlohmann::json subs = nlohmann::json::object();
    for (const auto& [v, p] : r.substitutions) subs[v] = p.str();
    doc["substitutions"] = std::move(subs);
    nlohmann::json residual = nlohmann::json::array();
    for (const auto& eq : r.residual) residual.push_back(eq.p.str());
    doc["residual"] = std::move(residual);
    doc["free"] = r.free_vars;
    return doc;
}

// Classification report with exactly the published field names; bv/bh are
// keyed "i,j" with i <= j.
inline nlohmann::json report_to_json(const ClassificationReport& r)
{
    auto forms_to_json = [](const std::map<std::pair<std::size_t, std::size_t>, Vec>& forms) {
        nlohmann::json out = nlohmann::json::object();
        for (const auto& [pair, v] : forms)
            out[std::to_string(pair.first) + "," + std::to_string(pair.second)] = vec_to_json(v);
        return out;
    };
    nlohmann::json doc;
    doc["integrable"] = r.integrable;
    doc["conformal"] = r.conformal;
    doc["riemannian"] = r.riemannian;
    doc["minimal"] = r.minimal;
    doc["totally_geodesic"] = r.totally_geodesic;
    doc["mean_curvature"] = vec_to_json(r.mean_curvature);
    doc["conformal_vector"] = r.conformal_vector ? vec_to_json(*r.conformal_vector) : nlohmann::json();
    doc["bv"] = forms_to_json(r.forms.bv);
    doc["bh"] = forms_to_json(r.forms.bh);
    return doc;
}

} // namespace liefol
