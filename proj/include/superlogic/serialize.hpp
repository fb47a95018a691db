#pragma once

// JSON forms for every surface the CLI exposes. All objects use insertion
// order (nlohmann::ordered_json), so serialized output is byte-stable run to
// run.

#include <string>

#include <json.hpp>

#include "characters.hpp"
#include "cohomology.hpp"
#include "derivations.hpp"
#include "f2.hpp"
#include "formula.hpp"
#include "laws.hpp"
#include "two_slit.hpp"
#include "value.hpp"

namespace superlogic {

using json = nlohmann::ordered_json;

inline void to_json(json& j, super_value v) { j = std::string(to_string(v)); }

inline void to_json(json& j, const valuation& val) {
    j = json::object();
    for (const auto& [name, v] : val) j[name] = v;
}

inline void to_json(json& j, const truth_table& t) {
    j = json{{"atoms", t.atoms},
             {"semantics", to_string(t.semantics)},
             {"rows", json::array()}};
    for (const auto& [in, out] : t.rows)
        j["rows"].push_back(json{{"in", in}, {"out", out}});
}

inline void to_json(json& j, const canonical_pair& c) {
    j = json{{"p", to_string(c.p)}, {"q", to_string(c.q)}};
}

inline void to_json(json& j, const law_verdict& v) {
    j = json{{"name", v.name},
             {"semantics", to_string(v.semantics)},
             {"holds", v.holds}};
    if (!v.holds) {
        j["witness"] = *v.witness;
        j["lhs"] = *v.lhs_value;
        j["rhs"] = *v.rhs_value;
    }
}

inline void to_json(json& j, const law_report& r) {
    j = json{{"semantics", to_string(r.semantics)},
             {"carrier_size", r.carrier_size},
             {"results", r.entries}};
}

inline void to_json(json& j, const endo_map& m) {
    j = json::object();
    for (super_value v : carrier) j[std::string(to_string(v))] = m(v);
}

inline void to_json(json& j, const f2_function& f) {
    j = json::object();
    for (super_value v : carrier) j[std::string(to_string(v))] = f(v) ? 1 : 0;
}

inline void to_json(json& j, const axiom_violation& v) {
    j = json{{"axiom", v.axiom},
             {"args", v.args},
             {"actual", v.actual},
             {"expected", v.expected}};
}

inline void to_json(json& j, const vector_field_verdict& v) {
    j = json{{"is_vector_field", v.is_vector_field}, {"violations", v.violations}};
}

inline void to_json(json& j, const clause_violation& v) {
    j = json{{"clause", v.clause},
             {"args", v.args},
             {"lhs", v.lhs ? 1 : 0},
             {"rhs", v.rhs ? 1 : 0}};
}

inline void to_json(json& j, const character_verdict& v) {
    j = json{{"is_character", v.is_character}, {"violations", v.violations}};
}

inline void to_json(json& j, const closure_report& r) {
    j = json{{"semantics", to_string(r.semantics)},
             {"fields", r.fields},
             {"entries", json::array()}};
    for (const auto& e : r.entries) {
        json entry{{"op", std::string(to_string(e.op))}, {"x", e.x_index}};
        if (e.op != field_op::negation) entry["y"] = e.y_index;
        entry["result"] = e.result;
        entry["still_vector_field"] = e.still_vector_field;
        j["entries"].push_back(std::move(entry));
    }
}

inline void to_json(json& j, const f2_matrix& m) {
    j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"bits", json::array()}};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c) ? 1 : 0);
        j["bits"].push_back(std::move(row));
    }
}

inline f2_matrix matrix_from_json(const json& j) {
    f2_matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& bits = j.at("bits");
    if (bits.size() != m.rows())
        throw invalid_complex_error("bit grid has wrong row count");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (bits[r].size() != m.cols())
            throw invalid_complex_error("bit grid has wrong column count");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.set(r, c, bits[r][c].get<int>() != 0);
    }
    return m;
}

inline void to_json(json& j, const cochain_complex& complex) {
    j = json{{"dims", complex.dims()}, {"differentials", complex.differentials()}};
}

inline cochain_complex complex_from_json(const json& j) {
    std::vector<std::size_t> dims = j.at("dims").get<std::vector<std::size_t>>();
    std::vector<f2_matrix> diffs;
    for (const auto& dj : j.at("differentials")) diffs.push_back(matrix_from_json(dj));
    return cochain_complex(std::move(dims), std::move(diffs));
}

inline void to_json(json& j, const two_slit_result& r) {
    j = json{{"body", r.body_weight},
             {"interference", r.interference_weight},
             {"symbolic", r.symbolic},
             {"layer", "interpretation"}};
}

} // namespace superlogic
