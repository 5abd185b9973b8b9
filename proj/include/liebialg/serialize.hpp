#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "liebialg/algebra.hpp"
#include "liebialg/lorentz.hpp"
#include "liebialg/report.hpp"
#include "liebialg/tensors.hpp"

// JSON interchange formats.  All indices are 1-based on the wire; scalars
// are reduced fraction strings.

namespace liebialg {

using json = nlohmann::json;

inline json algebra_to_json(const LieAlgebra& alg) {
    json j;
    j["dim"] = alg.dim();
    j["labels"] = alg.labels();
    json constants = json::array();
    for (int i = 0; i < alg.dim(); ++i)
        for (int k = i + 1; k < alg.dim(); ++k)
            for (const auto& [l, coef] : alg.bracket_basis(i, k))
                constants.push_back(json::array({i + 1, k + 1, l + 1, to_string(coef)}));
    j["constants"] = constants;
    return j;
}

inline LieAlgebra algebra_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<LieAlgebra::Entry> entries;
    for (const auto& row : j.at("constants")) {
        if (!row.is_array() || row.size() != 4) throw bad_params("constants rows are [i,j,k,\"p/q\"]");
        entries.emplace_back(row[0].get<int>() - 1, row[1].get<int>() - 1, row[2].get<int>() - 1,
                             parse_rational(row[3].get<std::string>()));
    }
    return LieAlgebra(dim, std::move(labels), entries);
}

inline json bivector_to_json(const Bivector& b) {
    json j;
    j["dim"] = b.dim();
    json entries = json::array();
    for (int i = 0; i < b.dim(); ++i)
        for (int k = i + 1; k < b.dim(); ++k)
            if (b(i, k) != 0) entries.push_back(json::array({i + 1, k + 1, to_string(b(i, k))}));
    j["entries"] = entries;
    return j;
}

inline Bivector bivector_from_json(const json& j) {
    Bivector b(j.at("dim").get<int>());
    for (const auto& row : j.at("entries"))
        b.set(row[0].get<int>() - 1, row[1].get<int>() - 1, parse_rational(row[2].get<std::string>()));
    return b;
}

inline json trivector_to_json(const Trivector& t) {
    json j;
    j["dim"] = t.dim();
    json entries = json::array();
    for (int a = 0; a < t.dim(); ++a)
        for (int b = a + 1; b < t.dim(); ++b)
            for (int c = b + 1; c < t.dim(); ++c)
                if (t.get(a, b, c) != 0)
                    entries.push_back(json::array({a + 1, b + 1, c + 1, to_string(t.get(a, b, c))}));
    j["entries"] = entries;
    return j;
}

inline json cobracket_to_json(const Cobracket& d) {
    json j;
    j["dim"] = d.dim();
    json entries = json::array();
    for (int i = 0; i < d.dim(); ++i)
        for (int a = 0; a < d.dim(); ++a)
            for (int b = a + 1; b < d.dim(); ++b)
                if (d.d(i, a, b) != 0)
                    entries.push_back(json::array({i + 1, a + 1, b + 1, to_string(d.d(i, a, b))}));
    j["entries"] = entries;
    return j;
}

inline json report_to_json(const Report& rep) {
    json j;
    j["suite"] = rep.suite;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        if (!c.value.empty()) jc["value"] = c.value;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["exit_code"] = rep.exit_code();
    return j;
}

inline json matrix_to_json(const lorentz::Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(static_cast<double>(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline lorentz::Mat matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw bad_params("matrix JSON must be a nested array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    lorentz::Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols) throw bad_params("ragged matrix JSON");
        for (int c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
    }
    return m;
}

inline json vec_to_json(const lorentz::Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(static_cast<double>(v(i)));
    return a;
}

inline json kfn_to_json(const lorentz::KfnFactors& f, double residual) {
    json j;
    j["branch"] = lorentz::branch_name(f.branch);
    j["k"] = matrix_to_json(f.k_tilde);
    j["t"] = static_cast<double>(f.t);
    j["x"] = vec_to_json(f.x);
    j["residual"] = residual;
    return j;
}

}  // namespace liebialg
