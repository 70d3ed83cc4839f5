#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "penta/errors.hpp"
#include "penta/hopf.hpp"
#include "penta/rational.hpp"
#include "penta/report.hpp"
#include "penta/tensor_op.hpp"
#include "penta/trunc_laurent.hpp"

namespace penta {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Laurent series: {"min_exp": int, "coeffs": ["p/q", ...], "trunc": int|null}
// (null marks an exactly known series; coeffs run densely from min_exp).
// ---------------------------------------------------------------------------

inline Json laurent_to_json(const TruncLaurent& s) {
    Json j;
    if (s.is_zero()) {
        j["min_exp"] = 0;
        j["coeffs"] = Json::array();
    } else {
        j["min_exp"] = s.min_exp();
        Json coeffs = Json::array();
        for (long e = s.min_exp(); e <= s.max_known_exp(); ++e)
            coeffs.push_back(s.coeff(e).str());
        j["coeffs"] = std::move(coeffs);
    }
    if (s.exact()) j["trunc"] = nullptr;
    else j["trunc"] = s.trunc();
    return j;
}

inline TruncLaurent laurent_from_json(const Json& j) {
    long min_exp = j.at("min_exp").get<long>();
    TruncLaurent out;
    long e = min_exp;
    for (const auto& c : j.at("coeffs"))
        out += TruncLaurent::monomial(Rational::parse(c.get<std::string>()), e++);
    if (!j.at("trunc").is_null()) out = out.truncated(j.at("trunc").get<long>());
    return out;
}

// ---------------------------------------------------------------------------
// Sparse operators: [{"row": [ints], "col": [ints], "val": "p/q"}, ...]
// ---------------------------------------------------------------------------

inline Json tensor_op_to_json(const TensorOp<Rational>& op) {
    Json entries = Json::array();
    for (const auto& [col, rows] : op.columns())
        for (const auto& [row, v] : rows) {
            Json e;
            e["row"] = row;
            e["col"] = col;
            e["val"] = v.str();
            entries.push_back(std::move(e));
        }
    return entries;
}

inline TensorOp<Rational> tensor_op_from_json(const Json& j, int dim, int arity) {
    TensorOp<Rational> op(dim, arity);
    for (const auto& e : j) {
        MultiIndex row = e.at("row").get<MultiIndex>();
        MultiIndex col = e.at("col").get<MultiIndex>();
        op.set(row, col, Rational::parse(e.at("val").get<std::string>()));
    }
    return op;
}

// ---------------------------------------------------------------------------
// Hopf structure constants, bit-exact round trip:
// {"dim": n, "m": [[[..]]], "mu": [[[..]]], "unit": [..], "counit": [..],
//  "antipode": [[..]]} with rationals as "p/q" strings.
// ---------------------------------------------------------------------------

inline Json hopf_to_json(const HopfData& h) {
    int n = h.dim;
    Json j;
    j["dim"] = n;
    auto cube = [&](auto field) {
        Json a = Json::array();
        for (int i = 0; i < n; ++i) {
            Json b = Json::array();
            for (int k = 0; k < n; ++k) {
                Json c = Json::array();
                for (int l = 0; l < n; ++l) c.push_back(field(i, k, l).str());
                b.push_back(std::move(c));
            }
            a.push_back(std::move(b));
        }
        return a;
    };
    j["m"] = cube([&](int i, int k, int l) { return h.m(i, k, l); });
    j["mu"] = cube([&](int i, int k, int l) { return h.mu(i, k, l); });
    Json unit = Json::array(), counit = Json::array();
    for (int i = 0; i < n; ++i) {
        unit.push_back(h.unit[i].str());
        counit.push_back(h.counit[i].str());
    }
    j["unit"] = std::move(unit);
    j["counit"] = std::move(counit);
    Json gamma = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int k = 0; k < n; ++k) row.push_back(h.gamma(i, k).str());
        gamma.push_back(std::move(row));
    }
    j["antipode"] = std::move(gamma);
    if (!h.labels.empty()) j["labels"] = h.labels;
    return j;
}

inline HopfData hopf_from_json(const Json& j) {
    int n = j.at("dim").get<int>();
    if (n < 1) throw ConfigError("Hopf dimension must be positive");
    HopfData h = HopfData::zeros(n);
    auto cube = [&](const Json& a, auto set) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    set(i, k, l, Rational::parse(a.at(i).at(k).at(l).get<std::string>()));
    };
    cube(j.at("m"), [&](int i, int k, int l, Rational v) { h.m(i, k, l) = v; });
    cube(j.at("mu"), [&](int i, int k, int l, Rational v) { h.mu(i, k, l) = v; });
    for (int i = 0; i < n; ++i) {
        h.unit[i] = Rational::parse(j.at("unit").at(i).get<std::string>());
        h.counit[i] = Rational::parse(j.at("counit").at(i).get<std::string>());
        for (int k = 0; k < n; ++k)
            h.gamma(i, k) = Rational::parse(j.at("antipode").at(i).at(k).get<std::string>());
    }
    if (j.contains("labels")) h.labels = j.at("labels").get<std::vector<std::string>>();
    return h;
}

inline HopfData load_hopf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open structure-constant file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("bad JSON in " + path + ": " + e.what());
    }
    return hopf_from_json(j);
}

inline void save_hopf_file(const HopfData& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << hopf_to_json(h).dump(1) << "\n";
}

// ---------------------------------------------------------------------------
// Relation reports.
// ---------------------------------------------------------------------------

inline Json report_to_json(const RelationReport& r, const std::string& name) {
    Json j;
    j["name"] = name;
    j["equation"] = r.equation;
    j["backend"] = r.backend;
    j["status"] = status_str(r.status);
    j["samples"] = r.samples;
    j["retries"] = r.retries;
    if (r.counterexample.empty()) j["counterexample"] = nullptr;
    else j["counterexample"] = r.counterexample;
    if (!r.note.empty()) j["note"] = r.note;
    j["ms"] = r.ms;
    return j;
}

}  // namespace penta
