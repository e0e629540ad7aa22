#pragma once

// JSON documents: complexes with placements, and colored simplicial sets.
// Rationals are always written as "p/q" strings.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "recovery.hpp"

namespace coamoeba {

using json = nlohmann::ordered_json;

/// A complex together with a placement of its basis points.
struct ComplexDocument {
    FreeComplex complex;
    Placement placement;
};

namespace detail {

inline Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw ParseError("expected a rational as a \"p/q\" string or an integer", 0);
}

inline json point_to_json(const Point& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(to_string(c));
    return a;
}

inline Point point_from_json(const json& j) {
    Point p;
    for (const auto& c : j) p.push_back(rat_from_json(c));
    return p;
}

inline json lattice_to_json(const Lattice& m) {
    json a = json::array();
    for (auto v : m) a.push_back(v);
    return a;
}

inline Lattice lattice_from_json(const json& j) {
    Lattice m;
    for (const auto& v : j) m.push_back(v.get<std::int64_t>());
    return m;
}

inline const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0);
    return j.at(key);
}

}  // namespace detail

inline json to_json(const ComplexDocument& doc) {
    const FreeComplex& F = doc.complex;
    json j;
    j["n"] = F.dimension();
    j["variables"] = F.variables();
    json idx = json::array();
    for (std::size_t i = 0; i < F.size(); ++i)
        idx.push_back({{"label", F.label(i)}, {"degree", F.degree(i)}, {"point", detail::point_to_json(doc.placement.at(i))}});
    j["indices"] = idx;
    json diffs = json::object();
    for (const auto& [k, mat] : F.differentials()) {
        json rows = json::array();
        for (const auto& row : mat) {
            json r = json::array();
            for (const auto& e : row) r.push_back(to_string(e, F.variables()));
            rows.push_back(r);
        }
        diffs[std::to_string(k)] = rows;
    }
    j["differentials"] = diffs;
    return j;
}

/// Rows of "differentials"[k] follow the document order of I_{k+1}, columns
/// that of I_k. Missing differentials are zero.
inline ComplexDocument complex_from_json(const json& j) {
    const std::size_t n = detail::require(j, "n").get<std::size_t>();
    std::vector<std::string> vars;
    if (j.contains("variables"))
        vars = j.at("variables").get<std::vector<std::string>>();
    else
        vars = default_variables(n);
    std::vector<std::string> labels;
    std::vector<int> degrees;
    Placement P;
    for (const auto& e : detail::require(j, "indices")) {
        labels.push_back(detail::require(e, "label").get<std::string>());
        degrees.push_back(detail::require(e, "degree").get<int>());
        if (e.contains("point"))
            P.push_back(detail::point_from_json(e.at("point")));
        else
            P.push_back(zero_point(n));
        if (P.back().size() != n) throw ParseError("point of index '" + labels.back() + "' has wrong dimension", 0);
    }
    std::map<int, PolyMatrix> diffs;
    if (j.contains("differentials"))
        for (const auto& [key, rows] : j.at("differentials").items()) {
            int k = std::stoi(key);
            PolyMatrix mat;
            for (const auto& row : rows) {
                std::vector<LaurentPoly> r;
                for (const auto& e : row) r.push_back(parse_laurent(e.get<std::string>(), vars));
                mat.push_back(std::move(r));
            }
            diffs[k] = std::move(mat);
        }
    return {FreeComplex(n, std::move(labels), std::move(degrees), std::move(diffs), vars), std::move(P)};
}

/// Simplices grouped by dimension, with provenance chains (index labels when
/// `labels` is given, else numeric indices) and optional vertex degrees.
inline json to_json(const SimplicialSet& X, const std::map<Point, int>* degrees = nullptr,
                    const std::vector<std::string>* labels = nullptr) {
    json j;
    j["n"] = X.dimension();
    json verts = json::array();
    for (const auto& [s, prov] : X.level(0)) {
        json v{{"point", detail::point_to_json(s.vertex(0))}};
        if (degrees)
            if (auto it = degrees->find(s.vertex(0)); it != degrees->end()) v["degree"] = it->second;
        verts.push_back(v);
    }
    j["vertices"] = verts;
    json simplices = json::array();
    for (std::size_t k = 0; k < X.level_count(); ++k)
        for (const auto& [s, prov] : X.level(k)) {
            json e;
            e["dim"] = k;
            json vs = json::array();
            for (const auto& v : s.vertices()) vs.push_back(detail::point_to_json(v));
            e["vertices"] = vs;
            json chains = json::array();
            for (const auto& c : prov) {
                json idx = json::array();
                for (auto i : c.indices) {
                    if (labels)
                        idx.push_back(labels->at(i));
                    else
                        idx.push_back(i);
                }
                json steps = json::array();
                for (const auto& m : c.steps) steps.push_back(detail::lattice_to_json(m));
                chains.push_back({{"indices", idx}, {"steps", steps}});
            }
            e["chains"] = chains;
            simplices.push_back(e);
        }
    j["simplices"] = simplices;
    return j;
}

/// Reads a simplicial set written by to_json. Provenance chains with numeric
/// indices are restored; labelled chains are dropped.
inline SimplicialSet simplicial_set_from_json(const json& j, std::map<Point, int>* degrees = nullptr) {
    const std::size_t n = detail::require(j, "n").get<std::size_t>();
    SimplicialSet X(n);
    if (j.contains("vertices"))
        for (const auto& v : j.at("vertices")) {
            Point p = detail::point_from_json(detail::require(v, "point"));
            X.insert(TorusSimplex(Simplex{p}));
            if (degrees && v.contains("degree")) (*degrees)[reduce_mod_lattice(p)] = v.at("degree").get<int>();
        }
    for (const auto& e : detail::require(j, "simplices")) {
        Simplex s;
        for (const auto& v : detail::require(e, "vertices")) s.push_back(detail::point_from_json(v));
        for (const auto& v : s)
            if (v.size() != n) throw ParseError("simplex vertex has wrong dimension", 0);
        TorusSimplex t(std::move(s));
        bool any = false;
        if (e.contains("chains"))
            for (const auto& c : e.at("chains")) {
                const auto& idx = detail::require(c, "indices");
                if (!idx.empty() && !idx.front().is_number_integer()) continue;
                Chain ch;
                for (const auto& i : idx) ch.indices.push_back(i.get<std::size_t>());
                for (const auto& m : detail::require(c, "steps")) ch.steps.push_back(detail::lattice_from_json(m));
                X.insert(t, ch);
                any = true;
            }
        if (!any) X.insert(t);
    }
    return X;
}

inline bool is_simplicial_set_json(const json& j) { return j.is_object() && j.contains("simplices"); }

inline ColoredComplex colored_from_json(const json& j) {
    ColoredComplex C;
    C.X = simplicial_set_from_json(j, &C.degree);
    return C;
}

}  // namespace coamoeba
