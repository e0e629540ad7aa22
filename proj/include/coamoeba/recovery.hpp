#pragma once

// Recovering the discrete information of a complex from X(F) or from the
// point set T(F), and deciding whether a degree-colored semi-simplicial set
// over T^n arises as some X(F).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torus_complex.hpp"

namespace coamoeba {

/// A semi-simplicial set over T^n with a degree on each vertex.
struct ColoredComplex {
    SimplicialSet X;
    std::map<Point, int> degree;  // keyed by the canonical vertex in [0,1)^n

    /// Vertices of X_0 in canonical order.
    std::vector<Point> vertices() const {
        std::vector<Point> out;
        for (const auto& [s, prov] : X.level(0)) out.push_back(s.vertex(0));
        return out;
    }

    int degree_of(const Point& canonical_vertex) const {
        auto it = degree.find(canonical_vertex);
        if (it == degree.end()) throw std::invalid_argument("vertex " + to_string(canonical_vertex) + " has no degree");
        return it->second;
    }
};

/// X(F) colored by the degrees of F. Requires the x_i distinct mod Z^n.
inline ColoredComplex colored_X(const FreeComplex& F, const Placement& P) {
    check_placement(F, P);
    if (!distinct_mod_lattice(P)) throw std::invalid_argument("vertex collision: placement points coincide modulo Z^n");
    ColoredComplex C{build_X(F, P), {}};
    for (std::size_t i = 0; i < F.size(); ++i) C.degree[reduce_mod_lattice(P[i])] = F.degree(i);
    return C;
}

namespace detail {

inline std::map<Point, std::size_t> vertex_positions(const std::vector<Point>& vertices) {
    std::map<Point, std::size_t> pos;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (!pos.emplace(reduce_mod_lattice(vertices[v]), v).second)
            throw std::invalid_argument("vertex collision: two vertices coincide modulo Z^n");
    }
    return pos;
}

/// Index of the vertex congruent to p, and the integer offset p - x_v.
inline std::pair<std::size_t, Lattice> locate(const std::map<Point, std::size_t>& pos,
                                              const std::vector<Point>& lifts, const Point& p) {
    auto it = pos.find(reduce_mod_lattice(p));
    if (it == pos.end()) throw std::invalid_argument("simplex vertex " + to_string(p) + " is not a vertex of X_0");
    Lattice m;
    integer_difference(p, lifts[it->second], m);
    return {it->second, m};
}

/// E'(i, j) = {m : [x_j, x_i + m] in X_1} with the given lifts.
inline ExponentTable edge_table(const SimplicialSet& X, const std::vector<Point>& lifts) {
    auto pos = vertex_positions(lifts);
    ExponentTable E(X.dimension(), lifts.size());
    for (const auto& [s, prov] : X.level(1)) {
        auto [j, mj] = locate(pos, lifts, s.vertex(0));
        auto [i, mi] = locate(pos, lifts, s.vertex(1));
        E(i, j).insert(mi - mj);
    }
    return E;
}

}  // namespace detail

/// Discrete information read off from the 0- and 1-simplices, with indices in
/// the order of C.vertices() and lifts x_i the canonical vertices.
inline DiscreteInfo recover_E(const ColoredComplex& C) {
    auto verts = C.vertices();
    DiscreteInfo info;
    for (const auto& v : verts) info.degrees.push_back(C.degree_of(v));
    info.exponents = detail::edge_table(C.X, verts);
    return info;
}

/// Options bounding the candidate search of recover_from_T.
struct RecoverFromTOptions {
    /// Extra integer margin added to the largest simplex extent.
    std::int64_t margin = 1;
};

/// Whether the segment [a, b] lies in the union of the Z^n-translates of the
/// given simplices, decided by exact interval cover of the parameter range.
inline bool segment_in_union(const Point& a, const Point& b, const std::vector<Simplex>& T) {
    Box seg = bounding_box(Simplex{a, b});
    Lattice shift;
    for (const auto& s : T)
        for (const auto& [p, q] : {std::pair{a, b}, std::pair{b, a}})
            if (s.size() == 2 && integer_difference(s[0], p, shift) && s[1] - shift == q) return true;

    auto covered = [&](const Point& x) {
        for (const auto& s : T)
            for (const auto& m : overlapping_translations(Box{x, x}, bounding_box(s)))
                if (contains_point(translated(s, m), x)) return true;
        return false;
    };
    for (const Rat t : {Rat(1, 2), Rat(1, 3), Rat(3, 4), Rat(1, 7), Rat(6, 7)})
        if (!covered(a + t * (b - a))) return false;

    std::vector<std::pair<Rat, Rat>> pieces;
    for (const auto& s : T) {
        Box bs = bounding_box(s);
        for (const auto& m : overlapping_translations(seg, bs))
            if (auto r = segment_parameter_range(a, b, translated(s, m))) pieces.push_back(*r);
    }
    std::sort(pieces.begin(), pieces.end());
    Rat reached = 0;
    for (const auto& [lo, hi] : pieces) {
        if (lo > reached) return false;
        if (hi > reached) reached = hi;
        if (reached >= 1) return true;
    }
    return false;
}

/// Whether some translate of a vertex lies strictly inside the segment [a, b].
inline bool segment_passes_vertex(const Point& a, const Point& b, const std::vector<Point>& vertices) {
    Box seg = bounding_box(Simplex{a, b});
    for (const auto& v : vertices)
        for (const auto& m : overlapping_translations(seg, Box{v, v})) {
            Point p = v + m;
            if (p != a && p != b && contains_point(Simplex{a, b}, p)) return true;
        }
    return false;
}

/// Discrete information from the union T of simplices (positive codimension)
/// and its vertices: E(i, j) collects the m with deg(i) > deg(j) such that
/// the segment [x_j, x_i + m] lies in T and its interior avoids every vertex.
/// Only edges are tested; they determine all of E.
inline DiscreteInfo recover_from_T(const std::vector<Simplex>& T, const std::vector<Point>& vertices,
                                   const std::vector<int>& degrees, RecoverFromTOptions opts = {}) {
    if (vertices.size() != degrees.size()) throw std::invalid_argument("vertex and degree lists differ in length");
    if (vertices.empty()) return DiscreteInfo{{}, ExponentTable(0, 0)};
    const std::size_t n = vertices[0].size();
    for (const auto& s : T)
        if (affine_rank(s) >= n) throw std::invalid_argument("full-dimensional simplex present in T");
    std::vector<Point> lifts;
    for (const auto& v : vertices) lifts.push_back(reduce_mod_lattice(v));
    detail::vertex_positions(lifts);

    Rat extent = 0;
    for (const auto& s : T) {
        Box b = bounding_box(s);
        for (std::size_t d = 0; d < n; ++d) extent = std::max(extent, Rat(b.hi[d] - b.lo[d]));
    }
    const std::int64_t radius = to_int64(-floor(-extent)) + opts.margin;

    DiscreteInfo info{degrees, ExponentTable(n, vertices.size())};
    for (std::size_t j = 0; j < lifts.size(); ++j)
        for (std::size_t i = 0; i < lifts.size(); ++i) {
            if (degrees[i] <= degrees[j]) continue;
            Box around{lifts[j], lifts[j]};
            for (std::size_t d = 0; d < n; ++d) {
                around.lo[d] -= Rat(static_cast<long long>(radius));
                around.hi[d] += Rat(static_cast<long long>(radius));
            }
            for (const auto& m : overlapping_translations(around, Box{lifts[i], lifts[i]}))
                if (segment_in_union(lifts[j], lifts[i] + m, T) && !segment_passes_vertex(lifts[j], lifts[i] + m, lifts))
                    info.exponents(i, j).insert(m);
        }
    return info;
}

/// The simplices of X lifted by their canonical representatives, as input
/// for recover_from_T.
inline std::vector<Simplex> T_simplices(const SimplicialSet& X) {
    std::vector<Simplex> out;
    for (const auto& s : X.all_simplices()) out.push_back(s.vertices());
    return out;
}

struct CharacterizationReport {
    bool realizable = false;
    bool condition1 = false;  // edges are exactly the composites of degree-one edges
    bool condition2 = false;  // higher simplices are exactly the chains of edges
    std::string violation;    // first failure, empty when realizable
    std::optional<FreeComplex> witness;
    std::optional<Placement> witness_placement;
    bool witness_reproduces = false;
    bool witness_is_cochain_complex = false;
};

/// Unit-coefficient complex with entry sum_{m in E(i,j)} z^m at every
/// degree-one pair; degrees shifted so the largest is 0.
inline FreeComplex unit_coefficient_complex(const std::vector<int>& degrees, const ExponentTable& E,
                                            std::size_t n) {
    const std::size_t N = degrees.size();
    int top = *std::max_element(degrees.begin(), degrees.end());
    std::vector<int> shifted;
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < N; ++v) {
        shifted.push_back(degrees[v] - top);
        labels.push_back("v" + std::to_string(v));
    }
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t v = 0; v < N; ++v) by_degree[shifted[v]].push_back(v);
    std::map<int, PolyMatrix> diffs;
    for (const auto& [k, cols] : by_degree) {
        auto rows_it = by_degree.find(k + 1);
        if (rows_it == by_degree.end()) continue;
        const auto& rows = rows_it->second;
        PolyMatrix d = zero_matrix(rows.size(), cols.size(), n);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (const auto& m : E(rows[r], cols[c])) d[r][c].add_term(m, Rat(1));
        diffs[k] = std::move(d);
    }
    return FreeComplex(n, std::move(labels), std::move(shifted), std::move(diffs));
}

inline CharacterizationReport check_characterization(const ColoredComplex& C) {
    CharacterizationReport rep;
    const std::size_t n = C.X.dimension();
    auto verts = C.vertices();
    if (verts.empty()) {
        rep.violation = "no vertices";
        return rep;
    }
    std::vector<int> deg;
    for (const auto& v : verts) deg.push_back(C.degree_of(v));
    ExponentTable E = detail::edge_table(C.X, verts);
    const std::size_t N = verts.size();

    // Condition (1): every edge raises degree, and the edges of gap g > 1 are
    // exactly the sums along paths of degree-one edges.
    rep.condition1 = true;
    for (std::size_t j = 0; j < N && rep.condition1; ++j)
        for (std::size_t i = 0; i < N; ++i)
            if (!E(i, j).empty() && deg[i] <= deg[j]) {
                rep.condition1 = false;
                rep.violation = "edge from " + to_string(verts[j]) + " to " + to_string(verts[i]) +
                                " does not raise the degree";
                break;
            }
    if (rep.condition1) {
        ExponentTable closure(n, N);
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = 0; i < N; ++i)
                if (deg[i] == deg[j] + 1) closure(i, j) = E(i, j);
        int lo = *std::min_element(deg.begin(), deg.end());
        int hi = *std::max_element(deg.begin(), deg.end());
        for (int gap = 2; gap <= hi - lo; ++gap)
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t i = 0; i < N; ++i) {
                    if (deg[i] != deg[j] + gap) continue;
                    for (std::size_t l = 0; l < N; ++l) {
                        if (deg[l] != deg[j] + 1) continue;
                        for (const auto& a : closure(l, j))
                            for (const auto& b : closure(i, l)) closure(i, j).insert(a + b);
                    }
                }
        for (std::size_t j = 0; j < N && rep.condition1; ++j)
            for (std::size_t i = 0; i < N; ++i) {
                if (closure(i, j) == E(i, j)) continue;
                rep.condition1 = false;
                for (const auto& m : closure(i, j))
                    if (!E(i, j).count(m)) {
                        rep.violation = "edge [" + to_string(verts[j]) + ", " + to_string(verts[i] + m) +
                                        "] composes from degree-one edges but is absent";
                        break;
                    }
                if (rep.violation.empty())
                    for (const auto& m : E(i, j))
                        if (!closure(i, j).count(m)) {
                            rep.violation = "edge [" + to_string(verts[j]) + ", " + to_string(verts[i] + m) +
                                            "] is not a composite of degree-one edges";
                            break;
                        }
                break;
            }
    }

    // Condition (2): X_k for k >= 2 is the set of chains of edges.
    SimplicialSet chained(n);
    std::size_t top = max_chain_length(E);
    for (std::size_t k = 0; k <= top; ++k)
        for_each_chain(E, k, [&](const Chain& c) { chained.insert(TorusSimplex(chain_simplex(c, verts))); });
    rep.condition2 = true;
    std::size_t levels = std::max(chained.level_count(), C.X.level_count());
    for (std::size_t k = 2; k < levels && rep.condition2; ++k) {
        for (const auto& [s, prov] : C.X.level(k))
            if (!chained.contains(s)) {
                rep.condition2 = false;
                if (rep.violation.empty())
                    rep.violation = "simplex " + to_string(s) + " is not a chain of edges";
                break;
            }
        if (!rep.condition2) break;
        for (const auto& [s, prov] : chained.level(k))
            if (!C.X.contains(s)) {
                rep.condition2 = false;
                if (rep.violation.empty())
                    rep.violation = "chain of edges " + to_string(s) + " is missing from X";
                break;
            }
    }

    rep.realizable = rep.condition1 && rep.condition2;
    if (!rep.realizable) return rep;

    FreeComplex W = unit_coefficient_complex(deg, E, n);
    rep.witness_reproduces = build_X(W, verts).same_simplices(C.X);
    if (!rep.witness_reproduces) throw std::logic_error("characterization witness does not reproduce the input");
    rep.witness_is_cochain_complex = is_cochain_complex(W);
    rep.witness = std::move(W);
    rep.witness_placement = verts;
    return rep;
}

}  // namespace coamoeba
