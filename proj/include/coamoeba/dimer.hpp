#pragma once

// Two-term complexes F^{-1} -> F^0 as weighted bipartite graphs on T^n:
// graph extraction, Kasteleyn matrices, reflected local systems, and the
// kernel of the stalkwise differential.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "linear_algebra.hpp"
#include "mirror_complex.hpp"

namespace coamoeba {

struct DimerEdge {
    std::size_t black;  // position in I_{-1}
    std::size_t white;  // position in I_0
    Lattice m;
    Rat weight;
};

/// Black vertices have degree -1, white vertices degree 0. Vertex points are
/// the placement lifts; edge e runs from black[e.black] to white[e.white] + e.m.
struct BipartiteTorusGraph {
    std::size_t n = 0;
    std::vector<std::string> variables;
    std::vector<std::string> black_labels, white_labels;
    std::vector<Point> black, white;
    std::vector<DimerEdge> edges;

    std::vector<std::size_t> edges_at_black(std::size_t b) const {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].black == b) out.push_back(e);
        return out;
    }

    std::vector<std::size_t> edges_at_white(std::size_t w) const {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].white == w) out.push_back(e);
        return out;
    }

    Simplex edge_segment(std::size_t e) const {
        const auto& E = edges.at(e);
        return {black.at(E.black), white.at(E.white) + E.m};
    }
};

inline bool is_two_term(const FreeComplex& F) {
    for (int k : F.degrees_present())
        if (k != 0 && k != -1) return false;
    return true;
}

inline BipartiteTorusGraph extract_graph(const FreeComplex& F, const Placement& P) {
    if (!is_two_term(F)) throw std::invalid_argument("wrong degree profile: expected degrees 0 and -1 only");
    check_placement(F, P);
    BipartiteTorusGraph G;
    G.n = F.dimension();
    G.variables = F.variables();
    const auto& blacks = F.indices_in_degree(-1);
    const auto& whites = F.indices_in_degree(0);
    for (auto b : blacks) {
        G.black_labels.push_back(F.label(b));
        G.black.push_back(P[b]);
    }
    for (auto w : whites) {
        G.white_labels.push_back(F.label(w));
        G.white.push_back(P[w]);
    }
    if (blacks.empty()) return G;
    const PolyMatrix& d = F.differential(-1);
    for (std::size_t w = 0; w < whites.size(); ++w)
        for (std::size_t b = 0; b < blacks.size(); ++b)
            for (const auto& [m, c] : d[w][b].terms()) G.edges.push_back({b, w, m, c});
    return G;
}

/// Entry (white w, black b) is the sum of weight * z^m over edges joining them.
inline PolyMatrix kasteleyn(const BipartiteTorusGraph& G) {
    PolyMatrix K = zero_matrix(G.white.size(), G.black.size(), G.n);
    for (const auto& e : G.edges) K[e.white][e.black].add_term(e.m, e.weight);
    return K;
}

/// A representation of the incidence quiver: spaces at vertices and edges,
/// and for each edge the maps from its black and its white endpoint.
struct QuiverRep {
    std::vector<std::size_t> black_dims, white_dims, edge_dims;
    std::vector<RatMatrix> black_maps;  // edge_dims[e] x black_dims[edge black]
    std::vector<RatMatrix> white_maps;  // edge_dims[e] x white_dims[edge white]

    /// Black dimensions followed by white dimensions.
    std::vector<std::size_t> vertex_dims() const {
        std::vector<std::size_t> out = black_dims;
        out.insert(out.end(), white_dims.begin(), white_dims.end());
        return out;
    }
};

/// Reflection at every white vertex of the rank-one local system whose white
/// stalk is Q and whose edge-to-white maps are the weights: each white space
/// becomes the kernel of (x_e) -> sum_e w_e x_e.
inline QuiverRep reflect_local_system(const BipartiteTorusGraph& G, const std::vector<Rat>& weights) {
    if (weights.size() != G.edges.size()) throw std::invalid_argument("one weight per edge is required");
    for (std::size_t e = 0; e < weights.size(); ++e)
        if (weights[e] == 0) throw std::invalid_argument("zero weight on edge " + std::to_string(e));
    QuiverRep R;
    R.black_dims.assign(G.black.size(), 1);
    R.edge_dims.assign(G.edges.size(), 1);
    R.white_dims.assign(G.white.size(), 0);
    R.black_maps.assign(G.edges.size(), RatMatrix::identity(1));
    R.white_maps.assign(G.edges.size(), RatMatrix());
    for (std::size_t w = 0; w < G.white.size(); ++w) {
        auto inc = G.edges_at_white(w);
        RatMatrix sum(1, inc.size());
        for (std::size_t a = 0; a < inc.size(); ++a) sum(0, a) = weights[inc[a]];
        RatMatrix K = kernel(sum);
        R.white_dims[w] = K.cols();
        for (std::size_t a = 0; a < inc.size(); ++a) {
            RatMatrix row(1, K.cols());
            for (std::size_t c = 0; c < K.cols(); ++c) row(0, c) = K(a, c);
            R.white_maps[inc[a]] = std::move(row);
        }
    }
    return R;
}

inline QuiverRep reflect_local_system(const BipartiteTorusGraph& G) {
    std::vector<Rat> w;
    for (const auto& e : G.edges) w.push_back(e.weight);
    return reflect_local_system(G, w);
}

struct ReflectedCheck {
    bool ok = false;
    bool condition1 = false;  // black-side maps invertible, all edge spaces of rank m
    bool condition2 = false;  // white spaces embed with codimension m, meeting no edge summand
    std::size_t rank = 0;
    std::string violation;
};

inline ReflectedCheck check_reflected(const QuiverRep& R, const BipartiteTorusGraph& G) {
    ReflectedCheck rep;
    const std::size_t E = G.edges.size();
    if (R.edge_dims.size() != E || R.black_maps.size() != E || R.white_maps.size() != E ||
        R.black_dims.size() != G.black.size() || R.white_dims.size() != G.white.size()) {
        rep.violation = "representation does not match the graph";
        return rep;
    }
    const std::size_t m = E ? R.edge_dims[0] : 0;
    rep.rank = m;

    rep.condition1 = true;
    for (std::size_t e = 0; e < E && rep.condition1; ++e) {
        const auto& B = R.black_maps[e];
        std::size_t bd = R.black_dims[G.edges[e].black];
        if (R.edge_dims[e] != m || bd != m || B.rows() != m || B.cols() != m || rank(B) != m) {
            rep.condition1 = false;
            rep.violation = "black half-edge map on edge " + std::to_string(e) + " is not invertible of rank " +
                            std::to_string(m);
        }
    }

    rep.condition2 = true;
    for (std::size_t w = 0; w < G.white.size() && rep.condition2; ++w) {
        auto inc = G.edges_at_white(w);
        const std::size_t dim = R.white_dims[w];
        const std::size_t total = inc.size() * m;
        RatMatrix W(total, dim);
        for (std::size_t a = 0; a < inc.size(); ++a) {
            const auto& M = R.white_maps[inc[a]];
            if (M.rows() != m || M.cols() != dim) {
                rep.condition2 = false;
                rep.violation = "white half-edge map on edge " + std::to_string(inc[a]) + " has the wrong shape";
                break;
            }
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < dim; ++c) W(a * m + r, c) = M(r, c);
        }
        if (!rep.condition2) break;
        if (rank(W) != dim || dim + m != total) {
            rep.condition2 = false;
            rep.violation = "white vertex " + std::to_string(w) + " does not embed with codimension " +
                            std::to_string(m);
            break;
        }
        for (std::size_t a = 0; a < inc.size(); ++a) {
            RatMatrix aug(total, dim + m);
            for (std::size_t r = 0; r < total; ++r)
                for (std::size_t c = 0; c < dim; ++c) aug(r, c) = W(r, c);
            for (std::size_t r = 0; r < m; ++r) aug(a * m + r, dim + r) = 1;
            if (rank(aug) != dim + m) {
                rep.condition2 = false;
                rep.violation = "white vertex " + std::to_string(w) + " meets the summand of edge " +
                                std::to_string(inc[a]);
                break;
            }
        }
    }
    rep.ok = rep.condition1 && rep.condition2;
    return rep;
}

inline bool verify_reflected(const QuiverRep& R, const BipartiteTorusGraph& G) { return check_reflected(R, G).ok; }

/// Raised when the hypotheses of the kernel computation fail.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Generization on all degree -1 terms from a vertex lift to an edge lift:
/// basis element q at the vertex goes to q - s at the edge, where s is the
/// integer offset of the vertex on the lifted edge, provided the quarter
/// point towards the edge stays in the support.
inline RatMatrix generization(const MirrorDifferential& D, const std::vector<std::size_t>& terms,
                              const Stalk& at_vertex, const Stalk& at_edge, const Point& vertex_on_edge,
                              const Point& quarter) {
    Lattice s;
    if (!integer_difference(vertex_on_edge, at_vertex.lift, s)) throw std::logic_error("vertex lift mismatch");
    Point step = quarter - vertex_on_edge;
    std::size_t nr = 0, nc = 0;
    for (auto j : terms) {
        nr += at_edge.dimension(j);
        nc += at_vertex.dimension(j);
    }
    RatMatrix G(nr, nc);
    std::size_t r0 = 0, c0 = 0;
    for (auto j : terms) {
        const auto& qs = at_vertex.bases[j];
        const auto& ps = at_edge.bases[j];
        for (std::size_t a = 0; a < qs.size(); ++a) {
            if (!D.supports[j].contains(at_vertex.lift + qs[a] + step)) continue;
            Lattice p = qs[a] - s;
            auto hit = std::lower_bound(ps.begin(), ps.end(), p);
            if (hit == ps.end() || *hit != p) throw std::logic_error("generization target missing on edge");
            G(r0 + static_cast<std::size_t>(hit - ps.begin()), c0 + a) = 1;
        }
        r0 += ps.size();
        c0 += qs.size();
    }
    return G;
}

}  // namespace detail

struct KernelResult {
    QuiverRep rep;
    ReflectedCheck check;
    std::vector<std::size_t> white_target_dims;  // stalk dimension of F^0 at each white vertex
};

/// Kernel of d : C^{-1} -> C^0 on stalks at every vertex and at the midpoint
/// of every edge, with generization maps read off at quarter points.
inline KernelResult kernel_of_d(const FreeComplex& F, const Placement& P) {
    BipartiteTorusGraph G = extract_graph(F, P);
    EmbeddingReport emb = check_embedded(build_X(F, P));
    if (!emb.embedded) throw PreconditionError("T(F) is not embedded");
    for (std::size_t b = 0; b < G.black.size(); ++b)
        if (G.edges_at_black(b).empty()) throw PreconditionError("isolated black vertex " + G.black_labels[b]);
    for (std::size_t w = 0; w < G.white.size(); ++w)
        if (G.edges_at_white(w).empty()) throw PreconditionError("isolated white vertex " + G.white_labels[w]);

    MirrorDifferential D = build_mirror(F, P);
    const auto& blacks = F.indices_in_degree(-1);
    const Rat half(1, 2), quarter(1, 4);

    auto kernel_at = [&](const Stalk& st) {
        RatMatrix d = stalk_map(D, st, -1);
        return std::make_pair(d, kernel(d));
    };

    KernelResult out;
    QuiverRep& R = out.rep;
    std::vector<Stalk> black_stalks, white_stalks, edge_stalks;
    std::vector<RatMatrix> black_ker, white_ker, edge_ker;
    for (std::size_t b = 0; b < G.black.size(); ++b) {
        black_stalks.push_back(stalk_at_lift(D, G.black[b]));
        black_ker.push_back(kernel_at(black_stalks.back()).second);
        R.black_dims.push_back(black_ker.back().cols());
    }
    for (std::size_t w = 0; w < G.white.size(); ++w) {
        white_stalks.push_back(stalk_at_lift(D, G.white[w]));
        auto [d, K] = kernel_at(white_stalks.back());
        if (rank(d) != d.rows())
            throw PreconditionError("d is not surjective at white vertex " + G.white_labels[w]);
        out.white_target_dims.push_back(d.rows());
        white_ker.push_back(K);
        R.white_dims.push_back(K.cols());
    }
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
        Simplex seg = G.edge_segment(e);
        edge_stalks.push_back(stalk_at_lift(D, seg[0] + half * (seg[1] - seg[0])));
        edge_ker.push_back(kernel_at(edge_stalks.back()).second);
        R.edge_dims.push_back(edge_ker.back().cols());
    }

    for (std::size_t e = 0; e < G.edges.size(); ++e) {
        Simplex seg = G.edge_segment(e);
        const auto& E = G.edges[e];
        Point dir = seg[1] - seg[0];
        RatMatrix gb = detail::generization(D, blacks, black_stalks[E.black], edge_stalks[e], seg[0],
                                            seg[0] + quarter * dir);
        RatMatrix gw = detail::generization(D, blacks, white_stalks[E.white], edge_stalks[e], seg[1],
                                            seg[1] - quarter * dir);
        R.black_maps.push_back(coordinates_in(edge_ker[e], gb * black_ker[E.black]));
        R.white_maps.push_back(coordinates_in(edge_ker[e], gw * white_ker[E.white]));
    }

    out.check = check_reflected(R, G);
    if (!out.check.ok) throw std::logic_error("kernel of d is not a reflected local system: " + out.check.violation);
    return out;
}

/// dim ker_w = sum of incident edge dimensions - dim F^0_w, at every white vertex.
inline bool euler_balanced(const KernelResult& K, const BipartiteTorusGraph& G) {
    for (std::size_t w = 0; w < G.white.size(); ++w) {
        std::size_t incident = 0;
        for (auto e : G.edges_at_white(w)) incident += K.rep.edge_dims[e];
        if (K.rep.white_dims[w] + K.white_target_dims[w] != incident) return false;
    }
    return true;
}

}  // namespace coamoeba
