#pragma once

// The complex of pushed-forward constant sheaves on the support sets, modeled
// by formal differentials sum c * phi^m_ij and by exact stalk matrices.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linear_algebra.hpp"
#include "torus_complex.hpp"

namespace coamoeba {

/// Formal sum of the elementary maps phi^m for a fixed (i, j): m -> coefficient.
using FormalSum = std::map<Lattice, Rat>;

/// Rows index I_{k+1}, columns I_k, as for polynomial matrices.
using FormalMatrix = std::vector<std::vector<FormalSum>>;

inline bool is_zero(const FormalMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.empty()) return false;
    return true;
}

inline FormalSum to_formal(const LaurentPoly& p) {
    FormalSum s;
    for (const auto& [m, c] : p.terms()) s[m] = c;
    return s;
}

struct MirrorDifferential {
    FreeComplex complex;
    Placement placement;
    std::vector<SupportSet> supports;
    std::map<int, FormalMatrix> differentials;

    const FormalMatrix& differential(int k) const {
        auto it = differentials.find(k);
        if (it == differentials.end()) throw std::out_of_range("missing degree: d^" + std::to_string(k));
        return it->second;
    }
};

/// One formal entry per polynomial entry; each phi^m_ij is checked to exist,
/// i.e. S_i + m is a union of faces of simplices of S_j.
inline MirrorDifferential build_mirror(const FreeComplex& F, const Placement& P) {
    MirrorDifferential D{F, P, build_S(F, P), {}};
    std::vector<std::set<Simplex>> closures;
    for (const auto& S : D.supports) closures.push_back(face_closure(S.simplices));

    for (const auto& [k, mat] : F.differentials()) {
        const auto& rows = F.indices_in_degree(k + 1);
        const auto& cols = F.indices_in_degree(k);
        FormalMatrix fm(rows.size(), std::vector<FormalSum>(cols.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) {
                fm[r][c] = to_formal(mat[r][c]);
                for (const auto& [m, coef] : fm[r][c]) {
                    for (const auto& f : closures[rows[r]]) {
                        Simplex moved = translated(f, m);
                        if (!closures[cols[c]].count(moved))
                            throw std::logic_error("support containment fails for phi^" + to_string(m) + " from " +
                                                   F.label(cols[c]) + " to " + F.label(rows[r]));
                    }
                }
            }
        D.differentials[k] = std::move(fm);
    }
    return D;
}

/// d^{k+1} d^k using phi^m_ij phi^m'_jl = phi^{m+m'}_il; empty when either
/// differential is absent.
inline FormalMatrix compose_mirror(const MirrorDifferential& D, int k) {
    auto a = D.differentials.find(k);
    auto b = D.differentials.find(k + 1);
    if (a == D.differentials.end() || b == D.differentials.end()) return {};
    const FormalMatrix& lower = a->second;
    const FormalMatrix& upper = b->second;
    const std::size_t rows = upper.size();
    const std::size_t cols = lower.empty() ? 0 : lower[0].size();
    FormalMatrix out(rows, std::vector<FormalSum>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < lower.size(); ++j)
            for (std::size_t l = 0; l < cols; ++l)
                for (const auto& [m1, c1] : upper[i][j])
                    for (const auto& [m2, c2] : lower[j][l]) {
                        auto& slot = out[i][l][m1 + m2];
                        slot += c1 * c2;
                        if (slot == 0) out[i][l].erase(m1 + m2);
                    }
    return out;
}

struct D2Report {
    bool equivalent = true;           // polynomial and formal composites vanish together
    bool polynomial_vanishes = true;  // d^2 = 0 for F
    bool mirror_vanishes = true;      // d^2 = 0 for the formal model
    bool same_support = true;         // identical nonzero (i, l, m) in every degree
};

inline D2Report d2_equivalence(const FreeComplex& F, const Placement& P) {
    MirrorDifferential D = build_mirror(F, P);
    D2Report rep;
    for (const auto& [k, mat] : F.differentials()) {
        if (!F.has_differential(k + 1)) continue;
        PolyMatrix poly = compose_differentials(F, k);
        FormalMatrix formal = compose_mirror(D, k);
        if (!is_zero(poly)) rep.polynomial_vanishes = false;
        if (!is_zero(formal)) rep.mirror_vanishes = false;
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t l = 0; l < poly[i].size(); ++l)
                if (to_formal(poly[i][l]) != formal[i][l]) rep.same_support = false;
    }
    rep.equivalent = rep.polynomial_vanishes == rep.mirror_vanishes;
    return rep;
}

/// Stalks of every term at one point, described by a fixed lift of the point:
/// bases[i] lists the m with lift + m in S_i, in lexicographic order.
struct Stalk {
    Point lift;
    std::vector<std::vector<Lattice>> bases;

    std::size_t dimension(std::size_t i) const { return bases.at(i).size(); }
};

inline Stalk stalk_at_lift(const MirrorDifferential& D, const Point& lift) {
    Stalk s{lift, {}};
    for (const auto& S : D.supports) s.bases.push_back(S.lifts(lift));
    return s;
}

/// Stalk at theta in T^n using the lift in [0,1)^n.
inline Stalk stalk(const MirrorDifferential& D, const Point& theta) {
    return stalk_at_lift(D, reduce_mod_lattice(theta));
}

/// Matrix of d^k on stalks: rows run over I_{k+1} and then the basis of each
/// term, columns likewise over I_k. The entry from lift p of S_j to lift q
/// of S_i is the sum of c_ijm over m with q + m = p.
inline RatMatrix stalk_map(const MirrorDifferential& D, const Stalk& st, int k) {
    const FreeComplex& F = D.complex;
    const auto& rows = F.indices_in_degree(k + 1);
    const auto& cols = F.indices_in_degree(k);
    std::size_t nr = 0, nc = 0;
    for (auto i : rows) nr += st.dimension(i);
    for (auto j : cols) nc += st.dimension(j);
    RatMatrix M(nr, nc);
    auto it = D.differentials.find(k);
    if (it == D.differentials.end()) return M;
    std::size_t r0 = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& qs = st.bases[rows[r]];
        std::size_t c0 = 0;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto& ps = st.bases[cols[c]];
            for (const auto& [m, coef] : it->second[r][c])
                for (std::size_t a = 0; a < qs.size(); ++a) {
                    auto hit = std::lower_bound(ps.begin(), ps.end(), qs[a] + m);
                    if (hit != ps.end() && *hit == qs[a] + m)
                        M(r0 + a, c0 + static_cast<std::size_t>(hit - ps.begin())) += coef;
                }
            c0 += ps.size();
        }
        r0 += qs.size();
    }
    return M;
}

inline RatMatrix stalk_map(const MirrorDifferential& D, const Point& theta, int k) {
    return stalk_map(D, stalk(D, theta), k);
}

}  // namespace coamoeba
