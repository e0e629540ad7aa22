#pragma once

// Exact predicates on (possibly degenerate) Euclidean simplices in R^n given
// by ordered vertex tuples: affine rank, bounding boxes, relative-interior
// intersection, point containment, and volume.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linear_algebra.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace coamoeba {

/// Ordered vertex tuple of a linear simplex in R^n.
using Simplex = std::vector<Point>;

inline Simplex translated(const Simplex& s, const Lattice& m) {
    Simplex out;
    out.reserve(s.size());
    for (const auto& v : s) out.push_back(v + m);
    return out;
}

/// Dimension of the affine hull of the vertices.
inline std::size_t affine_rank(const Simplex& s) {
    if (s.size() <= 1) return 0;
    const std::size_t n = s[0].size();
    RatMatrix m(s.size() - 1, n);
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t d = 0; d < n; ++d) m(i - 1, d) = s[i][d] - s[0][d];
    return rank(std::move(m));
}

inline bool is_degenerate(const Simplex& s) { return affine_rank(s) + 1 < s.size(); }

struct Box {
    Point lo, hi;
};

inline Box bounding_box(const Simplex& s) {
    Box b{s.at(0), s.at(0)};
    for (const auto& v : s)
        for (std::size_t d = 0; d < v.size(); ++d) {
            if (v[d] < b.lo[d]) b.lo[d] = v[d];
            if (v[d] > b.hi[d]) b.hi[d] = v[d];
        }
    return b;
}

inline Box bounding_box(const std::vector<Simplex>& simplices) {
    Box b = bounding_box(simplices.at(0));
    for (const auto& s : simplices) {
        Box c = bounding_box(s);
        for (std::size_t d = 0; d < b.lo.size(); ++d) {
            if (c.lo[d] < b.lo[d]) b.lo[d] = c.lo[d];
            if (c.hi[d] > b.hi[d]) b.hi[d] = c.hi[d];
        }
    }
    return b;
}

/// Every m in Z^n with (b + m) meeting the closed box a; outside this
/// integer box the two sets cannot intersect.
inline std::vector<Lattice> overlapping_translations(const Box& a, const Box& b) {
    const std::size_t n = a.lo.size();
    std::vector<std::int64_t> lo(n), hi(n);
    for (std::size_t d = 0; d < n; ++d) {
        lo[d] = to_int64(-floor(-(a.lo[d] - b.hi[d])));  // ceil
        hi[d] = to_int64(floor(a.hi[d] - b.lo[d]));
        if (lo[d] > hi[d]) return {};
    }
    std::vector<Lattice> out;
    Lattice m = lo;
    while (true) {
        out.push_back(m);
        std::size_t d = n;
        while (d > 0) {
            --d;
            if (m[d] < hi[d]) {
                ++m[d];
                for (std::size_t e = d + 1; e < n; ++e) m[e] = lo[e];
                break;
            }
            if (d == 0) return out;
        }
        if (n == 0) return out;
    }
}

inline bool boxes_overlap(const Box& a, const Box& b) {
    for (std::size_t d = 0; d < a.lo.size(); ++d)
        if (a.hi[d] < b.lo[d] || b.hi[d] < a.lo[d]) return false;
    return true;
}

inline bool box_contains(const Box& b, const Point& p) {
    for (std::size_t d = 0; d < p.size(); ++d)
        if (p[d] < b.lo[d] || p[d] > b.hi[d]) return false;
    return true;
}

/// Whether the relative interiors of conv(a) and conv(b) meet. The relative
/// interior of conv(V) is the set of strictly positive barycentric
/// combinations of V, so degenerate tuples are handled in their affine hull.
/// On success a common point is written to `witness`.
inline bool relative_interiors_intersect(const Simplex& a, const Simplex& b, Point* witness = nullptr) {
    const std::size_t n = a.at(0).size();
    const std::size_t p = a.size(), q = b.size();
    if (!boxes_overlap(bounding_box(a), bounding_box(b))) return false;

    // Affine hulls must meet before any sign condition matters.
    {
        RatMatrix m(n + 2, p + q);
        std::vector<Rat> rhs(n + 2, Rat(0));
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t d = 0; d < n; ++d) m(d, i) = a[i][d];
            m(n, i) = 1;
        }
        for (std::size_t j = 0; j < q; ++j) {
            for (std::size_t d = 0; d < n; ++d) m(d, p + j) = -b[j][d];
            m(n + 1, p + j) = 1;
        }
        rhs[n] = 1;
        rhs[n + 1] = 1;
        if (!solve(m, rhs)) return false;
    }

    // Variables: t, lambda'_i (i < p), mu'_j (j < q), all >= 0, with
    // lambda_i = t + lambda'_i and mu_j = t + mu'_j. Maximize t.
    const std::size_t vars = 1 + p + q;
    RatMatrix A(n + 2, vars);
    std::vector<Rat> rhs(n + 2, Rat(0));
    A(0, 0) = Rat(static_cast<long long>(p));
    for (std::size_t i = 0; i < p; ++i) A(0, 1 + i) = 1;
    rhs[0] = 1;
    A(1, 0) = Rat(static_cast<long long>(q));
    for (std::size_t j = 0; j < q; ++j) A(1, 1 + p + j) = 1;
    rhs[1] = 1;
    for (std::size_t d = 0; d < n; ++d) {
        Rat sum = 0;
        for (std::size_t i = 0; i < p; ++i) {
            A(2 + d, 1 + i) = a[i][d];
            sum += a[i][d];
        }
        for (std::size_t j = 0; j < q; ++j) {
            A(2 + d, 1 + p + j) = -b[j][d];
            sum -= b[j][d];
        }
        A(2 + d, 0) = sum;
    }
    std::vector<Rat> c(vars, Rat(0));
    c[0] = 1;
    LpResult r = lp_maximize(A, rhs, c);
    if (r.status != LpResult::Status::Optimal || r.value <= 0) return false;
    if (witness) {
        *witness = zero_point(n);
        for (std::size_t i = 0; i < p; ++i) *witness = *witness + (r.x[0] + r.x[1 + i]) * a[i];
    }
    return true;
}

/// Closed containment of a point in conv(s).
inline bool contains_point(const Simplex& s, const Point& x) {
    if (!box_contains(bounding_box(s), x)) return false;
    if (s.size() == 1) return s[0] == x;
    const std::size_t n = x.size();
    if (s.size() == 2) {
        // a + t (b - a) = x with t in [0, 1].
        std::optional<Rat> t;
        for (std::size_t d = 0; d < n; ++d) {
            Rat dir = s[1][d] - s[0][d];
            Rat off = x[d] - s[0][d];
            if (dir == 0) {
                if (off != 0) return false;
                continue;
            }
            Rat td = off / dir;
            if (t && *t != td) return false;
            t = td;
        }
        return !t || (*t >= 0 && *t <= 1);
    }
    RatMatrix A(n + 1, s.size());
    std::vector<Rat> rhs(n + 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t d = 0; d < n; ++d) A(d, i) = s[i][d];
        A(n, i) = 1;
    }
    for (std::size_t d = 0; d < n; ++d) rhs[d] = x[d];
    rhs[n] = 1;
    return lp_maximize(A, rhs, std::vector<Rat>(s.size(), Rat(0))).feasible();
}

/// {t in [0,1] : a + t (b - a) in conv(s)} as a closed interval, if nonempty.
inline std::optional<std::pair<Rat, Rat>> segment_parameter_range(const Point& a, const Point& b, const Simplex& s) {
    const std::size_t n = a.size();
    const std::size_t q = s.size();
    // Variables: t, slack (t + slack = 1), mu_j.
    RatMatrix A(n + 2, 2 + q);
    std::vector<Rat> rhs(n + 2, Rat(0));
    for (std::size_t d = 0; d < n; ++d) {
        A(d, 0) = b[d] - a[d];
        for (std::size_t j = 0; j < q; ++j) A(d, 2 + j) = -s[j][d];
        rhs[d] = -a[d];
    }
    A(n, 0) = 1;
    A(n, 1) = 1;
    rhs[n] = 1;
    for (std::size_t j = 0; j < q; ++j) A(n + 1, 2 + j) = 1;
    rhs[n + 1] = 1;
    std::vector<Rat> c(2 + q, Rat(0));
    c[0] = 1;
    LpResult hi = lp_maximize(A, rhs, c);
    if (!hi.feasible()) return std::nullopt;
    c[0] = -1;
    LpResult lo = lp_maximize(A, rhs, c);
    return std::make_pair(Rat(-lo.value), hi.value);
}

inline Rat factorial(std::size_t k) {
    Rat f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= Rat(static_cast<long long>(i));
    return f;
}

/// Volume of an n-simplex in R^n (n + 1 vertices): |det| / n!.
inline Rat volume(const Simplex& s) {
    const std::size_t n = s.at(0).size();
    if (s.size() != n + 1) throw std::invalid_argument("volume: need n + 1 vertices in R^n");
    RatMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t d = 0; d < n; ++d) m(i - 1, d) = s[i][d] - s[0][d];
    Rat det = determinant(std::move(m));
    if (det < 0) det = -det;
    return det / factorial(n);
}

}  // namespace coamoeba
