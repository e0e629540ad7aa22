#pragma once

// X(F) and T(F) as semi-simplicial sets over the torus R^n / Z^n, the support
// sets S_i in R^n, and the immersion / embedding predicates.

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "exponent_sets.hpp"
#include "geometry.hpp"

namespace coamoeba {

/// x_i for every index of a complex, in index order.
using Placement = std::vector<Point>;

inline void check_placement(const FreeComplex& F, const Placement& P) {
    if (P.size() != F.size()) throw std::invalid_argument("placement size differs from the index count");
    for (const auto& x : P)
        if (x.size() != F.dimension()) throw std::invalid_argument("placement point has wrong dimension");
}

/// Ordered simplex in R^n taken modulo a common Z^n translation; stored as the
/// translate whose first vertex lies in [0,1)^n.
class TorusSimplex {
public:
    TorusSimplex() = default;
    explicit TorusSimplex(Simplex vertices) : v_(std::move(vertices)) {
        if (v_.empty()) throw std::invalid_argument("simplex without vertices");
        Lattice shift = floor_lattice(v_[0]);
        if (!is_zero(shift))
            for (auto& p : v_) p = p - shift;
    }

    const Simplex& vertices() const noexcept { return v_; }
    const Point& vertex(std::size_t j) const { return v_.at(j); }
    std::size_t dim() const noexcept { return v_.size() - 1; }
    std::size_t ambient_dimension() const { return v_.at(0).size(); }

    /// Deletes vertex j and re-canonicalizes.
    TorusSimplex face(std::size_t j) const {
        if (dim() == 0) throw std::out_of_range("face of a 0-simplex");
        if (j > dim()) throw std::out_of_range("face index out of range");
        Simplex w = v_;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
        return TorusSimplex(std::move(w));
    }

    bool degenerate() const { return is_degenerate(v_); }

    bool has_repeated_vertices() const {
        for (std::size_t a = 0; a < v_.size(); ++a)
            for (std::size_t b = a + 1; b < v_.size(); ++b)
                if (v_[a] == v_[b]) return true;
        return false;
    }

    /// Order-forgetting key: the lexicographically least sorted vertex set
    /// over all translates putting some vertex in [0,1)^n. Repeated vertices
    /// are collapsed.
    Simplex unordered_key() const { return unordered_key(v_); }

    static Simplex unordered_key(const Simplex& vertices) {
        Simplex best;
        for (const auto& base : vertices) {
            Lattice shift = floor_lattice(base);
            Simplex cand;
            for (const auto& p : vertices) cand.push_back(p - shift);
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            if (best.empty() || cand < best) best = std::move(cand);
        }
        return best;
    }

    friend auto operator<=>(const TorusSimplex&, const TorusSimplex&) = default;
    friend bool operator==(const TorusSimplex&, const TorusSimplex&) = default;

private:
    Simplex v_;
};

inline std::string to_string(const TorusSimplex& s) {
    std::string out = "[";
    for (std::size_t j = 0; j <= s.dim(); ++j) {
        if (j) out += ", ";
        out += to_string(s.vertex(j));
    }
    return out + "]";
}

/// Graded sets X_k with, for each simplex, the chains that produced it.
class SimplicialSet {
public:
    using Level = std::map<TorusSimplex, std::vector<Chain>>;

    SimplicialSet() = default;
    explicit SimplicialSet(std::size_t n) : n_(n) {}

    std::size_t dimension() const noexcept { return n_; }

    void insert(const TorusSimplex& s, std::optional<Chain> provenance = std::nullopt) {
        if (s.ambient_dimension() != n_) throw std::invalid_argument("simplex has wrong ambient dimension");
        if (levels_.size() <= s.dim()) levels_.resize(s.dim() + 1);
        auto& entry = levels_[s.dim()][s];
        if (provenance) entry.push_back(std::move(*provenance));
    }

    /// Number of nonempty-or-interior levels; max simplex dimension + 1.
    std::size_t level_count() const noexcept { return levels_.size(); }

    const Level& level(std::size_t k) const {
        static const Level empty;
        return k < levels_.size() ? levels_[k] : empty;
    }

    bool empty() const noexcept { return levels_.empty(); }

    /// Largest k with X_k nonempty, or -1.
    int max_dim() const {
        for (std::size_t k = levels_.size(); k-- > 0;)
            if (!levels_[k].empty()) return static_cast<int>(k);
        return -1;
    }

    bool contains(const TorusSimplex& s) const { return level(s.dim()).count(s) != 0; }

    std::size_t count(std::size_t k) const { return level(k).size(); }

    std::size_t chain_count(std::size_t k) const {
        std::size_t total = 0;
        for (const auto& [s, prov] : level(k)) total += prov.size();
        return total;
    }

    std::vector<TorusSimplex> simplices(std::size_t k) const {
        std::vector<TorusSimplex> out;
        for (const auto& [s, prov] : level(k)) out.push_back(s);
        return out;
    }

    /// All simplices, by dimension then canonical order.
    std::vector<TorusSimplex> all_simplices() const {
        std::vector<TorusSimplex> out;
        for (const auto& lvl : levels_)
            for (const auto& [s, prov] : lvl) out.push_back(s);
        return out;
    }

    const std::vector<Chain>& provenance(const TorusSimplex& s) const { return level(s.dim()).at(s); }

    /// Simplex-set equality; provenance is ignored.
    bool same_simplices(const SimplicialSet& other) const {
        std::size_t top = std::max(levels_.size(), other.levels_.size());
        for (std::size_t k = 0; k < top; ++k) {
            const auto& a = level(k);
            const auto& b = other.level(k);
            if (a.size() != b.size()) return false;
            for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
                if (ia->first != ib->first) return false;
        }
        return true;
    }

private:
    std::size_t n_ = 0;
    std::vector<Level> levels_;
};

/// The simplex [x_{i0}, x_{i1} + m_1, ..., x_{ik} + m_1 + ... + m_k] in R^n.
inline Simplex chain_simplex(const Chain& c, const Placement& P) {
    const std::size_t n = P.at(c.indices.at(0)).size();
    auto offs = c.offsets(n);
    Simplex s;
    for (std::size_t l = 0; l < c.indices.size(); ++l) s.push_back(P.at(c.indices[l]) + offs[l]);
    return s;
}

inline SimplicialSet build_X(const FreeComplex& F, const Placement& P) {
    check_placement(F, P);
    ExponentTable E = exponent_table(F);
    SimplicialSet X(F.dimension());
    std::size_t top = max_chain_length(E);
    for (std::size_t k = 0; k <= top; ++k)
        for_each_chain(E, k, [&](const Chain& c) { X.insert(TorusSimplex(chain_simplex(c, P)), c); });
    return X;
}

struct FaceViolation {
    TorusSimplex simplex;
    std::size_t face_index;
};

/// First simplex (in canonical order) having a facet missing from X.
inline std::optional<FaceViolation> face_closure_violation(const SimplicialSet& X) {
    for (std::size_t k = 1; k < X.level_count(); ++k)
        for (const auto& [s, prov] : X.level(k))
            for (std::size_t j = 0; j <= k; ++j)
                if (!X.contains(s.face(j))) return FaceViolation{s, j};
    return std::nullopt;
}

inline bool is_face_closed(const SimplicialSet& X) { return !face_closure_violation(X); }

// --- support sets --------------------------------------------------------------

/// S_i as a finite union of simplices in R^n.
struct SupportSet {
    std::size_t index = 0;
    std::set<Simplex> simplices;

    Box bounding_box() const {
        std::vector<Simplex> v(simplices.begin(), simplices.end());
        return coamoeba::bounding_box(v);
    }

    bool contains(const Point& p) const {
        for (const auto& s : simplices)
            if (contains_point(s, p)) return true;
        return false;
    }

    /// {m in Z^n : theta + m in S_i}, lexicographically ordered.
    std::vector<Lattice> lifts(const Point& theta) const {
        std::vector<Lattice> out;
        if (simplices.empty()) return out;
        for (const auto& m : overlapping_translations(bounding_box(), Box{theta, theta}))
            if (contains(theta + m)) out.push_back(m);
        return out;
    }

    /// Maximal simplices: those not a vertex subset of another listed simplex.
    std::vector<Simplex> maximal_simplices() const;
};

namespace detail {

inline bool vertex_subset(const Simplex& a, const Simplex& b) {
    for (const auto& v : a)
        if (std::find(b.begin(), b.end(), v) == b.end()) return false;
    return true;
}

}  // namespace detail

inline std::vector<Simplex> SupportSet::maximal_simplices() const {
    std::vector<Simplex> out;
    for (const auto& s : simplices) {
        bool covered = false;
        for (const auto& t : simplices)
            if (t.size() > s.size() && detail::vertex_subset(s, t)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(s);
    }
    return out;
}

/// Direct enumeration: one simplex per chain starting at i, of every length.
inline std::vector<SupportSet> build_S(const FreeComplex& F, const Placement& P) {
    check_placement(F, P);
    ExponentTable E = exponent_table(F);
    std::size_t top = max_chain_length(E);
    std::vector<SupportSet> out(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        out[i].index = i;
        for (std::size_t k = 0; k <= top; ++k)
            for_each_chain_from(E, i, k, [&](const Chain& c) { out[i].simplices.insert(chain_simplex(c, P)); });
    }
    return out;
}

/// The cone recursion S_i = U_{j, m in E_ji} [x_i, S_j + m], with S_i = {x_i}
/// when no E_ji is nonempty. With `adjacent_only` the union runs over
/// deg(j) = deg(i) + 1 only.
inline std::vector<SupportSet> build_S_recursive(const FreeComplex& F, const Placement& P, bool adjacent_only = false) {
    check_placement(F, P);
    ExponentTable E = exponent_table(F);
    const std::size_t N = F.size();
    std::vector<std::size_t> order(N);
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return F.degree(a) > F.degree(b); });

    std::vector<SupportSet> out(N);
    for (std::size_t i : order) {
        out[i].index = i;
        for (std::size_t j = 0; j < N; ++j) {
            if (E(j, i).empty()) continue;
            if (adjacent_only && F.degree(j) != F.degree(i) + 1) continue;
            for (const auto& m : E(j, i))
                for (const auto& sigma : out[j].simplices) {
                    Simplex s{P[i]};
                    for (const auto& v : sigma) s.push_back(v + m);
                    out[i].simplices.insert(std::move(s));
                }
        }
        if (out[i].simplices.empty()) out[i].simplices.insert(Simplex{P[i]});
    }
    return out;
}

/// All faces of all simplices as sorted vertex sets. Two simplex collections
/// with equal closures have equal unions.
inline std::set<Simplex> face_closure(const std::set<Simplex>& simplices) {
    std::set<Simplex> out;
    for (const auto& s : simplices) {
        Simplex verts = s;
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        const std::size_t k = verts.size();
        if (k >= 63) throw std::length_error("face_closure: simplex too large");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            Simplex f;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::uint64_t{1} << b)) f.push_back(verts[b]);
            out.insert(std::move(f));
        }
    }
    return out;
}

inline bool same_point_sets(const std::vector<SupportSet>& a, const std::vector<SupportSet>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (face_closure(a[i].simplices) != face_closure(b[i].simplices)) return false;
    return true;
}

/// Whether the images in T^n of the recursively built S_i make up exactly
/// the simplices of X(F), compared as unordered simplices mod Z^n.
inline bool support_equals_T(const FreeComplex& F, const Placement& P) {
    std::set<Simplex> from_S;
    for (const auto& S : build_S_recursive(F, P))
        for (const auto& f : face_closure(S.simplices)) from_S.insert(TorusSimplex::unordered_key(f));
    std::set<Simplex> from_X;
    for (const auto& s : build_X(F, P).all_simplices()) from_X.insert(s.unordered_key());
    return from_S == from_X;
}

// --- immersion and embedding -------------------------------------------------

namespace detail {

inline unsigned thread_count() {
    if (const char* env = std::getenv("COAMOEBA_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

/// Smallest index in [0, count) where `pred` holds, or count.
template <typename Pred>
std::size_t find_first(std::size_t count, const Pred& pred) {
    unsigned threads = std::min<std::size_t>(thread_count(), std::max<std::size_t>(count, 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return count;
    }
    std::atomic<std::size_t> best{count};
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count || i >= best.load()) return;
                if (pred(i)) {
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        });
    for (auto& th : pool) th.join();
    return best.load();
}

inline bool lexicographically_positive(const Lattice& m) {
    for (auto v : m)
        if (v != 0) return v > 0;
    return false;
}

}  // namespace detail

struct ImmersionWitness {
    TorusSimplex simplex;
    Lattice translation;
    Point point;  // common relative-interior point of the lift and its translate
};

struct ImmersionReport {
    bool immersed = true;
    std::vector<TorusSimplex> degenerate;  // affinely dependent, not tested
    std::optional<ImmersionWitness> witness;
};

inline ImmersionReport check_immersed(const SimplicialSet& X) {
    ImmersionReport report;
    std::vector<TorusSimplex> tested;
    for (std::size_t k = 1; k < X.level_count(); ++k)
        for (const auto& [s, prov] : X.level(k)) {
            if (s.degenerate())
                report.degenerate.push_back(s);
            else
                tested.push_back(s);
        }
    std::vector<std::pair<std::size_t, Lattice>> tasks;
    for (std::size_t t = 0; t < tested.size(); ++t) {
        Box b = bounding_box(tested[t].vertices());
        for (auto& m : overlapping_translations(b, b))
            if (detail::lexicographically_positive(m)) tasks.emplace_back(t, std::move(m));
    }
    std::size_t hit = detail::find_first(tasks.size(), [&](std::size_t i) {
        const auto& s = tested[tasks[i].first].vertices();
        return relative_interiors_intersect(s, translated(s, tasks[i].second));
    });
    if (hit < tasks.size()) {
        const auto& s = tested[tasks[hit].first];
        Point p;
        relative_interiors_intersect(s.vertices(), translated(s.vertices(), tasks[hit].second), &p);
        report.immersed = false;
        report.witness = ImmersionWitness{s, tasks[hit].second, p};
    }
    return report;
}

inline bool is_immersed(const SimplicialSet& X) { return check_immersed(X).immersed; }

struct EmbeddingWitness {
    TorusSimplex first, second;
    Lattice translation;  // applied to `second`
    Point point;
};

struct EmbeddingReport {
    bool embedded = true;
    ImmersionReport immersion;
    std::optional<EmbeddingWitness> witness;
};

/// Immersion plus pairwise disjointness of the open images of distinct
/// simplices (all dimensions, degenerate ones via their affine hulls).
inline EmbeddingReport check_embedded(const SimplicialSet& X) {
    EmbeddingReport report;
    report.immersion = check_immersed(X);
    if (!report.immersion.immersed) {
        report.embedded = false;
        return report;
    }
    auto all = X.all_simplices();
    std::vector<Box> boxes;
    for (const auto& s : all) boxes.push_back(bounding_box(s.vertices()));
    std::vector<std::tuple<std::size_t, std::size_t, Lattice>> tasks;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            for (auto& m : overlapping_translations(boxes[a], boxes[b])) tasks.emplace_back(a, b, std::move(m));
    std::size_t hit = detail::find_first(tasks.size(), [&](std::size_t i) {
        const auto& [a, b, m] = tasks[i];
        return relative_interiors_intersect(all[a].vertices(), translated(all[b].vertices(), m));
    });
    if (hit < tasks.size()) {
        const auto& [a, b, m] = tasks[hit];
        Point p;
        relative_interiors_intersect(all[a].vertices(), translated(all[b].vertices(), m), &p);
        report.embedded = false;
        report.witness = EmbeddingWitness{all[a], all[b], m, p};
    }
    return report;
}

inline bool is_embedded(const SimplicialSet& X) { return check_embedded(X).embedded; }

// --- generic perturbation ------------------------------------------------------

/// Adds r / D to every coordinate, r uniform in [-h, h] with h = max(1, D / 16),
/// drawn from a seeded 64-bit Mersenne twister. Points that land on an
/// earlier point modulo Z^n are redrawn.
inline Placement perturb_generic(const Placement& P, std::int64_t denominator, std::uint64_t seed) {
    if (denominator < 2) throw std::invalid_argument("perturb: denominator must be at least 2");
    std::mt19937_64 rng(seed);
    const std::int64_t h = std::max<std::int64_t>(1, denominator / 16);
    const std::uint64_t width = static_cast<std::uint64_t>(2 * h + 1);
    const Rat D(static_cast<long long>(denominator));
    Placement out;
    for (const auto& x : P) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 1000) throw std::runtime_error("perturb: could not separate points modulo Z^n");
            Point y = x;
            for (auto& c : y) {
                auto r = static_cast<std::int64_t>(rng() % width) - h;
                c += Rat(static_cast<long long>(r)) / D;
            }
            bool collides = false;
            for (const auto& z : out)
                if (congruent_mod_lattice(y, z)) collides = true;
            if (!collides) {
                out.push_back(std::move(y));
                break;
            }
        }
    }
    return out;
}

inline bool distinct_mod_lattice(const Placement& P) {
    for (std::size_t a = 0; a < P.size(); ++a)
        for (std::size_t b = a + 1; b < P.size(); ++b)
            if (congruent_mod_lattice(P[a], P[b])) return false;
    return true;
}

}  // namespace coamoeba
