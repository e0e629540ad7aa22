#pragma once

// Exponent sets E_ij of a based free complex, the index/exponent chains they
// generate, and equivalence of discrete information up to relabeling and
// per-index lattice translation.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "free_complex.hpp"

namespace coamoeba {

using ExponentSet = std::set<Lattice>;

/// E(i, j) for all index pairs; empty unless deg(i) > deg(j).
class ExponentTable {
public:
    ExponentTable() = default;
    ExponentTable(std::size_t n, std::size_t size) : n_(n), size_(size), entries_(size * size) {}

    std::size_t dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return size_; }

    const ExponentSet& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * size_ + j); }
    ExponentSet& operator()(std::size_t i, std::size_t j) { return entries_.at(i * size_ + j); }

    friend bool operator==(const ExponentTable&, const ExponentTable&) = default;

private:
    std::size_t n_ = 0;
    std::size_t size_ = 0;
    std::vector<ExponentSet> entries_;
};

struct DiscreteInfo {
    std::vector<int> degrees;
    ExponentTable exponents;

    std::size_t size() const noexcept { return degrees.size(); }
};

/// A chain (i_0, ..., i_k; m_1, ..., m_k) with m_l in E(i_l, i_{l-1}).
struct Chain {
    std::vector<std::size_t> indices;
    std::vector<Lattice> steps;

    std::size_t length() const noexcept { return steps.size(); }

    /// Partial sums m_1 + ... + m_l, starting from the zero vector.
    std::vector<Lattice> offsets(std::size_t n) const {
        std::vector<Lattice> out{zero_lattice(n)};
        for (const auto& m : steps) out.push_back(out.back() + m);
        return out;
    }

    friend auto operator<=>(const Chain&, const Chain&) = default;
};

inline ExponentTable exponent_table(const FreeComplex& F) {
    const std::size_t N = F.size();
    ExponentTable E(F.dimension(), N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (F.degree(i) == F.degree(j) + 1) E(i, j) = F.entry(i, j).support();

    // E(i, j) at gap g is the sumset over intermediate l of degree deg(j) + 1.
    int span = -F.min_degree();
    for (int gap = 2; gap <= span; ++gap) {
        for (std::size_t j = 0; j < N; ++j) {
            for (std::size_t i = 0; i < N; ++i) {
                if (F.degree(i) != F.degree(j) + gap) continue;
                ExponentSet out;
                for (std::size_t l : F.indices_in_degree(F.degree(j) + 1))
                    for (const auto& m1 : E(l, j))
                        for (const auto& rest : E(i, l)) out.insert(m1 + rest);
                E(i, j) = std::move(out);
            }
        }
    }
    return E;
}

inline DiscreteInfo discrete_info(const FreeComplex& F) { return {F.degrees(), exponent_table(F)}; }

namespace detail {

inline std::vector<std::vector<std::size_t>> successors(const ExponentTable& E) {
    std::vector<std::vector<std::size_t>> next(E.size());
    for (std::size_t j = 0; j < E.size(); ++j)
        for (std::size_t i = 0; i < E.size(); ++i)
            if (!E(i, j).empty()) next[j].push_back(i);
    return next;
}

template <typename Visit>
void extend_chains(const ExponentTable& E, const std::vector<std::vector<std::size_t>>& next,
                   Chain& chain, std::size_t remaining, Visit& visit) {
    if (remaining == 0) {
        visit(chain);
        return;
    }
    std::size_t last = chain.indices.back();
    for (std::size_t i : next[last]) {
        chain.indices.push_back(i);
        for (const auto& m : E(i, last)) {
            chain.steps.push_back(m);
            extend_chains(E, next, chain, remaining - 1, visit);
            chain.steps.pop_back();
        }
        chain.indices.pop_back();
    }
}

}  // namespace detail

/// Calls `visit(const Chain&)` for every chain of length k starting at `start`.
template <typename Visit>
void for_each_chain_from(const ExponentTable& E, std::size_t start, std::size_t k, Visit&& visit) {
    auto next = detail::successors(E);
    Chain chain{{start}, {}};
    detail::extend_chains(E, next, chain, k, visit);
}

template <typename Visit>
void for_each_chain(const ExponentTable& E, std::size_t k, Visit&& visit) {
    auto next = detail::successors(E);
    for (std::size_t start = 0; start < E.size(); ++start) {
        Chain chain{{start}, {}};
        detail::extend_chains(E, next, chain, k, visit);
    }
}

inline std::vector<Chain> chains(const ExponentTable& E, std::size_t k) {
    std::vector<Chain> out;
    for_each_chain(E, k, [&](const Chain& c) { out.push_back(c); });
    return out;
}

/// Longest k with a chain of length k; 0 when every E is empty.
inline std::size_t max_chain_length(const ExponentTable& E) {
    std::vector<std::size_t> longest(E.size(), 0);
    // Chains strictly increase degree, so relaxation terminates after |I| rounds.
    for (std::size_t round = 0; round < E.size(); ++round)
        for (std::size_t j = 0; j < E.size(); ++j)
            for (std::size_t i = 0; i < E.size(); ++i)
                if (!E(i, j).empty()) longest[j] = std::max(longest[j], longest[i] + 1);
    return E.size() == 0 ? 0 : *std::max_element(longest.begin(), longest.end());
}

// --- equivalence -------------------------------------------------------------

namespace detail {

inline ExponentSet shift(const ExponentSet& s, const Lattice& t) {
    ExponentSet out;
    for (const auto& m : s) out.insert(m + t);
    return out;
}

/// Translation-invariant shape of a set: subtract its least element.
inline ExponentSet normalized(const ExponentSet& s) {
    if (s.empty()) return s;
    return shift(s, -*s.begin());
}

struct IndexSignature {
    int degree;
    std::vector<std::tuple<int, int, ExponentSet>> neighbours;  // (deg, direction, shape)
    friend auto operator<=>(const IndexSignature&, const IndexSignature&) = default;
};

inline IndexSignature signature(const DiscreteInfo& d, std::size_t i) {
    IndexSignature s{d.degrees[i], {}};
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (!d.exponents(i, j).empty()) s.neighbours.emplace_back(d.degrees[j], 0, normalized(d.exponents(i, j)));
        if (!d.exponents(j, i).empty()) s.neighbours.emplace_back(d.degrees[j], 1, normalized(d.exponents(j, i)));
    }
    std::sort(s.neighbours.begin(), s.neighbours.end());
    return s;
}

class EquivalenceSearch {
public:
    EquivalenceSearch(const DiscreteInfo& a, const DiscreteInfo& b) : a_(a), b_(b) {}

    bool run() {
        const std::size_t N = a_.size();
        if (N != b_.size()) return false;
        if (N == 0) return true;
        if (a_.exponents.dimension() != b_.exponents.dimension()) return false;
        n_ = a_.exponents.dimension();

        std::vector<IndexSignature> sig_b;
        for (std::size_t i = 0; i < N; ++i) sig_b.push_back(signature(b_, i));
        candidates_.resize(N);
        for (std::size_t i = 0; i < N; ++i) {
            auto sa = signature(a_, i);
            for (std::size_t j = 0; j < N; ++j)
                if (sig_b[j] == sa) candidates_[i].push_back(j);
            if (candidates_[i].empty()) return false;
        }

        // Breadth-first order so each index after a component root has an
        // already-placed neighbour that pins its translation.
        std::vector<bool> seen(N, false);
        parent_.assign(N, N);
        for (std::size_t root = 0; root < N; ++root) {
            if (seen[root]) continue;
            std::queue<std::size_t> q;
            q.push(root);
            seen[root] = true;
            while (!q.empty()) {
                std::size_t u = q.front();
                q.pop();
                order_.push_back(u);
                for (std::size_t v = 0; v < N; ++v) {
                    if (seen[v]) continue;
                    if (a_.exponents(u, v).empty() && a_.exponents(v, u).empty()) continue;
                    seen[v] = true;
                    parent_[v] = u;
                    q.push(v);
                }
            }
        }
        image_.assign(N, N);
        used_.assign(N, false);
        translation_.assign(N, zero_lattice(n_));
        return place(0);
    }

private:
    bool place(std::size_t pos) {
        if (pos == order_.size()) return true;
        const std::size_t i = order_[pos];
        for (std::size_t cand : candidates_[i]) {
            if (used_[cand]) continue;
            Lattice t;
            if (!pin_translation(i, cand, t)) continue;
            image_[i] = cand;
            translation_[i] = t;
            if (consistent(pos)) {
                used_[cand] = true;
                if (place(pos + 1)) return true;
                used_[cand] = false;
            }
            image_[i] = a_.size();
        }
        return false;
    }

    bool pin_translation(std::size_t i, std::size_t cand, Lattice& t) const {
        std::size_t p = parent_[i];
        if (p == a_.size()) {
            t = zero_lattice(n_);
            return true;
        }
        std::size_t bp = image_[p];
        if (!a_.exponents(i, p).empty()) {
            const auto& eb = b_.exponents(cand, bp);
            if (eb.empty()) return false;
            t = translation_[p] + (*eb.begin() - *a_.exponents(i, p).begin());
        } else {
            const auto& eb = b_.exponents(bp, cand);
            if (eb.empty()) return false;
            t = translation_[p] - (*eb.begin() - *a_.exponents(p, i).begin());
        }
        return true;
    }

    bool consistent(std::size_t pos) const {
        const std::size_t i = order_[pos];
        for (std::size_t q = 0; q <= pos; ++q) {
            const std::size_t j = order_[q];
            Lattice d = translation_[i] - translation_[j];
            if (b_.exponents(image_[i], image_[j]) != shift(a_.exponents(i, j), d)) return false;
            if (b_.exponents(image_[j], image_[i]) != shift(a_.exponents(j, i), -d)) return false;
        }
        return true;
    }

    const DiscreteInfo& a_;
    const DiscreteInfo& b_;
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> candidates_;
    std::vector<std::size_t> order_, parent_, image_;
    std::vector<bool> used_;
    std::vector<Lattice> translation_;
};

}  // namespace detail

inline constexpr std::size_t kMaxEquivalenceIndices = 64;

/// True iff a and b differ by a degree-preserving relabeling of indices
/// composed with per-index translations (E_ij + t_i - t_j).
inline bool discrete_equivalent(const DiscreteInfo& a, const DiscreteInfo& b) {
    if (a.size() > kMaxEquivalenceIndices || b.size() > kMaxEquivalenceIndices)
        throw std::length_error("discrete_equivalent: more than 64 indices");
    return detail::EquivalenceSearch(a, b).run();
}

}  // namespace coamoeba
