#pragma once

// Bounded sequences of based free modules over the Laurent ring, stored as
// Laurent-polynomial matrices per degree, plus the Koszul constructor.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace coamoeba {

/// Row-major; rows index I_{k+1}, columns index I_k.
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

inline PolyMatrix zero_matrix(std::size_t rows, std::size_t cols, std::size_t n) {
    return PolyMatrix(rows, std::vector<LaurentPoly>(cols, LaurentPoly(n)));
}

inline bool is_zero(const PolyMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

inline PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a[0].empty() ? 0 : a[0][0].dimension();
    std::size_t inner = b.size();
    if (a[0].size() != inner) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r = zero_matrix(a.size(), b[0].size(), n);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

/// The differential d^k is stored under key k. Degrees are at most zero and
/// degree zero is nonempty; d^2 = 0 is not required.
class FreeComplex {
public:
    FreeComplex(std::size_t n, std::vector<std::string> labels, std::vector<int> degrees,
                std::map<int, PolyMatrix> differentials, std::vector<std::string> variables = {})
        : n_(n),
          labels_(std::move(labels)),
          degrees_(std::move(degrees)),
          variables_(std::move(variables)) {
        if (labels_.size() != degrees_.size())
            throw std::invalid_argument("labels and degrees differ in length");
        if (variables_.empty()) variables_ = default_variables(n_);
        if (variables_.size() != n_) throw std::invalid_argument("variable count differs from n");
        if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
            throw std::invalid_argument("duplicate index label");
        bool has_zero = false;
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            if (degrees_[i] > 0) throw std::invalid_argument("index '" + labels_[i] + "' has positive degree");
            if (degrees_[i] == 0) has_zero = true;
            position_.push_back(by_degree_[degrees_[i]].size());
            by_degree_[degrees_[i]].push_back(i);
        }
        if (!has_zero) throw std::invalid_argument("no index in degree 0");

        for (auto& [k, mat] : differentials) {
            auto src = by_degree_.find(k);
            auto dst = by_degree_.find(k + 1);
            if (src == by_degree_.end() || dst == by_degree_.end()) {
                if (!is_zero(mat) && !mat.empty())
                    throw std::invalid_argument("nonzero differential d^" + std::to_string(k) +
                                                " touches an empty degree");
                continue;
            }
            check_shape(k, mat, dst->second.size(), src->second.size());
            differentials_[k] = std::move(mat);
        }
        for (const auto& [k, idx] : by_degree_) {
            auto dst = by_degree_.find(k + 1);
            if (dst != by_degree_.end() && !differentials_.count(k))
                differentials_[k] = zero_matrix(dst->second.size(), idx.size(), n_);
        }
    }

    std::size_t dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    int degree(std::size_t i) const { return degrees_.at(i); }
    int min_degree() const { return by_degree_.begin()->first; }

    std::size_t index_of(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw std::out_of_range("unknown index label '" + label + "'");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    /// I_k in document order; empty when the degree is absent.
    const std::vector<std::size_t>& indices_in_degree(int k) const {
        static const std::vector<std::size_t> empty;
        auto it = by_degree_.find(k);
        return it == by_degree_.end() ? empty : it->second;
    }

    std::set<int> degrees_present() const {
        std::set<int> s;
        for (const auto& [k, v] : by_degree_) s.insert(k);
        return s;
    }

    /// Position of index i within I_{deg(i)}.
    std::size_t position(std::size_t i) const { return position_.at(i); }

    bool has_differential(int k) const { return differentials_.count(k) != 0; }

    const PolyMatrix& differential(int k) const {
        auto it = differentials_.find(k);
        if (it == differentials_.end())
            throw std::out_of_range("missing degree: d^" + std::to_string(k) + " is not defined");
        return it->second;
    }

    const std::map<int, PolyMatrix>& differentials() const noexcept { return differentials_; }

    /// d^{deg j}_{ij}; zero unless deg(i) = deg(j) + 1.
    LaurentPoly entry(std::size_t i, std::size_t j) const {
        if (degree(i) != degree(j) + 1) return LaurentPoly(n_);
        return differential(degree(j))[position(i)][position(j)];
    }

private:
    void check_shape(int k, const PolyMatrix& mat, std::size_t rows, std::size_t cols) const {
        std::string name = "d^" + std::to_string(k);
        if (mat.size() != rows) throw std::invalid_argument(name + " has wrong row count");
        for (const auto& row : mat) {
            if (row.size() != cols) throw std::invalid_argument(name + " has wrong column count");
            for (const auto& e : row)
                if (e.dimension() != n_) throw std::invalid_argument(name + " entry has wrong dimension");
        }
    }

    std::size_t n_;
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::vector<std::string> variables_;
    std::map<int, std::vector<std::size_t>> by_degree_;
    std::vector<std::size_t> position_;
    std::map<int, PolyMatrix> differentials_;
};

/// d^{k+1} d^k with exact cancellation.
inline PolyMatrix compose_differentials(const FreeComplex& F, int k) {
    if (!F.has_differential(k) || !F.has_differential(k + 1))
        throw std::out_of_range("missing degree: cannot compose d^" + std::to_string(k + 1) +
                                " with d^" + std::to_string(k));
    return F.differential(k + 1) * F.differential(k);
}

inline bool is_cochain_complex(const FreeComplex& F) {
    for (const auto& [k, mat] : F.differentials())
        if (F.has_differential(k + 1) && !is_zero(compose_differentials(F, k))) return false;
    return true;
}

/// Koszul complex on r elements. The basis of degree -k is the k-subsets S of
/// {1..r} in lexicographic order, labelled by bitstrings; the entry from S to
/// S \ {s} is (-1)^{#{t in S : t < s}} f_s.
inline FreeComplex koszul(const std::vector<LaurentPoly>& polys, std::vector<std::string> variables = {}) {
    if (polys.empty()) throw std::invalid_argument("koszul: empty polynomial list");
    const std::size_t n = polys.front().dimension();
    for (const auto& p : polys)
        if (p.dimension() != n) throw std::invalid_argument("koszul: dimension mismatch");
    const std::size_t r = polys.size();
    if (r > 16) throw std::invalid_argument("koszul: too many polynomials");

    // Subsets of each size in lexicographic order of their sorted elements.
    std::vector<std::vector<std::vector<std::size_t>>> subsets(r + 1);
    for (std::size_t k = 0; k <= r; ++k) {
        std::vector<std::size_t> comb(k);
        for (std::size_t i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            subsets[k].push_back(comb);
            std::size_t i = k;
            while (i > 0 && comb[i - 1] == r - k + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    auto bitstring = [r](const std::vector<std::size_t>& s) {
        std::string b(r, '0');
        for (auto e : s) b[e] = '1';
        return b;
    };

    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::map<std::vector<std::size_t>, std::size_t> position;
    for (std::size_t k = r + 1; k-- > 0;) {
        for (std::size_t p = 0; p < subsets[k].size(); ++p) {
            labels.push_back(bitstring(subsets[k][p]));
            degrees.push_back(-static_cast<int>(k));
            position[subsets[k][p]] = p;
        }
    }

    std::map<int, PolyMatrix> diffs;
    for (std::size_t k = r; k >= 1; --k) {
        PolyMatrix d = zero_matrix(subsets[k - 1].size(), subsets[k].size(), n);
        for (std::size_t col = 0; col < subsets[k].size(); ++col) {
            const auto& S = subsets[k][col];
            for (std::size_t pos = 0; pos < S.size(); ++pos) {
                std::vector<std::size_t> T = S;
                T.erase(T.begin() + static_cast<std::ptrdiff_t>(pos));
                LaurentPoly entry = polys[S[pos]];
                if (pos % 2 == 1) entry = -entry;
                d[position.at(T)][col] = entry;
            }
        }
        diffs[-static_cast<int>(k)] = std::move(d);
    }
    return FreeComplex(n, std::move(labels), std::move(degrees), std::move(diffs), std::move(variables));
}

/// Rescales the i-th summand by z^m: entries in row i gain z^m, entries in
/// column i gain z^{-m}.
inline FreeComplex rescale_summand(const FreeComplex& F, std::size_t i, const Lattice& m) {
    std::map<int, PolyMatrix> diffs = F.differentials();
    int k = F.degree(i);
    if (auto it = diffs.find(k - 1); it != diffs.end())
        for (auto& e : it->second[F.position(i)]) e = e.shifted(m);
    if (auto it = diffs.find(k); it != diffs.end())
        for (auto& row : it->second) row[F.position(i)] = row[F.position(i)].shifted(-m);
    return FreeComplex(F.dimension(), F.labels(), F.degrees(), std::move(diffs), F.variables());
}

}  // namespace coamoeba
