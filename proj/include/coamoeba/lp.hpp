#pragma once

// Exact rational linear programming: maximize c.x subject to A x = b, x >= 0.
// Dense two-phase tableau simplex with Bland's rule, so it always terminates.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "linear_algebra.hpp"

namespace coamoeba {

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rat value;
    std::vector<Rat> x;

    bool feasible() const noexcept { return status != Status::Infeasible; }
};

namespace detail {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : t_(rows, cols + 1), obj_(cols + 1, Rat(0)), basis_(rows) {}

    Rat& at(std::size_t r, std::size_t c) { return t_(r, c); }
    Rat& rhs(std::size_t r) { return t_(r, cols()); }
    std::size_t rows() const { return t_.rows(); }
    std::size_t cols() const { return t_.cols() - 1; }
    std::vector<std::size_t>& basis() { return basis_; }

    /// Reduced costs for maximizing c over the current basis.
    void set_objective(const std::vector<Rat>& c) {
        for (std::size_t j = 0; j <= cols(); ++j) obj_[j] = j < cols() ? c[j] : Rat(0);
        for (std::size_t r = 0; r < rows(); ++r) {
            const Rat& cb = c[basis_[r]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= cols(); ++j) obj_[j] -= cb * t_(r, j);
        }
    }

    /// Objective value of the current basic solution.
    Rat value() const { return -obj_[cols()]; }

    /// Runs simplex iterations over columns < `allowed`. Returns false if unbounded.
    bool optimize(std::size_t allowed) {
        while (true) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j)
                if (obj_[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == allowed) return true;
            std::size_t leave = rows();
            Rat best;
            for (std::size_t r = 0; r < rows(); ++r) {
                if (t_(r, enter) <= 0) continue;
                Rat ratio = t_(r, cols()) / t_(r, enter);
                if (leave == rows() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == rows()) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rat inv = 1 / t_(r, c);
        for (std::size_t j = 0; j <= cols(); ++j) t_(r, j) *= inv;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || t_(i, c) == 0) continue;
            Rat f = t_(i, c);
            for (std::size_t j = 0; j <= cols(); ++j) t_(i, j) -= f * t_(r, j);
        }
        if (obj_[c] != 0) {
            Rat f = obj_[c];
            for (std::size_t j = 0; j <= cols(); ++j) obj_[j] -= f * t_(r, j);
        }
        basis_[r] = c;
    }

private:
    RatMatrix t_;
    std::vector<Rat> obj_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

inline LpResult lp_maximize(const RatMatrix& A, const std::vector<Rat>& b, const std::vector<Rat>& c) {
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m || c.size() != n) throw std::invalid_argument("lp_maximize: shape mismatch");

    // Phase one: artificial variables n..n+m-1, maximize minus their sum.
    detail::Tableau tab(m, n + m);
    for (std::size_t r = 0; r < m; ++r) {
        bool flip = b[r] < 0;
        for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = flip ? Rat(-A(r, j)) : A(r, j);
        tab.at(r, n + r) = 1;
        tab.rhs(r) = flip ? Rat(-b[r]) : b[r];
        tab.basis()[r] = n + r;
    }
    std::vector<Rat> phase1(n + m, Rat(0));
    for (std::size_t j = n; j < n + m; ++j) phase1[j] = -1;
    tab.set_objective(phase1);
    tab.optimize(n + m);

    LpResult result;
    if (tab.value() != 0) return result;

    // Drive remaining artificials out of the basis where possible; rows where
    // that fails are redundant and stay pinned at zero.
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis()[r] < n) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (tab.at(r, j) != 0) {
                tab.pivot(r, j);
                break;
            }
    }

    std::vector<Rat> phase2(n + m, Rat(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    tab.set_objective(phase2);
    if (!tab.optimize(n)) {
        result.status = LpResult::Status::Unbounded;
        return result;
    }
    result.status = LpResult::Status::Optimal;
    result.value = tab.value();
    result.x.assign(n, Rat(0));
    for (std::size_t r = 0; r < m; ++r)
        if (tab.basis()[r] < n) result.x[tab.basis()[r]] = tab.rhs(r);
    return result;
}

}  // namespace coamoeba
