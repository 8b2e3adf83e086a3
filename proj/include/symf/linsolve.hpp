#pragma once

#include <vector>

#include "symf/tpoly.hpp"

namespace symf {

// Exact solver for A x = b over Q[t], A given by columns (m rows, n <= m
// columns, columns linearly independent over Q(t)).
//
// Forward elimination is fraction-free (Bareiss), done once at construction;
// each solve replays the recorded row operations on the right-hand side, so
// solving many targets against one basis costs O(n^2) polynomial ops each.
class ExactSolver {
  public:
    explicit ExactSolver(const std::vector<std::vector<QtPoly>>& columns);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    // Throws Inconsistent if target is outside the span,
    // NotPolynomial if a coordinate is not in Z[t].
    std::vector<TPoly> solve(const std::vector<QtPoly>& target) const;

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<size_t> row_order_;              // permutation applied before elimination
    std::vector<std::vector<QtPoly>> reduced_;   // matrix after full forward elimination
    // multipliers_[k][i] is the entry that was eliminated from row i at step k
    std::vector<std::vector<QtPoly>> multipliers_;
    std::vector<QtPoly> pivots_;                 // pivots_[k] = reduced_[k][k]
};

std::vector<TPoly> solve_exact_linear_system(const std::vector<std::vector<QtPoly>>& columns,
                                             const std::vector<QtPoly>& target);

}  // namespace symf
