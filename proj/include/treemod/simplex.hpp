#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "treemod/rational.hpp"

namespace treemod {

using SparseColumn = std::vector<std::pair<int, Rational>>;

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

/// Revised primal simplex over exact rationals with an explicit basis
/// inverse. Maximizes c^T x subject to A x = b, x >= 0, starting from a
/// caller-supplied identity basis (slack or artificial columns), so b must be
/// nonnegative. Columns can be appended between solves; the current basis
/// stays primal feasible, which gives warm starts for column generation.
///
/// Pricing is Dantzig's rule, falling back to Bland's rule after a run of
/// degenerate pivots so the method cannot cycle.
class ExactSimplex {
  public:
    explicit ExactSimplex(std::vector<Rational> rhs);

    int rows() const { return static_cast<int>(rhs_.size()); }
    int columns() const { return static_cast<int>(cols_.size()); }

    int add_column(SparseColumn column, Rational cost);
    void set_cost(int column, Rational cost) { cost_[column] = std::move(cost); }
    /// Excluded columns never enter the basis.
    void set_allowed(int column, bool allowed) { allowed_[column] = allowed; }

    /// `identity_columns[i]` must be the unit vector of row i.
    void set_identity_basis(const std::vector<int>& identity_columns);

    LpStatus maximize(std::size_t max_pivots = 1000000);

    Rational objective() const;
    Rational value(int column) const;
    std::vector<Rational> values() const;
    /// Simplex multipliers y = c_B^T B^{-1}, one per row.
    std::vector<Rational> duals() const;
    bool is_basic(int column) const { return position_[column] >= 0; }
    /// Column basic in `row`.
    int basic_column(int row) const { return basis_[row]; }

    /// Pivots basic columns listed in `remove` out of the basis where some
    /// allowed nonbasic column has a nonzero entry in that row. Returns the
    /// rows where this was impossible (redundant rows).
    std::vector<int> pivot_out(const std::vector<bool>& remove);

    std::size_t pivots() const { return pivots_; }

  private:
    std::vector<Rational> ftran(int column) const;
    Rational reduced_cost(int column, const std::vector<Rational>& y) const;
    void pivot(int entering, int row, const std::vector<Rational>& direction);

    std::vector<Rational> rhs_;
    std::vector<SparseColumn> cols_;
    std::vector<Rational> cost_;
    std::vector<bool> allowed_;
    std::vector<int> basis_;     // row -> column
    std::vector<int> position_;  // column -> row or -1
    std::vector<std::vector<Rational>> binv_;
    std::vector<Rational> xb_;
    std::size_t pivots_ = 0;
};

struct LpResult {
    LpStatus status;
    Rational objective;
    std::vector<Rational> x;
};

/// Maximizes c^T x subject to A x = b, x >= 0 (two-phase). A is given by
/// sparse columns over `rows` rows; b may have any sign.
LpResult solve_lp(int rows, const std::vector<SparseColumn>& columns, const std::vector<Rational>& b,
                  const std::vector<Rational>& c, std::size_t max_pivots = 1000000);

}  // namespace treemod
