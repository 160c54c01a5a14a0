#include "treemod/simplex.hpp"

#include "treemod/error.hpp"

namespace treemod {

namespace {
constexpr int kDegenerateRunBeforeBland = 30;
}

ExactSimplex::ExactSimplex(std::vector<Rational> rhs) : rhs_(std::move(rhs)) {
    for (const auto& b : rhs_) {
        if (b < 0) throw Error(ErrorKind::InvalidArgument, "simplex rhs must be nonnegative");
    }
    basis_.assign(rhs_.size(), -1);
}

int ExactSimplex::add_column(SparseColumn column, Rational cost) {
    cols_.push_back(std::move(column));
    cost_.push_back(std::move(cost));
    allowed_.push_back(true);
    position_.push_back(-1);
    return columns() - 1;
}

void ExactSimplex::set_identity_basis(const std::vector<int>& identity_columns) {
    const int m = rows();
    binv_.assign(m, std::vector<Rational>(m, 0));
    xb_ = rhs_;
    std::fill(position_.begin(), position_.end(), -1);
    for (int i = 0; i < m; ++i) {
        binv_[i][i] = 1;
        basis_[i] = identity_columns[i];
        position_[identity_columns[i]] = i;
    }
}

std::vector<Rational> ExactSimplex::ftran(int column) const {
    const int m = rows();
    std::vector<Rational> d(m, 0);
    for (const auto& [row, a] : cols_[column]) {
        for (int i = 0; i < m; ++i) {
            if (binv_[i][row] != 0) d[i] += binv_[i][row] * a;
        }
    }
    return d;
}

std::vector<Rational> ExactSimplex::duals() const {
    const int m = rows();
    std::vector<Rational> y(m, 0);
    for (int i = 0; i < m; ++i) {
        const Rational& cb = cost_[basis_[i]];
        if (cb == 0) continue;
        for (int k = 0; k < m; ++k) {
            if (binv_[i][k] != 0) y[k] += cb * binv_[i][k];
        }
    }
    return y;
}

Rational ExactSimplex::reduced_cost(int column, const std::vector<Rational>& y) const {
    Rational r = cost_[column];
    for (const auto& [row, a] : cols_[column]) r -= y[row] * a;
    return r;
}

void ExactSimplex::pivot(int entering, int row, const std::vector<Rational>& direction) {
    const int m = rows();
    const Rational piv = direction[row];
    for (auto& v : binv_[row]) {
        if (v != 0) v /= piv;
    }
    xb_[row] /= piv;
    for (int i = 0; i < m; ++i) {
        if (i == row || direction[i] == 0) continue;
        const Rational f = direction[i];
        for (int k = 0; k < m; ++k) {
            if (binv_[row][k] != 0) binv_[i][k] -= f * binv_[row][k];
        }
        xb_[i] -= f * xb_[row];
    }
    position_[basis_[row]] = -1;
    basis_[row] = entering;
    position_[entering] = row;
    ++pivots_;
}

LpStatus ExactSimplex::maximize(std::size_t max_pivots) {
    const int m = rows();
    int degenerate_run = 0;
    for (std::size_t iter = 0; iter < max_pivots; ++iter) {
        const bool bland = degenerate_run >= kDegenerateRunBeforeBland;
        const auto y = duals();
        int entering = -1;
        Rational best = 0;
        for (int j = 0; j < columns(); ++j) {
            if (position_[j] >= 0 || !allowed_[j]) continue;
            Rational r = reduced_cost(j, y);
            if (r <= 0) continue;
            if (bland) {
                entering = j;
                break;
            }
            if (entering < 0 || r > best) {
                entering = j;
                best = r;
            }
        }
        if (entering < 0) return LpStatus::Optimal;

        const auto d = ftran(entering);
        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            if (d[i] <= 0) continue;
            Rational ratio = xb_[i] / d[i];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return LpStatus::Unbounded;
        degenerate_run = best_ratio == 0 ? degenerate_run + 1 : 0;
        pivot(entering, leave, d);
    }
    return LpStatus::IterationLimit;
}

Rational ExactSimplex::objective() const {
    Rational obj = 0;
    for (int i = 0; i < rows(); ++i) obj += cost_[basis_[i]] * xb_[i];
    return obj;
}

Rational ExactSimplex::value(int column) const {
    return position_[column] >= 0 ? xb_[position_[column]] : Rational(0);
}

std::vector<Rational> ExactSimplex::values() const {
    std::vector<Rational> x(columns(), 0);
    for (int i = 0; i < rows(); ++i) x[basis_[i]] = xb_[i];
    return x;
}

std::vector<int> ExactSimplex::pivot_out(const std::vector<bool>& remove) {
    std::vector<int> redundant;
    for (int i = 0; i < rows(); ++i) {
        if (!remove[basis_[i]]) continue;
        int entering = -1;
        std::vector<Rational> d;
        for (int j = 0; j < columns() && entering < 0; ++j) {
            if (position_[j] >= 0 || !allowed_[j] || remove[j]) continue;
            // Row i of B^{-1} A_j.
            Rational entry = 0;
            for (const auto& [row, a] : cols_[j]) entry += binv_[i][row] * a;
            if (entry != 0) {
                entering = j;
                d = ftran(j);
            }
        }
        if (entering < 0) {
            redundant.push_back(i);
            continue;
        }
        // The leaving variable sits at zero, so any nonzero pivot keeps feasibility.
        pivot(entering, i, d);
    }
    return redundant;
}

LpResult solve_lp(int rows, const std::vector<SparseColumn>& columns, const std::vector<Rational>& b,
                  const std::vector<Rational>& c, std::size_t max_pivots) {
    std::vector<Rational> rhs(b);
    std::vector<int> sign(rows, 1);
    for (int i = 0; i < rows; ++i) {
        if (rhs[i] < 0) {
            sign[i] = -1;
            rhs[i] = -rhs[i];
        }
    }
    ExactSimplex lp(rhs);
    const int n = static_cast<int>(columns.size());
    for (int j = 0; j < n; ++j) {
        SparseColumn col = columns[j];
        for (auto& [row, a] : col) {
            if (sign[row] < 0) a = -a;
        }
        lp.add_column(std::move(col), 0);
    }
    std::vector<int> artificial(rows);
    std::vector<bool> is_artificial(n + rows, false);
    for (int i = 0; i < rows; ++i) {
        artificial[i] = lp.add_column({{i, Rational(1)}}, -1);
        is_artificial[artificial[i]] = true;
    }
    lp.set_identity_basis(artificial);

    auto status = lp.maximize(max_pivots);
    if (status == LpStatus::IterationLimit) return {status, 0, {}};
    if (lp.objective() < 0) return {LpStatus::Infeasible, 0, {}};

    for (int i = 0; i < rows; ++i) lp.set_allowed(artificial[i], false);
    lp.pivot_out(is_artificial);
    for (int i = 0; i < rows; ++i) lp.set_cost(artificial[i], 0);
    for (int j = 0; j < n; ++j) lp.set_cost(j, c[j]);

    status = lp.maximize(max_pivots);
    if (status != LpStatus::Optimal) return {status, 0, {}};
    auto x = lp.values();
    x.resize(n);
    return {LpStatus::Optimal, lp.objective(), std::move(x)};
}

}  // namespace treemod
