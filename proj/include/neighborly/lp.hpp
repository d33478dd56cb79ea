#pragma once

#include <vector>

#include "neighborly/common.hpp"
#include "neighborly/linalg.hpp"

namespace neighborly {

/// Exact two-phase primal simplex over the rationals, Bland's rule, so every
/// run terminates and identical inputs pivot identically. Problems here are
/// tiny (tens of variables), so there is no scaling, no warm starts, nothing
/// clever: pivot arithmetic is exact and that is the point.
struct LpSolution {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  Rat value;             // objective at the optimum
  std::vector<Rat> x;    // primal solution (original variables only)

  bool feasible() const { return status != Status::infeasible; }
};

namespace detail {

class SimplexTableau {
 public:
  // A x = b, x >= 0; rows are normalized so b >= 0, then one artificial
  // variable is appended per row.
  SimplexTableau(const RatMat& a, const std::vector<Rat>& b)
      : m_(a.rows()), n_(a.cols()) {
    if (static_cast<int>(b.size()) != m_) throw input_error("lp: rhs size mismatch");
    rows_.assign(m_, std::vector<Rat>(static_cast<std::size_t>(n_ + m_) + 1));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      bool flip = b[i] < 0;
      for (int j = 0; j < n_; ++j) rows_[i][j] = flip ? -a.at(i, j) : a.at(i, j);
      rows_[i][n_ + i] = 1;
      rows_[i].back() = flip ? -b[i] : b[i];
      basis_[i] = n_ + i;
    }
  }

  /// Minimizes the artificial sum. Returns true when it reaches zero.
  bool phase_one() {
    std::vector<Rat> cost(static_cast<std::size_t>(n_ + m_));
    for (int j = 0; j < n_ + m_; ++j) {
      Rat s = 0;
      for (int i = 0; i < m_; ++i)
        if (basis_[i] >= n_) s += rows_[i][j];
      if (j >= n_ && basis_contains(j)) s = 0;
      cost[j] = s;
    }
    // reduced cost of basic columns is zero by construction except we built
    // them directly; normalize artificial basics
    run(cost, /*restrict_to=*/n_ + m_);
    Rat artificial_sum = 0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= n_) artificial_sum += rows_[i].back();
    if (artificial_sum != 0) return false;
    purge_artificials();
    return true;
  }

  /// Maximizes c over the original variables; call only after phase_one.
  LpSolution phase_two(const std::vector<Rat>& c) {
    std::vector<Rat> cost(static_cast<std::size_t>(n_ + m_));
    for (int j = 0; j < n_; ++j) {
      Rat r = c[j];
      for (int i = 0; i < m_; ++i)
        if (basis_[i] < n_ && c[basis_[i]] != 0) r -= c[basis_[i]] * rows_[i][j];
      cost[j] = r;
    }
    bool bounded = run(cost, /*restrict_to=*/n_);
    LpSolution sol;
    if (!bounded) {
      sol.status = LpSolution::Status::unbounded;
      return sol;
    }
    sol.status = LpSolution::Status::optimal;
    sol.x.assign(n_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) sol.x[basis_[i]] = rows_[i].back();
    sol.value = 0;
    for (int j = 0; j < n_; ++j) sol.value += c[j] * sol.x[j];
    return sol;
  }

 private:
  bool basis_contains(int j) const {
    for (int b : basis_)
      if (b == j) return true;
    return false;
  }

  /// Bland iterations: entering column is the smallest index with positive
  /// reduced cost among columns < restrict_to, leaving row minimizes the
  /// ratio with ties broken by smallest basic index. Returns false on an
  /// unbounded ray.
  bool run(std::vector<Rat>& cost, int restrict_to) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < restrict_to; ++j) {
        if (cost[j] > 0 && !basis_contains(j)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rows_[i].back() / rows_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter, cost);
    }
  }

  void pivot(int row, int col, std::vector<Rat>& cost) {
    Rat inv = 1 / rows_[row][col];
    for (Rat& v : rows_[row]) v *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      Rat f = rows_[i][col];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[row][j];
    }
    if (cost[col] != 0) {
      Rat f = cost[col];
      for (int j = 0; j < n_ + m_; ++j) cost[j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  /// Pivots zero-valued artificial basics out; deletes redundant rows.
  void purge_artificials() {
    std::vector<Rat> nocost(static_cast<std::size_t>(n_ + m_));
    for (int i = static_cast<int>(basis_.size()) - 1; i >= 0; --i) {
      if (basis_[i] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col, nocost);
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
      }
    }
  }

  int m_;
  int n_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> basis_;
};

}  // namespace detail

/// max c.x subject to A x = b, x >= 0.
inline LpSolution lp_max_eq(const RatMat& a, const std::vector<Rat>& b,
                            const std::vector<Rat>& c) {
  if (static_cast<int>(c.size()) != a.cols()) throw input_error("lp: cost size mismatch");
  detail::SimplexTableau t(a, b);
  if (!t.phase_one()) return LpSolution{};
  return t.phase_two(c);
}

/// Feasibility of { A x = b, x >= 0 }.
inline bool lp_feasible_eq(const RatMat& a, const std::vector<Rat>& b) {
  detail::SimplexTableau t(a, b);
  return t.phase_one();
}

}  // namespace neighborly
