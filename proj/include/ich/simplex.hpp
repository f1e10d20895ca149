#pragma once

// Exact rational LP solver for covering-style programs:
//
//     min c'x   subject to   A x >= b,  x >= 0.
//
// Dense two-phase primal simplex. Pivot choice is most-negative reduced
// cost with lowest-index tie-breaks; after a run of degenerate pivots the
// rule permanently drops to Bland's (lowest eligible index), which
// guarantees termination. Everything is exact, and every solve returns a
// dual vector so callers can certify optimality by strong duality.

#include <cstddef>
#include <vector>

#include "ich/rational.hpp"
#include "ich/util.hpp"

namespace ich {

struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;          // size num_vars
  std::vector<std::vector<Rational>> rows;  // each size num_vars
  std::vector<Rational> rhs;

  explicit LinearProgram(int nv = 0) : num_vars(nv), objective(nv) {}

  void add_row(std::vector<Rational> row, Rational b) {
    if ((int)row.size() != num_vars) throw error("LinearProgram: row size mismatch");
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  }
};

struct LpSolution {
  bool feasible = false;
  bool bounded = true;
  Rational value;
  std::vector<Rational> x;     // primal, size num_vars
  std::vector<Rational> dual;  // y >= 0, one entry per row
  long long pivots = 0;
};

namespace detail {

class SimplexTableau {
 public:
  explicit SimplexTableau(const LinearProgram& lp) : lp_(lp) {
    m_ = (int)lp.rows.size();
    nx_ = lp.num_vars;
    ns_ = m_;  // one surplus per row
    // Column layout: [vars | surplus | artificials | rhs].
    sigma_.assign(m_, 1);
    std::vector<int> art_rows;
    for (int i = 0; i < m_; ++i) {
      if (lp.rhs[i] < 0) sigma_[i] = -1;
      if (sigma_[i] == 1) art_rows.push_back(i);  // rhs >= 0: surplus enters at -1, need artificial
    }
    na_ = (int)art_rows.size();
    ncols_ = nx_ + ns_ + na_;
    tab_.assign(m_, std::vector<Rational>(ncols_ + 1));
    basis_.assign(m_, -1);
    int art = 0;
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < nx_; ++j) tab_[i][j] = sigma_[i] * lp.rows[i][j];
      tab_[i][nx_ + i] = Rational(-sigma_[i]);
      tab_[i][ncols_] = sigma_[i] * lp.rhs[i];
      if (sigma_[i] == -1) {
        basis_[i] = nx_ + i;  // surplus basic with positive coefficient
      } else {
        int aj = nx_ + ns_ + art;
        tab_[i][aj] = 1;
        basis_[i] = aj;
        ++art;
      }
    }
    // Phase-1 cost: sum of artificials; phase-2 cost: true objective.
    cost1_.assign(ncols_ + 1, Rational(0));
    cost2_.assign(ncols_ + 1, Rational(0));
    for (int a = 0; a < na_; ++a) cost1_[nx_ + ns_ + a] = 1;
    for (int j = 0; j < nx_; ++j) cost2_[j] = lp.objective[j];
    reduce_cost_row(cost1_);
    reduce_cost_row(cost2_);
  }

  LpSolution solve() {
    LpSolution sol;
    // Phase 1.
    if (na_ > 0) {
      if (!iterate(cost1_, /*allow_artificial=*/true)) throw error("simplex: phase 1 unbounded");
      if (cost1_[ncols_] != 0) {  // stored entry is -objective
        sol.feasible = false;
        return sol;
      }
      drive_out_artificials();
    }
    // Phase 2.
    bland_ = false;
    degenerate_run_ = 0;
    if (!iterate(cost2_, /*allow_artificial=*/false)) {
      sol.feasible = true;
      sol.bounded = false;
      return sol;
    }
    sol.feasible = true;
    sol.x.assign(nx_, Rational(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < nx_) sol.x[basis_[i]] = tab_[i][ncols_];
    sol.value = 0;
    for (int j = 0; j < nx_; ++j) sol.value += lp_.objective[j] * sol.x[j];
    // Dual of row i = final reduced cost of its surplus column.
    sol.dual.assign(m_, Rational(0));
    for (int i = 0; i < m_; ++i) sol.dual[i] = cost2_[nx_ + i];
    sol.pivots = pivots_;
    return sol;
  }

 private:
  // Keeps a cost row in reduced form w.r.t. the current basis.
  void reduce_cost_row(std::vector<Rational>& cost) {
    for (int i = 0; i < m_; ++i) {
      int b = basis_[i];
      if (cost[b] == 0) continue;
      Rational f = cost[b];
      for (int j = 0; j <= ncols_; ++j)
        if (tab_[i][j] != 0) cost[j] -= f * tab_[i][j];
    }
  }

  int pick_entering(const std::vector<Rational>& cost, bool allow_artificial) const {
    int limit = allow_artificial ? ncols_ : nx_ + ns_;
    int best = -1;
    if (bland_) {
      for (int j = 0; j < limit; ++j)
        if (cost[j] < 0) return j;
      return -1;
    }
    const Rational* best_rc = nullptr;
    for (int j = 0; j < limit; ++j) {
      if (cost[j] < 0 && (best_rc == nullptr || cost[j] < *best_rc)) {
        best = j;
        best_rc = &cost[j];
      }
    }
    return best;
  }

  int pick_leaving(int col) const {
    int best = -1;
    Rational best_ratio;
    for (int i = 0; i < m_; ++i) {
      if (tab_[i][col] <= 0) continue;
      Rational ratio = tab_[i][ncols_] / tab_[i][col];
      if (best == -1 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(int row, int col) {
    Rational p = tab_[row][col];
    for (int j = 0; j <= ncols_; ++j)
      if (tab_[row][j] != 0) tab_[row][j] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      Rational f = tab_[i][col];
      for (int j = 0; j <= ncols_; ++j)
        if (tab_[row][j] != 0) tab_[i][j] -= f * tab_[row][j];
    }
    for (auto* cost : {&cost1_, &cost2_}) {
      Rational f = (*cost)[col];
      if (f == 0) continue;
      for (int j = 0; j <= ncols_; ++j)
        if (tab_[row][j] != 0) (*cost)[j] -= f * tab_[row][j];
    }
    basis_[row] = col;
    ++pivots_;
  }

  // Returns false on unboundedness.
  bool iterate(std::vector<Rational>& cost, bool allow_artificial) {
    for (;;) {
      int col = pick_entering(cost, allow_artificial);
      if (col < 0) return true;
      int row = pick_leaving(col);
      if (row < 0) return false;
      bool degen = tab_[row][ncols_] == 0;
      pivot(row, col);
      if (degen) {
        if (++degenerate_run_ > 100 + 2 * m_) bland_ = true;
      } else {
        degenerate_run_ = 0;
      }
    }
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < nx_ + ns_) continue;
      int col = -1;
      for (int j = 0; j < nx_ + ns_ && col < 0; ++j)
        if (tab_[i][j] != 0) col = j;
      if (col >= 0) pivot(i, col);
      // Otherwise the row is redundant; the artificial stays basic at zero
      // and is excluded from entering in phase 2.
    }
  }

  const LinearProgram& lp_;
  int m_ = 0, nx_ = 0, ns_ = 0, na_ = 0, ncols_ = 0;
  std::vector<int> sigma_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> cost1_, cost2_;
  std::vector<int> basis_;
  bool bland_ = false;
  int degenerate_run_ = 0;
  long long pivots_ = 0;
};

}  // namespace detail

inline LpSolution solve_lp(const LinearProgram& lp) {
  if (lp.rows.empty()) {
    LpSolution sol;
    sol.feasible = true;
    sol.x.assign(lp.num_vars, Rational(0));
    sol.value = 0;
    for (int j = 0; j < lp.num_vars; ++j)
      if (lp.objective[j] < 0) {  // nothing stops x_j from growing
        sol.bounded = false;
        return sol;
      }
    return sol;
  }
  detail::SimplexTableau tab(lp);
  return tab.solve();
}

// Exact optimality certificate: primal feasibility, dual feasibility and
// strong duality (c'x == b'y). Independent of how the solution was found.
inline bool certify_lp_optimal(const LinearProgram& lp, const LpSolution& sol) {
  if (!sol.feasible || !sol.bounded) return false;
  if ((int)sol.x.size() != lp.num_vars || sol.dual.size() != lp.rows.size()) return false;
  for (const Rational& xi : sol.x)
    if (xi < 0) return false;
  for (size_t i = 0; i < lp.rows.size(); ++i) {
    Rational lhs = 0;
    for (int j = 0; j < lp.num_vars; ++j) lhs += lp.rows[i][j] * sol.x[j];
    if (lhs < lp.rhs[i]) return false;
    if (sol.dual[i] < 0) return false;
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    Rational atj = 0;
    for (size_t i = 0; i < lp.rows.size(); ++i) atj += lp.rows[i][j] * sol.dual[i];
    if (atj > lp.objective[j]) return false;
  }
  Rational primal = 0, dual = 0;
  for (int j = 0; j < lp.num_vars; ++j) primal += lp.objective[j] * sol.x[j];
  for (size_t i = 0; i < lp.rows.size(); ++i) dual += lp.rhs[i] * sol.dual[i];
  return primal == dual && primal == sol.value;
}

}  // namespace ich
