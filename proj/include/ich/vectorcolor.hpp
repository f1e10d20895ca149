#pragma once

// Vector XOR coloring: maximal-clique enumeration, exact rational LP for
// fractional multicoloring of the weighted category graph, reallocation of
// fractional weights into integer colors, and emission of a sub-packetized
// code whose broadcast rate equals the LP optimum.

#include <algorithm>
#include <utility>
#include <vector>

#include "ich/category.hpp"
#include "ich/codec.hpp"
#include "ich/instance.hpp"
#include "ich/rational.hpp"
#include "ich/simplex.hpp"
#include "ich/util.hpp"

namespace ich {

namespace detail {

// Bron-Kerbosch with pivoting over an adjacency-list graph given as sorted
// neighbor lists. Throws once more than `cap` cliques have been emitted.
inline void bron_kerbosch(const std::vector<std::vector<int>>& adj,
                          std::vector<int>& R, std::vector<int> P,
                          std::vector<int> X,
                          std::vector<std::vector<int>>& out, size_t cap) {
  if (P.empty() && X.empty()) {
    if (out.size() >= cap)
      throw error("maximal clique enumeration infeasible: cap exceeded");
    out.push_back(R);
    return;
  }
  // Pivot: vertex of P∪X with most neighbors inside P.
  int pivot = -1, best = -1;
  for (const auto* side : {&P, &X})
    for (int u : *side) {
      int cnt = 0;
      for (int v : P)
        if (contains_sorted(adj[u], v)) ++cnt;
      if (cnt > best) best = cnt, pivot = u;
    }
  std::vector<int> branch;
  for (int v : P)
    if (pivot < 0 || !contains_sorted(adj[pivot], v)) branch.push_back(v);
  for (int v : branch) {
    std::vector<int> P2, X2;
    for (int u : P)
      if (contains_sorted(adj[v], u)) P2.push_back(u);
    for (int u : X)
      if (contains_sorted(adj[v], u)) X2.push_back(u);
    R.push_back(v);
    bron_kerbosch(adj, R, std::move(P2), std::move(X2), out, cap);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.insert(std::lower_bound(X.begin(), X.end(), v), v);
  }
}

inline std::vector<std::vector<int>> all_maximal_cliques(
    const std::vector<std::vector<int>>& adj, size_t cap) {
  std::vector<int> R, P(adj.size()), X;
  for (size_t i = 0; i < adj.size(); ++i) P[i] = (int)i;
  std::vector<std::vector<int>> out;
  bron_kerbosch(adj, R, std::move(P), X, out, cap);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline std::vector<std::vector<int>> maximal_cliques(const CategoryGraph& cg,
                                                     size_t cap = 100000) {
  return detail::all_maximal_cliques(cg.adj, cap);
}

inline std::vector<std::vector<int>> maximal_cliques(
    const UndirectedSIGraph& g, size_t cap = 100000) {
  return detail::all_maximal_cliques(g.adj, cap);
}

// ---------------------------------------------------------------------------
// Fractional multicoloring LP over the maximal cliques of the skeleton.

struct FractionalSolution {
  std::vector<std::vector<int>> cliques;  // maximal cliques, listed order
  std::vector<Rational> weights;          // c(S) per clique, exact
  Rational objective;                     // sum of weights = optimal rate
  long long p = 1;                        // lcm of weight denominators
  long long t = 0;                        // p * objective (integer)
};

// Minimizes sum c(S) subject to: for every category v with w(v) > 0,
// sum over maximal cliques containing v of c(S) >= w(v), c >= 0.
// All arithmetic exact rational; the result is certified against its dual.
inline FractionalSolution fractional_multicolor(const CategoryGraph& cg) {
  FractionalSolution fs;
  fs.cliques = maximal_cliques(cg);
  fs.weights.assign(fs.cliques.size(), Rational(0));
  std::vector<int> active;  // categories with positive weight
  for (int v = 0; v < cg.size(); ++v)
    if (cg.weight[v] > 0) active.push_back(v);
  if (active.empty()) {
    fs.objective = 0;
    fs.p = 1;
    fs.t = 0;
    return fs;
  }
  std::vector<int> row_of(cg.size(), -1);
  for (size_t r = 0; r < active.size(); ++r) row_of[active[r]] = (int)r;

  // Columns: cliques touching at least one active category.
  std::vector<int> cols;
  for (size_t c = 0; c < fs.cliques.size(); ++c)
    for (int v : fs.cliques[c])
      if (row_of[v] >= 0) {
        cols.push_back((int)c);
        break;
      }

  LinearProgram lp;
  lp.num_vars = (int)cols.size();
  lp.objective.assign(lp.num_vars, Rational(1));
  lp.rows.assign(active.size(), std::vector<Rational>(lp.num_vars, Rational(0)));
  lp.rhs.resize(active.size());
  for (size_t r = 0; r < active.size(); ++r) lp.rhs[r] = Rational(cg.weight[active[r]]);
  for (int j = 0; j < lp.num_vars; ++j)
    for (int v : fs.cliques[cols[j]])
      if (row_of[v] >= 0) lp.rows[row_of[v]][j] = 1;

  LpSolution sol = solve_lp(lp);
  if (!sol.feasible || !sol.bounded)
    throw error("fractional_multicolor: LP unexpectedly infeasible or unbounded");
  if (!certify_lp_optimal(lp, sol))
    throw error("fractional_multicolor: optimality certificate failed");
  for (int j = 0; j < lp.num_vars; ++j) fs.weights[cols[j]] = sol.x[j];
  fs.objective = sol.value;
  fs.p = to_long_checked(lcm_denominators(sol.x));
  Rational t = fs.objective * fs.p;
  if (!is_integer(t)) throw error("fractional_multicolor: non-integer scaled total");
  fs.t = to_long_checked(num(t));
  return fs;
}

// ---------------------------------------------------------------------------
// Integer color allocation obtained by clearing denominators.

struct IntegerColorAllocation {
  long long t = 0;  // distinct colors overall
  long long p = 1;  // colors per user (sub-packets per packet)
  std::vector<std::vector<int>> clique_colors;            // per clique: its block
  std::vector<std::vector<std::vector<int>>> member_colors;  // [category][slot]
};

// Scales every clique weight by p, hands each clique a block of fresh color
// ids in listed order, then deals each category's incoming colors to its
// member slots in ascending order, exactly p per slot, dropping leftovers.
inline IntegerColorAllocation reallocate_colors(const FractionalSolution& fs,
                                                const CategoryGraph& cg) {
  IntegerColorAllocation al;
  al.p = fs.p;
  al.t = fs.t;
  al.clique_colors.assign(fs.cliques.size(), {});
  long long next = 0;
  for (size_t c = 0; c < fs.cliques.size(); ++c) {
    Rational scaled = fs.weights[c] * fs.p;
    if (!is_integer(scaled))
      throw error("reallocate_colors: scaling failed to clear a denominator");
    long long units = to_long_checked(num(scaled));
    for (long long i = 0; i < units; ++i) al.clique_colors[c].push_back((int)next++);
  }
  if (next != al.t) throw error("reallocate_colors: color total mismatch");

  al.member_colors.assign(cg.size(), {});
  for (int v = 0; v < cg.size(); ++v) {
    long long need = cg.weight[v];
    al.member_colors[v].assign(need, {});
    if (need == 0) continue;
    std::vector<int> incoming;
    for (size_t c = 0; c < fs.cliques.size(); ++c)
      if (contains_sorted(fs.cliques[c], v))
        incoming.insert(incoming.end(), al.clique_colors[c].begin(),
                        al.clique_colors[c].end());
    std::sort(incoming.begin(), incoming.end());
    if ((long long)incoming.size() < need * al.p)
      throw error("reallocate_colors: covering shortfall (LP bug)");
    for (long long s = 0; s < need; ++s)
      al.member_colors[v][s].assign(incoming.begin() + s * al.p,
                                    incoming.begin() + (s + 1) * al.p);
  }
  return al;
}

// ---------------------------------------------------------------------------
// Emission: one transmission per color; participants take the sub-packet
// index equal to the color's rank within their own sorted color set.

inline VectorXorCode to_vector_code(const IntegerColorAllocation& al,
                                    const Categorization& cat,
                                    const Decomposition& dec) {
  VectorXorCode code;
  code.n_users = (int)(dec.g2_ids.size() + dec.out_vertices.size());
  code.p = (int)al.p;
  std::vector<std::vector<std::pair<int, int>>> rows(al.t);
  for (int v = 0; v < cat.cg.size(); ++v)
    for (size_t s = 0; s < al.member_colors[v].size(); ++s) {
      int user = dec.g2_ids[cat.members[v][s]];
      const auto& cols = al.member_colors[v][s];  // sorted: rank = subpacket
      for (size_t r = 0; r < cols.size(); ++r)
        rows[cols[r]].push_back({user, (int)r});
    }
  for (auto& row : rows) {
    if (row.empty()) throw error("to_vector_code: unused color (allocation bug)");
    std::sort(row.begin(), row.end());
    code.transmissions.push_back(std::move(row));
  }
  for (int v : dec.out_vertices)
    for (int s = 0; s < code.p; ++s)
      code.transmissions.push_back({{v, s}});
  return code;
}

// ---------------------------------------------------------------------------
// Direct fractional chromatic number of the complement, run on a concrete
// graph as an oracle: LP over the graph's own maximal cliques.

inline Rational fractional_chromatic_brute(const UndirectedSIGraph& g) {
  if (g.n > 12) throw error("fractional_chromatic_brute: more than 12 vertices");
  if (g.n == 0) return Rational(0);
  auto cliques = maximal_cliques(g);
  LinearProgram lp;
  lp.num_vars = (int)cliques.size();
  lp.objective.assign(lp.num_vars, Rational(1));
  lp.rows.assign(g.n, std::vector<Rational>(lp.num_vars, Rational(0)));
  lp.rhs.assign(g.n, Rational(1));
  for (int j = 0; j < lp.num_vars; ++j)
    for (int v : cliques[j]) lp.rows[v][j] = 1;
  LpSolution sol = solve_lp(lp);
  if (!sol.feasible || !sol.bounded)
    throw error("fractional_chromatic_brute: LP unexpectedly degenerate");
  if (!certify_lp_optimal(lp, sol))
    throw error("fractional_chromatic_brute: optimality certificate failed");
  return sol.value;
}

// ---------------------------------------------------------------------------
// Convenience pipeline from a canonical instance to a verified vector code.

struct VectorCodeResult {
  FractionalSolution fs;
  IntegerColorAllocation allocation;
  VectorXorCode code;
  Rational g2_rate;        // t / p over the mutually-connected core
  Rational combined_rate;  // (t + p * |out|) / p, whole instance
};

inline VectorCodeResult vector_code_for_instance(const CanonicalInstance& canon) {
  DirectedSIGraph gd = build_side_info_graph(canon);
  Decomposition dec = decompose(gd);
  Categorization cat = categorize(dec);
  VectorCodeResult res;
  res.fs = fractional_multicolor(cat.cg);
  res.allocation = reallocate_colors(res.fs, cat.cg);
  res.code = to_vector_code(res.allocation, cat, dec);
  res.g2_rate = Rational(res.fs.t) / res.fs.p;
  res.combined_rate =
      Rational(res.fs.t + res.fs.p * (long long)dec.out_vertices.size()) / res.fs.p;
  return res;
}

}  // namespace ich
