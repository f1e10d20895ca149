#pragma once

// Scalar XOR coloring solvers: closed form for two helpers, optimal greedy
// for three, a Graver-basis augmentation integer program, a branch-and-bound
// solver over maximal cliques for general k, and brute-force oracles.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ich/category.hpp"
#include "ich/codec.hpp"
#include "ich/instance.hpp"
#include "ich/rational.hpp"
#include "ich/simplex.hpp"
#include "ich/util.hpp"
#include "ich/vectorcolor.hpp"

namespace ich {

// ---------------------------------------------------------------------------
// Multicolorings of the weighted category graph.

struct MultiColoring {
  std::vector<std::vector<int>> colors;  // per category: sorted distinct ids
  long long total = 0;                   // distinct color ids overall
};

inline bool valid_multicoloring(const MultiColoring& mc, const CategoryGraph& cg) {
  if ((int)mc.colors.size() != cg.size()) return false;
  std::vector<int> all;
  for (int v = 0; v < cg.size(); ++v) {
    const auto& cv = mc.colors[v];
    if ((long long)cv.size() != cg.weight[v]) return false;
    if (!std::is_sorted(cv.begin(), cv.end())) return false;
    if (std::adjacent_find(cv.begin(), cv.end()) != cv.end()) return false;
    all.insert(all.end(), cv.begin(), cv.end());
  }
  for (int u = 0; u < cg.size(); ++u)
    for (int v = u + 1; v < cg.size(); ++v) {
      if (cg.adjacent(u, v)) continue;
      if (!intersect_sorted(mc.colors[u], mc.colors[v]).empty()) return false;
    }
  return (long long)sorted_unique(all).size() == mc.total;
}

// One unit = one color shared by a set of pairwise-adjacent categories.
inline MultiColoring coloring_from_units(const std::vector<std::vector<int>>& units,
                                         const CategoryGraph& cg) {
  MultiColoring mc;
  mc.colors.assign(cg.size(), {});
  for (size_t i = 0; i < units.size(); ++i) {
    if (units[i].empty()) throw error("coloring_from_units: empty unit");
    for (size_t a = 0; a < units[i].size(); ++a)
      for (size_t b = a + 1; b < units[i].size(); ++b)
        if (!cg.adjacent(units[i][a], units[i][b]))
          throw error("coloring_from_units: unit is not a clique");
    for (int v : units[i]) mc.colors[v].push_back((int)i);
  }
  mc.total = (long long)units.size();
  for (int v = 0; v < cg.size(); ++v)
    if ((long long)mc.colors[v].size() != cg.weight[v])
      throw error("coloring_from_units: color multiplicity mismatch with weights");
  return mc;
}

// One transmission per color, XORing one member user of each category that
// holds the color; member lists are consumed in ascending user order. Out
// vertices are appended as uncoded singletons.
inline XorCode coloring_to_code(const MultiColoring& mc, const Categorization& cat,
                                const Decomposition& dec) {
  const CategoryGraph& cg = cat.cg;
  if ((int)mc.colors.size() != cg.size())
    throw error("coloring_to_code: coloring does not match category graph");
  std::map<int, std::vector<int>> users_of_color;
  for (int v = 0; v < cg.size(); ++v) {
    if ((long long)mc.colors[v].size() != (long long)cat.members[v].size())
      throw error("coloring_to_code: color multiplicity mismatch with weights");
    for (size_t s = 0; s < mc.colors[v].size(); ++s) {
      int user = dec.g2_ids[cat.members[v][s]];
      users_of_color[mc.colors[v][s]].push_back(user);
    }
  }
  XorCode code;
  code.n_users = (int)(dec.g2_ids.size() + dec.out_vertices.size());
  for (auto& [color, users] : users_of_color) {
    std::sort(users.begin(), users.end());
    code.transmissions.push_back(users);
  }
  for (int v : dec.out_vertices) code.transmissions.push_back({v});
  return code;
}

// ---------------------------------------------------------------------------
// Two helpers: closed form. Users attached to one helper whose packet sits
// in the other helper's cache pair off; everything else goes uncoded.

struct TwoHelperResult {
  long long length = 0;
  XorCode code;
};

inline TwoHelperResult two_helper_optimum(const CanonicalInstance& canon) {
  if (canon.k() != 2) throw error("two_helper_optimum: exactly 2 helpers required");
  canon.validate();
  const auto& h0 = canon.helpers[0];
  const auto& h1 = canon.helpers[1];
  std::vector<int> a = intersect_sorted(h0.neighborhood, h1.cache);
  std::vector<int> b = intersect_sorted(h1.neighborhood, h0.cache);
  size_t m = std::min(a.size(), b.size());
  TwoHelperResult res;
  res.code.n_users = canon.n_users;
  std::vector<char> paired(canon.n_users, 0);
  for (size_t i = 0; i < m; ++i) {
    res.code.transmissions.push_back(sorted_unique({a[i], b[i]}));
    paired[a[i]] = paired[b[i]] = 1;
  }
  for (int u = 0; u < canon.n_users; ++u)
    if (!paired[u]) res.code.transmissions.push_back({u});
  res.length = (long long)res.code.transmissions.size();
  return res;
}

// ---------------------------------------------------------------------------
// Three helpers: greedy over the fixed category order, smallest color ids
// not already held by a non-adjacent processed category.

inline std::vector<int> k3_category_order(const CategoryGraph& cg) {
  auto at = [&](int home, std::initializer_list<int> conn) {
    unsigned mask = 0;
    for (int j : conn) mask |= 1u << j;
    int idx = cg.index_of(home, mask);
    if (idx < 0) throw error("k3_category_order: bad skeleton");
    return idx;
  };
  return {at(0, {1}), at(1, {0}), at(1, {2}), at(2, {1}), at(2, {0}),
          at(0, {2}), at(0, {1, 2}), at(1, {0, 2}), at(2, {0, 1})};
}

inline MultiColoring greedy_k3(const CategoryGraph& cg) {
  if (cg.k != 3) throw error("greedy_k3: k must be 3");
  std::vector<int> order = k3_category_order(cg);
  long long cap = std::max<long long>(cg.total_weight(), 1);
  MultiColoring mc;
  mc.colors.assign(cg.size(), {});
  std::vector<char> seen(cg.size(), 0);
  std::vector<char> used(cap, 0);
  for (int v : order) {
    std::vector<char> forbidden(cap, 0);
    for (int u = 0; u < cg.size(); ++u)
      if (seen[u] && u != v && !cg.adjacent(u, v))
        for (int c : mc.colors[u]) forbidden[c] = 1;
    long long need = cg.weight[v];
    for (long long c = 0; need > 0; ++c) {
      if (c >= cap) throw error("greedy_k3: color budget overflow");
      if (forbidden[c]) continue;
      mc.colors[v].push_back((int)c);
      used[c] = 1;
      --need;
    }
    seen[v] = 1;
  }
  for (long long c = 0; c < cap; ++c)
    if (used[c]) ++mc.total;
  return mc;
}

// Closed-form color count for k=3: paired one-complement categories share,
// then each full category reuses whatever its two adjacent one-complement
// blocks left over before opening fresh colors.
inline long long k3_count_formula(const CategoryGraph& cg) {
  if (cg.k != 3) throw error("k3_count_formula: k must be 3");
  auto w1 = [&](int i, int j) {  // home i, connected {j}
    return cg.weight[cg.index_of(i, 1u << j)];
  };
  auto w2 = [&](int i) {  // home i, connected to both others
    return cg.weight[cg.index_of(i, 7u ^ (1u << i))];
  };
  long long p = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) p += std::max(w1(i, j), w1(j, i));
  long long extra = 0;
  for (int i = 0; i < 3; ++i) {
    long long avail = 0;
    for (int j = 0; j < 3; ++j)
      if (j != i) avail += std::max<long long>(w1(j, i) - w1(i, j), 0);
    extra = std::max(extra, std::max<long long>(w2(i) - avail, 0));
  }
  return p + extra;
}

// ---------------------------------------------------------------------------
// The full clique system of the skeleton: every clique, one incidence column
// per clique. Columns are ordered by size then lexicographically, so the
// first f1 columns are the singletons in category order.

struct CliqueSystem {
  int k = 0;
  std::vector<std::vector<int>> cliques;     // sorted member lists
  std::vector<std::vector<int>> cliques_of;  // per category: column indices
  int f1 = 0;

  int f2() const { return (int)cliques.size(); }
};

inline CliqueSystem clique_system(int k) {
  if (k < 2 || k > 5) throw error("clique_system: k must be in [2, 5]");
  CliqueSystem cs;
  cs.k = k;
  CategoryGraph cg = build_category_graph(k);
  cs.f1 = cg.size();
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int start) -> void {
    for (int v = start; v < cg.size(); ++v) {
      bool ok = true;
      for (int u : cur)
        if (!cg.adjacent(u, v)) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(v);
      cs.cliques.push_back(cur);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(cs.cliques.begin(), cs.cliques.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  cs.cliques_of.assign(cs.f1, {});
  for (int c = 0; c < cs.f2(); ++c)
    for (int v : cs.cliques[c]) cs.cliques_of[v].push_back(c);
  for (int v = 0; v < cs.f1; ++v)
    if (cs.cliques[v] != std::vector<int>{v})
      throw error("clique_system: singleton column ordering violated");
  return cs;
}

// ---------------------------------------------------------------------------
// Graver basis of the clique incidence matrix by completion: seed with the
// elementary kernel vectors (one per non-singleton clique), close under
// normal-form reduction of cross-orthant pair sums, then keep the
// conformally minimal elements.

struct GraverBasis {
  std::vector<std::vector<int>> elements;  // length f2 each
  long long delta = 0;                     // max |det| over square submatrices
  int rank = 0;
  long long enum_bound = 0;                // (f2 - rank) * delta
};

namespace detail {

struct SignedVec {
  std::vector<int> v;
  uint32_t pos = 0, neg = 0;

  void rescan() {
    pos = neg = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] > 0) pos |= 1u << i;
      if (v[i] < 0) neg |= 1u << i;
    }
  }
  bool zero() const { return pos == 0 && neg == 0; }
};

// u conformally below h: same orthant, componentwise no larger magnitude.
inline bool conformal_leq(const SignedVec& u, const SignedVec& h) {
  if ((u.pos & ~h.pos) || (u.neg & ~h.neg)) return false;
  for (size_t i = 0; i < u.v.size(); ++i)
    if (std::abs(u.v[i]) > std::abs(h.v[i])) return false;
  return true;
}

// Bareiss fraction-free determinant of a small integer matrix (in place).
inline long long int_determinant(std::vector<long long>& m, int r) {
  long long prev = 1, sign = 1;
  for (int kk = 0; kk < r; ++kk) {
    int pivot = -1;
    for (int i = kk; i < r; ++i)
      if (m[i * r + kk] != 0) { pivot = i; break; }
    if (pivot < 0) return 0;
    if (pivot != kk) {
      for (int j = 0; j < r; ++j) std::swap(m[kk * r + j], m[pivot * r + j]);
      sign = -sign;
    }
    for (int i = kk + 1; i < r; ++i)
      for (int j = kk + 1; j < r; ++j)
        m[i * r + j] = (m[i * r + j] * m[kk * r + kk] - m[i * r + kk] * m[kk * r + j]) / prev;
    prev = m[kk * r + kk];
  }
  return sign * m[(r - 1) * r + (r - 1)];
}

// Max absolute determinant over all square submatrices of a 0/1 matrix.
inline long long max_abs_subdeterminant(const std::vector<std::vector<int>>& A) {
  int nr = (int)A.size(), nc = nr ? (int)A[0].size() : 0;
  long long best = 0;
  std::vector<int> rows, cols;
  std::vector<long long> buf;
  auto eval = [&]() {
    int r = (int)rows.size();
    buf.assign((size_t)r * r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) buf[i * r + j] = A[rows[i]][cols[j]];
    best = std::max(best, std::abs(int_determinant(buf, r)));
  };
  auto pick_cols = [&](auto&& self, int start, int want) -> void {
    if (want == 0) { eval(); return; }
    for (int c = start; c <= nc - want; ++c) {
      cols.push_back(c);
      self(self, c + 1, want - 1);
      cols.pop_back();
    }
  };
  auto pick_rows = [&](auto&& self, int start, int want) -> void {
    if (want == 0) { pick_cols(pick_cols, 0, (int)rows.size()); return; }
    for (int r = start; r <= nr - want; ++r) {
      rows.push_back(r);
      self(self, r + 1, want - 1);
      rows.pop_back();
    }
  };
  for (int r = 1; r <= std::min(nr, nc); ++r) pick_rows(pick_rows, 0, r);
  return best;
}

}  // namespace detail

inline GraverBasis graver_basis(const CliqueSystem& cs) {
  if (cs.k > 3)
    throw error(
        "graver_basis: enumeration budget exceeded for k >= 4; "
        "load a precomputed basis file instead");
  int f2 = cs.f2();
  using detail::SignedVec;
  std::vector<SignedVec> g;
  auto push = [&](std::vector<int> vec) {
    SignedVec sv;
    sv.v = std::move(vec);
    sv.rescan();
    if (!sv.zero()) g.push_back(std::move(sv));
  };
  for (int c = cs.f1; c < f2; ++c) {  // elementary kernel vectors, both signs
    std::vector<int> vec(f2, 0);
    vec[c] = 1;
    for (int v : cs.cliques[c]) vec[v] -= 1;
    std::vector<int> neg(f2, 0);
    for (int i = 0; i < f2; ++i) neg[i] = -vec[i];
    push(vec);
    push(std::move(neg));
  }

  auto normal_form = [&](SignedVec h) {
    bool reduced = true;
    while (!h.zero() && reduced) {
      reduced = false;
      for (const SignedVec& u : g)
        if (detail::conformal_leq(u, h)) {
          for (int i = 0; i < f2; ++i) h.v[i] -= u.v[i];
          h.rescan();
          reduced = true;
          break;
        }
    }
    return h;
  };

  for (size_t j = 1; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i) {
      // A same-orthant sum reduces to zero by its own two addends.
      if ((g[i].pos & g[j].neg) == 0 && (g[i].neg & g[j].pos) == 0) continue;
      SignedVec h;
      h.v.resize(f2);
      for (int t = 0; t < f2; ++t) h.v[t] = g[i].v[t] + g[j].v[t];
      h.rescan();
      if (h.zero()) continue;
      h = normal_form(std::move(h));
      if (!h.zero()) g.push_back(std::move(h));
    }

  GraverBasis gb;
  for (size_t i = 0; i < g.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < g.size() && minimal; ++j)
      if (j != i && detail::conformal_leq(g[j], g[i])) minimal = false;
    if (minimal) gb.elements.push_back(g[i].v);
  }
  std::sort(gb.elements.begin(), gb.elements.end());

  std::vector<std::vector<int>> A(cs.f1, std::vector<int>(f2, 0));
  for (int c = 0; c < f2; ++c)
    for (int v : cs.cliques[c]) A[v][c] = 1;
  gb.delta = detail::max_abs_subdeterminant(A);
  gb.rank = cs.f1;  // singleton columns hold an identity block
  gb.enum_bound = (long long)(f2 - gb.rank) * gb.delta;
  return gb;
}

// ---------------------------------------------------------------------------
// Augmentation: one best-improvement step along the basis.

inline std::vector<long long> apply_system(const CliqueSystem& cs,
                                           const std::vector<long long>& c) {
  std::vector<long long> w(cs.f1, 0);
  for (int v = 0; v < cs.f1; ++v)
    for (int col : cs.cliques_of[v]) w[v] += c[col];
  return w;
}

inline std::vector<long long> augment(const CliqueSystem& cs,
                                      const std::vector<long long>& c,
                                      const GraverBasis& gb,
                                      const std::vector<long long>& w,
                                      long long box) {
  if ((int)c.size() != cs.f2()) throw error("augment: vector length mismatch");
  for (long long x : c)
    if (x < 0 || x > box) throw error("augment: input outside the box");
  if (apply_system(cs, c) != w) throw error("augment: infeasible input");
  const std::vector<int>* pick = nullptr;
  long long best = 0;
  for (const auto& elem : gb.elements) {
    long long step = std::accumulate(elem.begin(), elem.end(), 0ll);
    if (step >= best) continue;
    bool inside = true;
    for (int i = 0; i < cs.f2() && inside; ++i) {
      long long nv = c[i] + elem[i];
      if (nv < 0 || nv > box) inside = false;
    }
    if (inside) {
      best = step;
      pick = &elem;
    }
  }
  if (!pick) return c;
  std::vector<long long> out = c;
  for (int i = 0; i < cs.f2(); ++i) out[i] += (*pick)[i];
  return out;
}

struct IntProgResult {
  std::vector<long long> c;
  long long optimum = 0;
  long long augment_calls = 0;
};

// Starts from the all-singletons solution and walks downhill along the
// basis; the final point is the exact integer optimum.
inline IntProgResult optintprog(const CliqueSystem& cs,
                                const std::vector<long long>& w,
                                const GraverBasis& gb) {
  if ((int)w.size() != cs.f1) throw error("optintprog: weight length mismatch");
  long long n = 0;
  for (long long x : w) {
    if (x < 0) throw error("optintprog: negative weight");
    n += x;
  }
  IntProgResult res;
  res.c.assign(cs.f2(), 0);
  for (int v = 0; v < cs.f1; ++v) res.c[v] = w[v];
  long long call_cap = std::max<long long>(2 * n * cs.f2(), 1);
  for (;;) {
    std::vector<long long> next = augment(cs, res.c, gb, w, n);
    ++res.augment_calls;
    if (next == res.c) break;
    res.c = std::move(next);
    if (res.augment_calls > call_cap)
      throw error("optintprog: augmentation call budget exceeded");
  }
  res.optimum = std::accumulate(res.c.begin(), res.c.end(), 0ll);
  return res;
}

inline IntProgResult optintprog(const CliqueSystem& cs,
                                const std::vector<long long>& w) {
  return optintprog(cs, w, graver_basis(cs));
}

// ---------------------------------------------------------------------------
// Exact clique cover number by subset dynamic programming.

inline int brute_clique_cover(const UndirectedSIGraph& g) {
  if (g.n > 15) throw error("brute_clique_cover: more than 15 vertices");
  if (g.n == 0) return 0;
  int full = (1 << g.n) - 1;
  std::vector<int> nbr(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) nbr[v] |= 1 << u;
  std::vector<char> is_clique(full + 1, 0);
  is_clique[0] = 1;
  for (int mask = 1; mask <= full; ++mask) {
    int low = std::countr_zero((unsigned)mask);
    int rest = mask & (mask - 1);
    is_clique[mask] = is_clique[rest] && ((nbr[low] & rest) == rest);
  }
  std::vector<int> dp(full + 1, g.n + 1);
  dp[0] = 0;
  for (int mask = 1; mask <= full; ++mask) {
    int low = 1 << std::countr_zero((unsigned)mask);
    for (int s = mask; s; s = (s - 1) & mask)
      if ((s & low) && is_clique[s]) dp[mask] = std::min(dp[mask], 1 + dp[mask ^ s]);
  }
  return dp[full];
}

inline int independence_number_brute(const UndirectedSIGraph& g) {
  if (g.n > 20) throw error("independence_number_brute: more than 20 vertices");
  std::vector<int> nbr(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) nbr[v] |= 1 << u;
  int best = 0;
  for (int mask = 0; mask < (1 << g.n); ++mask) {
    bool ok = true;
    for (int m = mask; m && ok; m &= m - 1)
      if (nbr[std::countr_zero((unsigned)m)] & mask) ok = false;
    if (ok) best = std::max(best, std::popcount((unsigned)mask));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Branch and bound over maximal cliques: exact for any k within the clique
// enumeration budget. Returns the optimum and equality-trimmed color units.

struct BnbResult {
  long long optimum = 0;
  std::vector<std::vector<int>> units;  // one clique of categories per color
};

namespace detail {

struct BnbNode {
  std::map<int, long long> lb, ub;  // per-column branching bounds
};

}  // namespace detail

inline BnbResult bnb_optimum(const CategoryGraph& cg) {
  std::vector<int> active;
  for (int v = 0; v < cg.size(); ++v)
    if (cg.weight[v] > 0) active.push_back(v);
  BnbResult res;
  if (active.empty()) return res;
  std::vector<int> row_of(cg.size(), -1);
  for (size_t r = 0; r < active.size(); ++r) row_of[active[r]] = (int)r;

  // Columns: distinct supersets-maximal positive parts of maximal cliques.
  std::vector<std::vector<int>> parts;
  for (const auto& mc : maximal_cliques(cg)) {
    std::vector<int> part;
    for (int v : mc)
      if (row_of[v] >= 0) part.push_back(v);
    if (!part.empty()) parts.push_back(std::move(part));
  }
  parts = [&] {
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::vector<std::vector<int>> keep;
    for (const auto& p : parts) {
      bool dominated = false;
      for (const auto& q : parts)
        if (&p != &q && p.size() < q.size() &&
            std::includes(q.begin(), q.end(), p.begin(), p.end()))
          dominated = true;
      if (!dominated) keep.push_back(p);
    }
    return keep;
  }();
  int ncols = (int)parts.size();

  // Deterministic size budget: rational LPs over many columns with large
  // weights make the search tree far too expensive; refuse upfront rather
  // than time out. weight-sum x column-count is a machine-independent proxy.
  long long total_w = 0;
  for (int v : active) total_w += cg.weight[v];
  if (total_w * ncols > 100000)
    throw error("bnb_optimum: instance exceeds the branch-and-bound budget "
                "(weight x clique-column product too large)");

  long long maxw = 0;
  for (int v : active) maxw = std::max(maxw, cg.weight[v]);

  // Greedy integral covering: upper bound and fallback incumbent.
  std::vector<long long> greedy_c(ncols, 0);
  {
    std::vector<long long> resid(active.size());
    for (size_t r = 0; r < active.size(); ++r) resid[r] = cg.weight[active[r]];
    long long left = std::accumulate(resid.begin(), resid.end(), 0ll);
    while (left > 0) {
      int bestj = -1, bestcnt = -1;
      for (int j = 0; j < ncols; ++j) {
        int cnt = 0;
        for (int v : parts[j])
          if (resid[row_of[v]] > 0) ++cnt;
        if (cnt > bestcnt) bestcnt = cnt, bestj = j;
      }
      long long m = -1;
      for (int v : parts[bestj])
        if (resid[row_of[v]] > 0)
          m = m < 0 ? resid[row_of[v]] : std::min(m, resid[row_of[v]]);
      greedy_c[bestj] += m;
      for (int v : parts[bestj]) {
        long long d = std::min(m, resid[row_of[v]]);
        resid[row_of[v]] -= d;
        left -= d;
      }
    }
  }
  long long best_val = std::accumulate(greedy_c.begin(), greedy_c.end(), 0ll);
  std::vector<long long> best_c = greedy_c;

  // Depth-first branch and bound with exact rational LP lower bounds.
  std::vector<detail::BnbNode> stack(1);
  long long nodes = 0;
  while (!stack.empty()) {
    detail::BnbNode node = std::move(stack.back());
    stack.pop_back();
    if (++nodes > 200000) throw error("bnb_optimum: node budget exceeded");

    LinearProgram lp;
    lp.num_vars = ncols;
    lp.objective.assign(ncols, Rational(1));
    lp.rows.assign(active.size(), std::vector<Rational>(ncols, Rational(0)));
    lp.rhs.resize(active.size());
    for (size_t r = 0; r < active.size(); ++r) lp.rhs[r] = Rational(cg.weight[active[r]]);
    for (int j = 0; j < ncols; ++j)
      for (int v : parts[j]) lp.rows[row_of[v]][j] = 1;
    for (auto [j, b] : node.lb) {
      std::vector<Rational> row(ncols, Rational(0));
      row[j] = 1;
      lp.add_row(row, Rational(b));
    }
    for (auto [j, b] : node.ub) {
      std::vector<Rational> row(ncols, Rational(0));
      row[j] = -1;
      lp.add_row(row, Rational(-b));
    }
    LpSolution sol = solve_lp(lp);
    if (!sol.feasible) continue;
    if (!sol.bounded) throw error("bnb_optimum: unbounded relaxation");
    Rational lower = sol.value;
    if (ceil_rational(lower) >= best_val) continue;

    int frac = -1;
    for (int j = 0; j < ncols; ++j)
      if (!is_integer(sol.x[j])) { frac = j; break; }
    if (frac < 0) {
      long long val = to_long_checked(num(sol.value));
      if (val < best_val) {
        best_val = val;
        for (int j = 0; j < ncols; ++j) best_c[j] = to_long_checked(num(sol.x[j]));
      }
      continue;
    }
    long long fl = to_long_checked(floor_rational(sol.x[frac]));
    detail::BnbNode down = node, up = node;
    long long old_ub = down.ub.count(frac) ? down.ub[frac] : maxw;
    down.ub[frac] = std::min(old_ub, fl);
    up.lb[frac] = std::max(up.lb.count(frac) ? up.lb[frac] : 0, fl + 1);
    if (up.lb[frac] <= (up.ub.count(frac) ? up.ub[frac] : maxw)) stack.push_back(up);
    if (down.ub[frac] >= (down.lb.count(frac) ? down.lb[frac] : 0))
      stack.push_back(down);
  }

  // Trim the covering solution down to exact per-category multiplicities.
  std::vector<long long> resid(cg.size(), 0);
  for (int v = 0; v < cg.size(); ++v) resid[v] = cg.weight[v];
  for (int j = 0; j < ncols; ++j)
    for (long long i = 0; i < best_c[j]; ++i) {
      std::vector<int> unit;
      for (int v : parts[j])
        if (resid[v] > 0) {
          unit.push_back(v);
          --resid[v];
        }
      if (unit.empty()) throw error("bnb_optimum: redundant unit in optimum");
      res.units.push_back(std::move(unit));
    }
  for (int v = 0; v < cg.size(); ++v)
    if (resid[v] != 0) throw error("bnb_optimum: covering shortfall");
  res.optimum = best_val;
  if ((long long)res.units.size() != res.optimum)
    throw error("bnb_optimum: unit count mismatch");
  return res;
}

// ---------------------------------------------------------------------------
// One-stop scalar solver: picks the strongest exact method for the
// instance's helper count and returns a verified-shape code.

struct ScalarCodeResult {
  long long length = 0;
  XorCode code;
};

inline ScalarCodeResult scalar_code_for_instance(const CanonicalInstance& canon) {
  if (canon.k() == 2) {
    TwoHelperResult two = two_helper_optimum(canon);
    return {two.length, std::move(two.code)};
  }
  DirectedSIGraph gd = build_side_info_graph(canon);
  Decomposition dec = decompose(gd);
  Categorization cat = categorize(dec);
  MultiColoring mc;
  if (canon.k() == 3) {
    mc = greedy_k3(cat.cg);
  } else {
    BnbResult bnb = bnb_optimum(cat.cg);
    mc = coloring_from_units(bnb.units, cat.cg);
  }
  ScalarCodeResult res;
  res.code = coloring_to_code(mc, cat, dec);
  res.length = (long long)res.code.transmissions.size();
  return res;
}

}  // namespace ich
