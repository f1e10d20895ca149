#pragma once

// Category graph: the k-dependent quotient of a decomposed instance.
//
// A g2 vertex is classified by (home helper, set of helpers it has mutual
// edges into). Two categories are adjacent iff each one's home belongs to
// the other's connected set; the members of adjacent categories are fully
// joined in g2, so the instance only contributes the vertex weights while
// the skeleton depends on k alone.

#include <vector>

#include "ich/sigraph.hpp"
#include "ich/util.hpp"

namespace ich {

struct CategoryLabel {
  int home = 0;
  std::vector<int> connected;  // sorted, nonempty, never contains home

  unsigned mask() const {
    unsigned m = 0;
    for (int j : connected) m |= 1u << j;
    return m;
  }
};

struct CategoryGraph {
  int k = 0;
  std::vector<CategoryLabel> labels;       // fixed skeleton order
  std::vector<std::vector<int>> adj;       // sorted adjacency
  std::vector<long long> weight;           // w(v) >= 0, instance-dependent
  std::vector<std::vector<int>> index_lut; // [home][mask] -> vertex or -1

  int size() const { return (int)labels.size(); }

  int index_of(int home, unsigned mask) const {
    if (home < 0 || home >= k || mask >= index_lut[home].size()) return -1;
    return index_lut[home][mask];
  }

  bool adjacent(int u, int v) const { return contains_sorted(adj[u], v); }

  long long total_weight() const {
    long long s = 0;
    for (long long w : weight) s += w;
    return s;
  }
};

// Skeleton for k helpers: one vertex per (home, nonempty connected subset),
// k(2^(k-1)-1) vertices total. Weights start at zero.
inline CategoryGraph build_category_graph(int k) {
  if (k < 1 || k > 8) throw error("build_category_graph: k must be in [1, 8]");
  CategoryGraph cg;
  cg.k = k;
  cg.index_lut.assign(k, std::vector<int>(1u << k, -1));
  for (int home = 0; home < k; ++home) {
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      if (mask & (1u << home)) continue;
      CategoryLabel lab;
      lab.home = home;
      for (int j = 0; j < k; ++j)
        if (mask & (1u << j)) lab.connected.push_back(j);
      cg.index_lut[home][mask] = (int)cg.labels.size();
      cg.labels.push_back(std::move(lab));
    }
  }
  int n = cg.size();
  cg.adj.assign(n, {});
  cg.weight.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const CategoryLabel &a = cg.labels[u], &b = cg.labels[v];
      if (a.home == b.home) continue;
      if ((b.mask() & (1u << a.home)) && (a.mask() & (1u << b.home))) {
        cg.adj[u].push_back(v);
        cg.adj[v].push_back(u);
      }
    }
  }
  return cg;
}

struct Categorization {
  CategoryGraph cg;                        // weights = member counts
  std::vector<std::vector<int>> members;   // per category: g2 vertex ids, sorted
  std::vector<int> category_of;            // per g2 vertex
};

// Classifies every g2 vertex and checks the quotient is faithful: members
// of one category must have identical g2 neighborhoods.
inline Categorization categorize(const Decomposition& dec) {
  const UndirectedSIGraph& g = dec.g2;
  if (g.num_partitions < 1) throw error("categorize: graph lacks partition count");
  Categorization cat;
  cat.cg = build_category_graph(g.num_partitions);
  cat.members.assign(cat.cg.size(), {});
  cat.category_of.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    int home = g.partition[v];
    if (home < 0 || home >= g.num_partitions)
      throw error("categorize: vertex with invalid partition label");
    unsigned mask = 0;
    for (int w : g.adj[v]) {
      int p = g.partition[w];
      if (p < 0 || p >= g.num_partitions)
        throw error("categorize: neighbor with invalid partition label");
      mask |= 1u << p;
    }
    if (mask == 0) throw error("categorize: isolated vertex (not a decomposition output)");
    if (mask & (1u << home)) throw error("categorize: edge within a partition");
    int idx = cat.cg.index_of(home, mask);
    cat.category_of[v] = idx;
    cat.members[idx].push_back(v);
  }
  for (int c = 0; c < cat.cg.size(); ++c) {
    cat.cg.weight[c] = (long long)cat.members[c].size();
    for (size_t i = 1; i < cat.members[c].size(); ++i)
      if (g.adj[cat.members[c][i]] != g.adj[cat.members[c][0]])
        throw error("categorize: same-category vertices with different neighborhoods");
  }
  return cat;
}

// Weighted expansion: w(v) fresh vertices per category, complete joins along
// skeleton edges. Vertices are laid out category-block by category-block.
inline UndirectedSIGraph expand(const CategoryGraph& cg) {
  long long total = cg.total_weight();
  if (total > 100000) throw error("expand: weighted graph too large");
  std::vector<int> offset(cg.size() + 1, 0);
  for (int c = 0; c < cg.size(); ++c) offset[c + 1] = offset[c] + (int)cg.weight[c];
  UndirectedSIGraph g;
  g.init(offset[cg.size()]);
  g.num_partitions = cg.k;
  for (int c = 0; c < cg.size(); ++c)
    for (int i = offset[c]; i < offset[c + 1]; ++i) g.partition[i] = cg.labels[c].home;
  for (int u = 0; u < cg.size(); ++u)
    for (int v : cg.adj[u]) {
      if (v < u) continue;
      for (int i = offset[u]; i < offset[u + 1]; ++i)
        for (int j = offset[v]; j < offset[v + 1]; ++j) {
          g.adj[i].push_back(j);
          g.adj[j].push_back(i);
        }
    }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

}  // namespace ich
