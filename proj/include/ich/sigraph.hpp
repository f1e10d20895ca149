#pragma once

// Side-information graphs and their helper-aware decomposition.
//
// Directed edge (i, j) means user i holds packet x_j. The undirected graph
// keeps mutual pairs only; XOR schemes code over its cliques. decompose()
// splits vertices into `out` (sent uncoded) and `g2` (worth coding over):
// a vertex goes out when nobody holds its packet, or when it has no mutual
// edge left — such a vertex can never share a transmission.

#include <optional>
#include <vector>

#include "ich/instance.hpp"
#include "ich/util.hpp"

namespace ich {

struct DirectedSIGraph {
  int n = 0;
  int num_partitions = 0;              // helpers behind the instance; 0 if synthetic
  std::vector<std::vector<int>> out;   // sorted out-neighbor lists
  std::vector<int> partition;          // helper label per vertex, -1 unknown

  void init(int nn) {
    n = nn;
    out.assign(n, {});
    partition.assign(n, -1);
  }

  bool has_edge(int i, int j) const { return contains_sorted(out[i], j); }

  int edge_count() const {
    int m = 0;
    for (const auto& o : out) m += (int)o.size();
    return m;
  }

  DirectedSIGraph induced(const std::vector<int>& verts) const {
    std::vector<int> local(n, -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = (int)i;
    DirectedSIGraph g;
    g.init((int)verts.size());
    g.num_partitions = num_partitions;
    for (size_t i = 0; i < verts.size(); ++i) {
      g.partition[i] = partition[verts[i]];
      for (int j : out[verts[i]])
        if (local[j] >= 0) g.out[i].push_back(local[j]);
    }
    return g;
  }
};

struct UndirectedSIGraph {
  int n = 0;
  int num_partitions = 0;
  std::vector<std::vector<int>> adj;  // sorted
  std::vector<int> partition;

  void init(int nn) {
    n = nn;
    adj.assign(n, {});
    partition.assign(n, -1);
  }

  bool has_edge(int i, int j) const { return contains_sorted(adj[i], j); }

  void add_edge(int i, int j) {
    if (i == j) throw error("undirected graph: self loop");
    if (has_edge(i, j)) return;
    adj[i].insert(std::upper_bound(adj[i].begin(), adj[i].end(), j), j);
    adj[j].insert(std::upper_bound(adj[j].begin(), adj[j].end(), i), i);
  }

  int edge_count() const {
    int m = 0;
    for (const auto& a : adj) m += (int)a.size();
    return m / 2;
  }

  int degree(int v) const { return (int)adj[v].size(); }

  UndirectedSIGraph complement() const {
    UndirectedSIGraph g;
    g.init(n);
    g.num_partitions = num_partitions;
    g.partition = partition;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!has_edge(i, j)) g.add_edge(i, j);
    return g;
  }

  UndirectedSIGraph induced(const std::vector<int>& verts) const {
    std::vector<int> local(n, -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = (int)i;
    UndirectedSIGraph g;
    g.init((int)verts.size());
    g.num_partitions = num_partitions;
    for (size_t i = 0; i < verts.size(); ++i) {
      g.partition[i] = partition[verts[i]];
      for (int j : adj[verts[i]])
        if (local[j] >= 0) g.adj[i].push_back(local[j]);
    }
    return g;
  }
};

// (i, j) present iff packet x_j sits in the cache of user i's helper.
// Users attached to no helper are sinks with no outgoing edges.
inline DirectedSIGraph build_side_info_graph(const CanonicalInstance& inst) {
  inst.validate();
  std::vector<int> owner = inst.helper_of_users();
  DirectedSIGraph g;
  g.init(inst.n_users);
  g.num_partitions = inst.k();
  for (int u = 0; u < inst.n_users; ++u) {
    g.partition[u] = owner[u];
    if (owner[u] >= 0) {
      g.out[u] = inst.helpers[owner[u]].cache;  // sorted, never contains u
    }
  }
  return g;
}

inline UndirectedSIGraph underlying_undirected(const DirectedSIGraph& gd) {
  UndirectedSIGraph g;
  g.init(gd.n);
  g.num_partitions = gd.num_partitions;
  g.partition = gd.partition;
  for (int i = 0; i < gd.n; ++i)
    for (int j : gd.out[i])
      if (j > i && gd.has_edge(j, i)) g.add_edge(i, j);
  return g;
}

struct Decomposition {
  std::vector<int> out_vertices;  // uncoded set = uncached + isolated, sorted
  std::vector<int> uncached;      // packet held by no user (zero in-degree)
  std::vector<int> isolated;      // no mutual edge; moved out before coloring
  UndirectedSIGraph g2;           // relabeled 0..m-1
  std::vector<int> g2_ids;        // g2 vertex -> original id
  std::vector<std::pair<int, int>> removed_edges;  // directed, >=1 endpoint out
};

inline Decomposition decompose(const DirectedSIGraph& gd) {
  std::vector<int> in_deg(gd.n, 0);
  for (int i = 0; i < gd.n; ++i)
    for (int j : gd.out[i]) ++in_deg[j];

  std::vector<char> is_out(gd.n, 0);
  Decomposition dec;
  for (int v = 0; v < gd.n; ++v)
    if (in_deg[v] == 0) {
      is_out[v] = 1;  // packet cached nowhere: must go uncoded
      dec.uncached.push_back(v);
    }

  UndirectedSIGraph gu = underlying_undirected(gd);
  for (int v = 0; v < gd.n; ++v) {
    if (is_out[v]) continue;
    bool mutual = false;
    for (int w : gu.adj[v])
      if (!is_out[w]) mutual = true;  // zero in-degree vertices have no mutual edges anyway
    if (!mutual) {
      is_out[v] = 1;
      dec.isolated.push_back(v);
    }
  }

  std::vector<int> rest;
  for (int v = 0; v < gd.n; ++v)
    (is_out[v] ? dec.out_vertices : rest).push_back(v);
  dec.g2 = gu.induced(rest);
  dec.g2_ids = rest;
  for (int i = 0; i < gd.n; ++i)
    for (int j : gd.out[i])
      if (is_out[i] || is_out[j]) dec.removed_edges.emplace_back(i, j);
  return dec;
}

// True iff between every pair of partitions the induced subgraph of g2 is a
// complete join of the two mutually-visible sides plus isolated vertices,
// with no edges inside a partition.
inline bool check_complete_bipartite_structure(const Decomposition& dec) {
  const UndirectedSIGraph& g = dec.g2;
  std::vector<int> labels;
  for (int v = 0; v < g.n; ++v) {
    if (g.partition[v] < 0) throw error("bipartite check: vertex without partition label");
    labels.push_back(g.partition[v]);
  }
  labels = sorted_unique(labels);
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v])
      if (g.partition[v] == g.partition[w]) return false;
  for (size_t a = 0; a < labels.size(); ++a) {
    for (size_t b = a + 1; b < labels.size(); ++b) {
      std::vector<int> ya, yb;
      for (int v = 0; v < g.n; ++v) {
        if (g.partition[v] != labels[a] && g.partition[v] != labels[b]) continue;
        bool linked = false;
        for (int w : g.adj[v])
          if (g.partition[w] == (g.partition[v] == labels[a] ? labels[b] : labels[a])) linked = true;
        if (!linked) continue;
        (g.partition[v] == labels[a] ? ya : yb).push_back(v);
      }
      for (int v : ya)
        for (int w : yb)
          if (!g.has_edge(v, w)) return false;
    }
  }
  return true;
}

namespace detail {

inline bool odd_hole_dfs(const UndirectedSIGraph& g, std::vector<int>& path,
                         std::vector<char>& in_path, int max_len) {
  int tail = path.back(), start = path.front();
  if ((int)path.size() >= 4 && path.size() % 2 == 0 && (int)path.size() + 1 <= max_len) {
    // One more vertex would close an odd cycle; look for a closer.
    for (int u : g.adj[tail]) {
      if (u <= start || in_path[u] || !g.has_edge(u, start)) continue;
      bool chord = false;
      for (size_t i = 1; i + 1 < path.size() && !chord; ++i)
        if (g.has_edge(u, path[i])) chord = true;
      if (!chord) {
        path.push_back(u);
        return true;
      }
    }
  }
  if ((int)path.size() + 1 >= max_len) return false;
  for (int u : g.adj[tail]) {
    if (u <= start || in_path[u]) continue;
    bool chord = false;  // u may touch only the tail (start allowed when closing later)
    for (size_t i = 0; i + 1 < path.size() && !chord; ++i)
      if (g.has_edge(u, path[i])) chord = true;
    if (chord) continue;
    path.push_back(u);
    in_path[u] = 1;
    if (odd_hole_dfs(g, path, in_path, max_len)) return true;
    in_path[u] = 0;
    path.pop_back();
  }
  return false;
}

}  // namespace detail

// Smallest-start induced odd cycle of length >= 5 (up to max_len), if any.
inline std::optional<std::vector<int>> find_odd_hole(const UndirectedSIGraph& g, int max_len = 0) {
  if (g.n > 40) throw error("find_odd_hole: graph too large (40-vertex bound)");
  if (max_len <= 0) max_len = g.n;
  std::vector<char> in_path(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> path{s};
    in_path.assign(g.n, 0);
    in_path[s] = 1;
    if (detail::odd_hole_dfs(g, path, in_path, max_len)) return path;
  }
  return std::nullopt;
}

inline std::optional<std::vector<int>> find_odd_antihole(const UndirectedSIGraph& g,
                                                         int max_len = 0) {
  return find_odd_hole(g.complement(), max_len);
}

}  // namespace ich
