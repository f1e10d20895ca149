#pragma once

// Concrete broadcast codes over GF(2), end-to-end decode simulation, and a
// brute-force minimum-rank oracle for the directed side-information graph.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ich/sigraph.hpp"
#include "ich/util.hpp"

namespace ich {

// Scalar code: each transmission XORs the packets of a set of users. The
// t x n generator over GF(2) must have exactly one nonzero per column, so
// "transmissions" lists each user id exactly once overall.
struct XorCode {
  int n_users = 0;
  std::vector<std::vector<int>> transmissions;  // sorted user ids per row

  int t() const { return (int)transmissions.size(); }
};

// Vector code: packets split into p sub-packets; each transmission XORs a
// set of (user, sub-packet) slots. Every slot appears in exactly one row.
struct VectorXorCode {
  int n_users = 0;
  int p = 1;
  std::vector<std::vector<std::pair<int, int>>> transmissions;

  int t() const { return (int)transmissions.size(); }
};

struct MinrankResult {
  int value = 0;
  // Fitting-matrix witness: per row, sorted column indices of its ones.
  std::vector<std::vector<int>> witness;
};

// ---------------------------------------------------------------------------
// GF(2) linear algebra on word-packed rows.

inline int gf2_rank(std::vector<std::vector<uint64_t>> rows) {
  int words = rows.empty() ? 0 : (int)rows[0].size();
  int rank = 0;
  for (int col = 0; col < words * 64; ++col) {
    int w = col >> 6;
    uint64_t bit = 1ull << (col & 63);
    int pivot = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][w] & bit) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < (int)rows.size(); ++r)
      if (r != rank && (rows[r][w] & bit))
        for (int j = 0; j < words; ++j) rows[r][j] ^= rows[rank][j];
    ++rank;
  }
  return rank;
}

namespace detail {

// Rank of single-word rows, giving up early once `cap` pivots are found
// (callers that only need "is rank < cap" can prune).
inline int gf2_rank_word_capped(const uint64_t* rows, int m, int cap) {
  uint64_t work[64];
  for (int i = 0; i < m; ++i) work[i] = rows[i];
  int rank = 0;
  for (int r = 0; r < m && rank < cap; ++r) {
    if (!work[r]) continue;
    uint64_t low = work[r] & (~work[r] + 1);
    for (int s = r + 1; s < m; ++s)
      if (work[s] & low) work[s] ^= work[r];
    ++rank;
  }
  return rank;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalar verification and simulation.

// A code is structurally valid when every user participates in exactly one
// transmission and every transmission's participants pairwise know each
// other's packets (a clique of the undirected side-information graph).
inline bool verify_xor_code(const XorCode& code, const DirectedSIGraph& gd) {
  if (code.n_users != gd.n) return false;
  std::vector<int> uses(gd.n, 0);
  for (const auto& row : code.transmissions) {
    for (int u : row) {
      if (u < 0 || u >= gd.n) return false;
      ++uses[u];
    }
    for (size_t a = 0; a < row.size(); ++a)
      for (size_t b = a + 1; b < row.size(); ++b)
        if (!gd.has_edge(row[a], row[b]) || !gd.has_edge(row[b], row[a]))
          return false;
  }
  for (int u = 0; u < gd.n; ++u)
    if (uses[u] != 1) return false;
  return true;
}

// Draws random word payloads, broadcasts, and lets each user cancel the
// side information it actually holds. True iff every user recovers its
// packet in every trial.
inline bool simulate_decode(const XorCode& code, const DirectedSIGraph& gd,
                            int trials, uint64_t seed) {
  if (!verify_xor_code(code, gd)) return false;
  std::vector<int> row_of(gd.n, -1);
  for (int r = 0; r < code.t(); ++r)
    for (int u : code.transmissions[r]) row_of[u] = r;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<uint64_t> x(gd.n);
    for (auto& v : x) v = rng();
    std::vector<uint64_t> y(code.t(), 0);
    for (int r = 0; r < code.t(); ++r)
      for (int u : code.transmissions[r]) y[r] ^= x[u];
    for (int u = 0; u < gd.n; ++u) {
      uint64_t got = y[row_of[u]];
      for (int v : code.transmissions[row_of[u]]) {
        if (v == u) continue;
        if (!gd.has_edge(u, v)) return false;  // cannot cancel unknown packet
        got ^= x[v];
      }
      if (got != x[u]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Vector verification and simulation: each (user, sub-packet) slot is a
// virtual user whose side information is every sub-packet of the packets
// its owner holds.

inline bool verify_vector_code(const VectorXorCode& code,
                               const DirectedSIGraph& gd) {
  if (code.n_users != gd.n || code.p < 1) return false;
  std::vector<int> uses((size_t)gd.n * code.p, 0);
  for (const auto& row : code.transmissions) {
    std::vector<int> users;
    for (auto [u, s] : row) {
      if (u < 0 || u >= gd.n || s < 0 || s >= code.p) return false;
      ++uses[(size_t)u * code.p + s];
      users.push_back(u);
    }
    std::sort(users.begin(), users.end());
    if (std::adjacent_find(users.begin(), users.end()) != users.end())
      return false;  // two slots of one packet in a row defeat cancellation
    for (size_t a = 0; a < users.size(); ++a)
      for (size_t b = a + 1; b < users.size(); ++b)
        if (!gd.has_edge(users[a], users[b]) || !gd.has_edge(users[b], users[a]))
          return false;
  }
  for (int c : uses)
    if (c != 1) return false;
  return true;
}

inline bool simulate_decode(const VectorXorCode& code,
                            const DirectedSIGraph& gd, int trials,
                            uint64_t seed) {
  if (!verify_vector_code(code, gd)) return false;
  auto slot = [&](int u, int s) { return (size_t)u * code.p + s; };
  std::vector<int> row_of((size_t)gd.n * code.p, -1);
  for (int r = 0; r < code.t(); ++r)
    for (auto [u, s] : code.transmissions[r]) row_of[slot(u, s)] = r;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<uint64_t> x((size_t)gd.n * code.p);
    for (auto& v : x) v = rng();
    std::vector<uint64_t> y(code.t(), 0);
    for (int r = 0; r < code.t(); ++r)
      for (auto [u, s] : code.transmissions[r]) y[r] ^= x[slot(u, s)];
    for (int u = 0; u < gd.n; ++u)
      for (int s = 0; s < code.p; ++s) {
        int r = row_of[slot(u, s)];
        uint64_t got = y[r];
        for (auto [v, sv] : code.transmissions[r]) {
          if (v == u) continue;
          if (!gd.has_edge(u, v)) return false;
          got ^= x[slot(v, sv)];
        }
        if (got != x[slot(u, s)]) return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Minimum rank over GF(2) of matrices fitting the side-information pattern:
// unit diagonal, entry (i,j) free iff the directed edge (i,j) exists, zero
// elsewhere. Exhaustive over all 2^|E| settings of the free entries.

inline MinrankResult minrank_bruteforce(const DirectedSIGraph& gd) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < gd.n; ++i)
    for (int j : gd.out[i])
      if (j != i) edges.push_back({i, j});  // diagonal is fixed at one anyway
  if ((int)edges.size() > 22)
    throw error("minrank_bruteforce: more than 22 free entries");

  // Vertices with no incident edge contribute a forced identity row on a
  // private coordinate: rank adds one each, independently of the rest.
  std::vector<char> active(gd.n, 0);
  for (auto [i, j] : edges) active[i] = active[j] = 1;
  std::vector<int> id(gd.n, -1), back;
  for (int v = 0; v < gd.n; ++v)
    if (active[v]) {
      id[v] = (int)back.size();
      back.push_back(v);
    }
  int na = (int)back.size();  // <= 44: every active vertex touches an edge
  int stripped = gd.n - na;

  MinrankResult res;
  if (na == 0) {
    res.value = stripped;
    for (int v = 0; v < gd.n; ++v) res.witness.push_back({v});
    return res;
  }

  std::vector<uint64_t> rows(na);
  for (int a = 0; a < na; ++a) rows[a] = 1ull << a;
  int f = (int)edges.size();
  int best = na + 1;
  std::vector<uint64_t> best_rows;
  uint64_t total = 1ull << f;
  for (uint64_t s = 0;; ++s) {
    int r = detail::gf2_rank_word_capped(rows.data(), na, best);
    if (r < best) {
      best = r;
      best_rows = rows;
      if (best == 1) break;
    }
    if (s + 1 == total) break;
    int bit = std::countr_zero(s + 1);  // gray-code step: flip one entry
    rows[id[edges[bit].first]] ^= 1ull << id[edges[bit].second];
  }

  res.value = best + stripped;
  res.witness.assign(gd.n, {});
  for (int v = 0; v < gd.n; ++v) {
    if (id[v] < 0) {
      res.witness[v] = {v};
      continue;
    }
    for (int a = 0; a < na; ++a)
      if (best_rows[id[v]] >> a & 1) res.witness[v].push_back(back[a]);
  }
  return res;
}

}  // namespace ich
