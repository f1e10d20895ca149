#pragma once

// Shared fixtures and random-instance generators for the test suites and the
// acceptance runner. Header-only, framework-free: included by Catch2 suites
// and by the plain acceptance binary alike.

#include <random>
#include <utility>
#include <vector>

#include "ich/geometry.hpp"
#include "ich/instance.hpp"

namespace ich::testsupport {

// Builds a raw helper network from (cache, neighborhood) pairs and reduces it
// to canonical form.
inline CanonicalInstance make_instance(
    int n, std::vector<std::pair<std::vector<int>, std::vector<int>>> hs,
    const char* src) {
  HelperNetwork net;
  net.n_users = n;
  for (auto& [cache, nbhd] : hs) net.helpers.push_back(Helper{cache, nbhd});
  net.meta.source = src;
  net.normalize();
  return union_expansion(net);
}

// Seven users, two helpers, mutual side information only between the two
// served pairs {1,2} and {4,5}; users 0, 3, 6 are cached but unserved.
// The reduced core is the complete bipartite graph K_{2,2}.
inline CanonicalInstance seven_user_two_helper() {
  return make_instance(7, {{{0, 1, 2, 3}, {4, 5}}, {{4, 5, 6}, {1, 2}}},
                       "seven-user-two-helper");
}

// Five users across four helpers whose reduced core is a chordless 5-cycle:
// the smallest instance where the fractional relaxation (5/2) beats every
// integral scheme (3) while the uncoded baseline needs 5.
inline CanonicalInstance pentagon_witness() {
  return make_instance(5,
                       {{{1, 3, 4}, {0, 2}},
                        {{0, 2}, {1}},
                        {{2, 4}, {3}},
                        {{0, 3}, {4}}},
                       "pentagon-witness");
}

// Three users whose side information forms a directed 3-cycle with no mutual
// pair: every vertex is isolated after reduction, yet the directed structure
// still admits a 2-transmission linear code.
inline CanonicalInstance one_way_triangle() {
  return make_instance(3, {{{1}, {0}}, {{2}, {1}}, {{0}, {2}}},
                       "one-way-triangle");
}

// Random canonical instance: each user is covered with probability cover_p by
// a uniformly chosen helper; every helper caches each non-own packet with
// probability cache_p. Retries until the reduced instance keeps k helpers.
inline CanonicalInstance random_instance(std::mt19937_64& rng, int k, int n,
                                         double cache_p, double cover_p) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    HelperNetwork net;
    net.n_users = n;
    net.helpers.assign(k, {});
    std::vector<int> owner(n, -1);
    for (int u = 0; u < n; ++u) {
      if (std::uniform_real_distribution<>(0, 1)(rng) > cover_p) continue;
      owner[u] = (int)(rng() % k);
      net.helpers[owner[u]].neighborhood.push_back(u);
    }
    for (int j = 0; j < k; ++j)
      for (int u = 0; u < n; ++u)
        if (owner[u] != j && std::uniform_real_distribution<>(0, 1)(rng) < cache_p)
          net.helpers[j].cache.push_back(u);
    net.normalize();
    bool live = true;
    for (const Helper& h : net.helpers)
      if (h.neighborhood.empty()) live = false;  // keep k() == k after reduction
    if (!live) continue;
    CanonicalInstance canon = union_expansion(net);
    if (canon.k() != k) continue;
    canon.meta.source = "random";
    return canon;
  }
  throw error("random_instance: no valid draw");
}

// Random two-helper instance with disjoint caches covering every packet, so
// |C1| + |C2| = n and the closed-form optimum applies directly.
inline CanonicalInstance random_two_helper(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> s1, s2, c1, c2;
    for (int u = 0; u < n; ++u) {
      switch (rng() % 3) {
        case 0: s1.push_back(u); c2.push_back(u); break;  // served by h1 => cached at h2
        case 1: s2.push_back(u); c1.push_back(u); break;
        default: (rng() % 2 ? c1 : c2).push_back(u); break;  // unserved user
      }
    }
    if (s1.empty() || s2.empty() || c1.empty() || c2.empty()) continue;
    CanonicalInstance canon = make_instance(n, {{c1, s1}, {c2, s2}}, "random-k2");
    if (canon.k() != 2) continue;
    return canon;
  }
  throw error("random_two_helper: no valid draw");
}

// Unconstrained raw network fuzzing: arbitrary neighborhoods, caches avoiding
// only the own-request rule. Exercises the full reduce -> solve -> verify path.
inline CanonicalInstance random_raw_reduced(std::mt19937_64& rng, int k, int n) {
  HelperNetwork net;
  net.n_users = n;
  net.helpers.assign(k, {});
  for (int j = 0; j < k; ++j)
    for (int u = 0; u < n; ++u)
      if (rng() % 3 == 0) net.helpers[j].neighborhood.push_back(u);
  for (int j = 0; j < k; ++j) {
    for (int u = 0; u < n; ++u)
      if (rng() % 3 == 0 && !contains_sorted(net.helpers[j].neighborhood, u))
        net.helpers[j].cache.push_back(u);
  }
  net.normalize();
  return union_expansion(net);
}

// Random disk layout kept within a target ply by rejection: candidate disks
// are appended and dropped again whenever they would push the measured ply
// over d. Returns a layout with exactly k disks, or throws after the guard.
inline GeometricLayout random_bounded_ply_layout(std::mt19937_64& rng, int d,
                                                 int k) {
  GeometricLayout lay;
  lay.d_ply = d;
  std::uniform_real_distribution<> pos(0.0, 10.0), rad(0.5, 3.0);
  int guard = 0;
  while ((int)lay.helper_disks.size() < k && guard < 4000) {
    ++guard;
    Disk cand{pos(rng), pos(rng), rad(rng)};
    lay.helper_disks.push_back(cand);
    if (measured_ply(lay) > d) lay.helper_disks.pop_back();
  }
  if ((int)lay.helper_disks.size() < k)
    throw error("random_bounded_ply_layout: rejection guard exhausted");
  return lay;
}

}  // namespace ich::testsupport
