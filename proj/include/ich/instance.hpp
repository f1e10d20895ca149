#pragma once

// Instance model for broadcast index coding with cache-equipped helpers.
//
// Users 0..n-1 each request one distinct packet; packet id i is user i's
// request throughout, so helper caches are sets of user ids (ids outside
// [0,n) are legal in a raw network and simply belong to no one). A raw
// HelperNetwork may attach a user to several helpers; union expansion
// rewrites it into the canonical disjoint-helper form solvers consume.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ich/util.hpp"

namespace ich {

struct Helper {
  std::vector<int> cache;         // sorted packet ids
  std::vector<int> neighborhood;  // sorted user ids
};

struct Meta {
  std::optional<long long> seed;
  std::string source = "raw";
};

struct HelperNetwork {
  int n_users = 0;
  std::vector<Helper> helpers;
  Meta meta;

  void normalize() {
    for (Helper& h : helpers) {
      h.cache = sorted_unique(std::move(h.cache));
      h.neighborhood = sorted_unique(std::move(h.neighborhood));
    }
  }
};

struct ValidationReport {
  // (user, helper) pairs where a user's own request sits in its helper's cache.
  std::vector<std::pair<int, int>> cache_hits;
  // (helper, user) pairs with a neighborhood entry outside [0, n).
  std::vector<std::pair<int, int>> bad_users;

  bool ok() const { return cache_hits.empty() && bad_users.empty(); }
};

// Checks the cache-miss discipline: no helper may cache a packet requested
// inside its own neighborhood. Cache entries no user requested are ignored.
inline ValidationReport validate_ich(const HelperNetwork& net) {
  ValidationReport rep;
  for (size_t j = 0; j < net.helpers.size(); ++j) {
    const Helper& h = net.helpers[j];
    for (int u : h.neighborhood) {
      if (u < 0 || u >= net.n_users) {
        rep.bad_users.emplace_back((int)j, u);
        continue;
      }
      if (contains_sorted(h.cache, u)) rep.cache_hits.emplace_back(u, (int)j);
    }
  }
  return rep;
}

// Which original helpers fed each virtual helper of a canonical instance.
struct Provenance {
  std::vector<std::vector<int>> subsets;  // one sorted original-index set per merged group
};

struct CanonicalInstance {
  int n_users = 0;
  std::vector<Helper> helpers;  // disjoint neighborhoods, caches within [0,n)
  std::vector<Provenance> provenance;  // empty when unknown (e.g. loaded from disk)
  Meta meta;

  int k() const { return (int)helpers.size(); }

  // -1 for users attached to no helper.
  std::vector<int> helper_of_users() const {
    std::vector<int> owner(n_users, -1);
    for (size_t j = 0; j < helpers.size(); ++j)
      for (int u : helpers[j].neighborhood) {
        if (u < 0 || u >= n_users) throw error("canonical instance: user id out of range");
        if (owner[u] != -1) throw error("canonical instance: overlapping neighborhoods");
        owner[u] = (int)j;
      }
    return owner;
  }

  std::vector<int> uncovered() const {
    std::vector<int> owner = helper_of_users(), out;
    for (int u = 0; u < n_users; ++u)
      if (owner[u] == -1) out.push_back(u);
    return out;
  }

  // Throws unless all canonical invariants hold.
  void validate() const {
    (void)helper_of_users();
    for (size_t j = 0; j < helpers.size(); ++j) {
      const Helper& h = helpers[j];
      for (int p : h.cache)
        if (p < 0 || p >= n_users) throw error("canonical instance: cache id out of range");
      if (!intersect_sorted(h.cache, h.neighborhood).empty())
        throw error("canonical instance: helper caches a packet its own user requests");
      for (size_t l = j + 1; l < helpers.size(); ++l)
        if (helpers[l].cache == h.cache) throw error("canonical instance: duplicate caches");
    }
  }
};

// Rewrites a (possibly overlapping) helper network into canonical form: one
// virtual helper per realized connected-helper set M, caching the union of
// the members' caches; virtual helpers that end up with identical caches are
// merged. Per-user side information is preserved exactly.
inline CanonicalInstance union_expansion(const HelperNetwork& net) {
  ValidationReport rep = validate_ich(net);
  if (!rep.ok()) throw error("union_expansion: network fails validation");

  std::map<std::vector<int>, std::vector<int>> by_connected;  // helper set -> users
  {
    std::vector<std::vector<int>> connected(net.n_users);
    for (size_t j = 0; j < net.helpers.size(); ++j)
      for (int u : net.helpers[j].neighborhood) connected[u].push_back((int)j);
    for (int u = 0; u < net.n_users; ++u)
      if (!connected[u].empty()) by_connected[connected[u]].push_back(u);
  }

  struct Group {
    std::vector<int> users;
    std::vector<std::vector<int>> subsets;
  };
  std::map<std::vector<int>, Group> by_cache;  // canonical cache -> merged group
  for (auto& [subset, users] : by_connected) {
    std::vector<int> cache;
    for (int j : subset) cache = union_sorted(cache, net.helpers[j].cache);
    // Keep only ids some user actually requests.
    std::vector<int> canon;
    for (int p : cache)
      if (p >= 0 && p < net.n_users) canon.push_back(p);
    Group& g = by_cache[canon];
    for (int u : users) g.users.push_back(u);
    g.subsets.push_back(subset);
  }

  CanonicalInstance inst;
  inst.n_users = net.n_users;
  inst.meta = net.meta;
  std::vector<std::pair<int, const std::vector<int>*>> order;  // (min user, cache key)
  for (auto& [cache, g] : by_cache) {
    std::sort(g.users.begin(), g.users.end());
    order.emplace_back(g.users.front(), &cache);
  }
  std::sort(order.begin(), order.end());
  for (auto& [minu, key] : order) {
    Group& g = by_cache[*key];
    inst.helpers.push_back(Helper{*key, g.users});
    inst.provenance.push_back(Provenance{g.subsets});
  }
  return inst;
}

// Popularity sampler over ranks 1..library with P(r) proportional to
// r^(-s). Inverse-CDF over a cumulative table: deterministic everywhere.
class ZipfSampler {
 public:
  ZipfSampler(int library, double s) : cum_(library) {
    if (library <= 0) throw error("zipf: library must be positive");
    double acc = 0;
    for (int r = 1; r <= library; ++r) {
      acc += std::pow((double)r, -s);
      cum_[r - 1] = acc;
    }
    total_ = acc;
  }

  // 0-based file id.
  int draw(std::mt19937_64& rng) const {
    double u = (double)(rng() >> 11) * 0x1.0p-53 * total_;
    return (int)(std::lower_bound(cum_.begin(), cum_.end(), u) - cum_.begin());
  }

 private:
  std::vector<double> cum_;
  double total_ = 0;
};

// Random cache-aided instance: k helpers with `cache` distinct Zipf-sampled
// files each, users_per_helper users per helper whose requests are globally
// distinct, Zipf-sampled, and guaranteed to miss their own helper's cache.
inline CanonicalInstance zipf_instance(int library, double s, int k, int users_per_helper,
                                       int cache, std::uint64_t seed) {
  if (k <= 0 || users_per_helper <= 0) throw error("zipf_instance: need k > 0 and users > 0");
  if (cache < 0 || cache > library) throw error("zipf_instance: cache size out of range");
  long long want = (long long)k * users_per_helper;
  if ((long long)library - cache < users_per_helper || library < want)
    throw error("zipf_instance: library too small for distinct cache-missing requests");

  std::mt19937_64 rng(seed);
  ZipfSampler zipf(library, s);

  std::vector<std::vector<char>> in_cache(k, std::vector<char>(library, 0));
  std::vector<std::vector<int>> caches(k);
  for (int j = 0; j < k; ++j) {
    while ((int)caches[j].size() < cache) {
      int f = zipf.draw(rng);
      if (!in_cache[j][f]) {
        in_cache[j][f] = 1;
        caches[j].push_back(f);
      }
    }
  }

  int n = k * users_per_helper;
  std::vector<char> requested(library, 0);
  std::vector<int> request(n);
  long long rejections = 0;
  for (int u = 0; u < n; ++u) {
    int j = u / users_per_helper;
    for (;;) {
      int f = zipf.draw(rng);
      if (requested[f] || in_cache[j][f]) {  // duplicates and cache hits resampled
        if (++rejections > 50'000'000LL)
          throw error("zipf_instance: resampling budget exhausted (caches leave too few files)");
        continue;
      }
      requested[f] = 1;
      request[u] = f;
      break;
    }
  }

  // Map file-id caches into user-id space and fold into canonical form.
  std::vector<int> owner_of_file(library, -1);
  for (int u = 0; u < n; ++u) owner_of_file[request[u]] = u;
  HelperNetwork net;
  net.n_users = n;
  net.meta.seed = (long long)seed;
  net.meta.source = "zipf";
  for (int j = 0; j < k; ++j) {
    Helper h;
    for (int f : caches[j])
      if (owner_of_file[f] >= 0) h.cache.push_back(owner_of_file[f]);
    for (int u = j * users_per_helper; u < (j + 1) * users_per_helper; ++u)
      h.neighborhood.push_back(u);
    net.helpers.push_back(std::move(h));
  }
  net.normalize();
  return union_expansion(net);
}

}  // namespace ich
