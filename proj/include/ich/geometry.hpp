#pragma once

// Geometric helper layouts: disks of coverage, users as points, realization
// of a helper network from geometry, and enumeration of all helper subsets
// whose disks share a common point, with the d-ply combinatorial bound.
//
// Geometric predicates are evaluated only at a finite candidate set: every
// nonempty intersection of disks, if it exists, contains a pairwise
// circle-circle intersection point or the center of a disk contained in all
// the others. Testing these candidates is therefore exact up to the
// tangency tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "ich/instance.hpp"
#include "ich/util.hpp"

namespace ich {

struct Disk {
  double x = 0, y = 0, r = 0;
};

struct GeometricLayout {
  std::vector<Disk> helper_disks;
  std::vector<std::pair<double, double>> user_points;
  int d_ply = 1;
};

inline constexpr double kGeomTolerance = 1e-9;

namespace detail {

inline bool disk_contains(const Disk& d, double px, double py, double tol) {
  double dx = px - d.x, dy = py - d.y;
  return std::sqrt(dx * dx + dy * dy) <= d.r + tol;
}

// All pairwise circle-circle intersection points plus all centers.
inline std::vector<std::pair<double, double>> candidate_points(
    const GeometricLayout& layout) {
  std::vector<std::pair<double, double>> pts;
  const auto& disks = layout.helper_disks;
  for (const Disk& d : disks) pts.push_back({d.x, d.y});
  for (size_t i = 0; i < disks.size(); ++i)
    for (size_t j = i + 1; j < disks.size(); ++j) {
      double dx = disks[j].x - disks[i].x, dy = disks[j].y - disks[i].y;
      double d2 = dx * dx + dy * dy;
      double dist = std::sqrt(d2);
      if (dist < kGeomTolerance) continue;  // concentric: no boundary crossing
      double r0 = disks[i].r, r1 = disks[j].r;
      if (dist > r0 + r1 + kGeomTolerance) continue;
      if (dist < std::abs(r0 - r1) - kGeomTolerance) continue;
      double a = (d2 + r0 * r0 - r1 * r1) / (2 * dist);
      double h2 = r0 * r0 - a * a;
      double h = h2 > 0 ? std::sqrt(h2) : 0;
      double mx = disks[i].x + a * dx / dist, my = disks[i].y + a * dy / dist;
      pts.push_back({mx + h * dy / dist, my - h * dx / dist});
      pts.push_back({mx - h * dy / dist, my + h * dx / dist});
    }
  return pts;
}

inline std::vector<int> cover_set(const GeometricLayout& layout, double px,
                                  double py, double tol) {
  std::vector<int> cov;
  for (size_t j = 0; j < layout.helper_disks.size(); ++j)
    if (disk_contains(layout.helper_disks[j], px, py, tol)) cov.push_back((int)j);
  return cov;
}

}  // namespace detail

inline void validate_layout(const GeometricLayout& layout) {
  for (const Disk& d : layout.helper_disks)
    if (!(d.r > 0)) throw error("layout: disk radius must be positive");
  if (layout.d_ply < 1) throw error("layout: ply must be at least 1");
}

// Maximum number of disks sharing a point, measured at the candidate set.
inline int measured_ply(const GeometricLayout& layout) {
  validate_layout(layout);
  int best = 0;
  for (auto [px, py] : detail::candidate_points(layout))
    best = std::max(best, (int)detail::cover_set(layout, px, py, kGeomTolerance).size());
  return best;
}

// Realizes connectivity from geometry: user i is in helper j's neighborhood
// iff it lies inside disk j (boundary counts). Caches are not geometric and
// are supplied by the caller; omitted caches stay empty.
inline HelperNetwork geometric_instance(
    const GeometricLayout& layout,
    const std::vector<std::vector<int>>& caches = {}) {
  validate_layout(layout);
  if (!caches.empty() && caches.size() != layout.helper_disks.size())
    throw error("geometric_instance: one cache per helper required");
  HelperNetwork net;
  net.n_users = (int)layout.user_points.size();
  net.meta.source = "geometric";
  for (size_t j = 0; j < layout.helper_disks.size(); ++j) {
    Helper h;
    if (!caches.empty()) h.cache = caches[j];
    for (int i = 0; i < net.n_users; ++i)
      if (detail::disk_contains(layout.helper_disks[j], layout.user_points[i].first,
                                layout.user_points[i].second, kGeomTolerance))
        h.neighborhood.push_back(i);
    net.helpers.push_back(std::move(h));
  }
  net.normalize();
  return net;
}

struct IntersectionFamily {
  std::vector<std::vector<int>> sets;  // sorted subsets, lexicographic order
  long long bound = 0;                 // d * C(9d, d-1) * k
  bool within_bound = false;
};

inline long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Every nonempty subset of a candidate point's cover set has that point in
// common, and every intersecting family member arises this way.
inline IntersectionFamily enumerate_intersecting_sets(const GeometricLayout& layout) {
  validate_layout(layout);
  IntersectionFamily fam;
  std::vector<std::vector<int>> found;
  for (auto [px, py] : detail::candidate_points(layout)) {
    std::vector<int> cov = detail::cover_set(layout, px, py, kGeomTolerance);
    if (cov.empty() || cov.size() > 63) continue;
    for (uint64_t m = 1; m < (1ull << cov.size()); ++m) {
      std::vector<int> sub;
      for (size_t b = 0; b < cov.size(); ++b)
        if (m >> b & 1) sub.push_back(cov[b]);
      found.push_back(std::move(sub));
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  fam.sets = std::move(found);
  int d = layout.d_ply, k = (int)layout.helper_disks.size();
  fam.bound = (long long)d * binomial_ll(9 * d, d - 1) * k;
  fam.within_bound = (long long)fam.sets.size() <= fam.bound;
  return fam;
}

// Dense-grid sampling oracle over the layout's bounding box: slower, fully
// independent of the candidate-point argument. Used to cross-check.
inline std::vector<std::vector<int>> grid_intersecting_sets(
    const GeometricLayout& layout, int resolution) {
  validate_layout(layout);
  if (layout.helper_disks.empty()) return {};
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const Disk& d : layout.helper_disks) {
    x0 = std::min(x0, d.x - d.r);
    x1 = std::max(x1, d.x + d.r);
    y0 = std::min(y0, d.y - d.r);
    y1 = std::max(y1, d.y + d.r);
  }
  std::vector<std::vector<int>> found;
  for (int ix = 0; ix <= resolution; ++ix)
    for (int iy = 0; iy <= resolution; ++iy) {
      double px = x0 + (x1 - x0) * ix / resolution;
      double py = y0 + (y1 - y0) * iy / resolution;
      std::vector<int> cov = detail::cover_set(layout, px, py, 0.0);
      if (cov.empty() || cov.size() > 63) continue;
      for (uint64_t m = 1; m < (1ull << cov.size()); ++m) {
        std::vector<int> sub;
        for (size_t b = 0; b < cov.size(); ++b)
          if (m >> b & 1) sub.push_back(cov[b]);
        found.push_back(std::move(sub));
      }
    }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

// True when the family has a point lying inside every member disk with at
// least `margin` to spare; such sets must also be visible to a grid whose
// spacing is below the margin.
inline bool has_interior_witness(const GeometricLayout& layout,
                                 const std::vector<int>& set, double margin) {
  for (auto [px, py] : detail::candidate_points(layout)) {
    bool ok = true;
    for (int j : set) {
      const Disk& d = layout.helper_disks[j];
      double dx = px - d.x, dy = py - d.y;
      if (std::sqrt(dx * dx + dy * dy) > d.r - margin) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace ich
