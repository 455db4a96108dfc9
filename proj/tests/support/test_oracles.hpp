// Shared test-side oracles and generators. Everything here is independent
// of the library's algorithmic paths: Pareto filters are re-derived by
// dominator counting, staircases are cross-checked on dense grids, and the
// orthant staircase corners (two objectives) come from the classic sorted
// sweep. Generators use a seed-stable uniform mapping.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "robustmo/points.hpp"
#include "robustmo/problem.hpp"

namespace testsupport {

using robustmo::Point;
using robustmo::PointCloud;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  std::size_t index(std::size_t count) {  // uniform on [0, count)
    return static_cast<std::size_t>(rng_() % count);
  }

  int int_range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1)));
  }

  Point point(std::size_t dim, double lo, double hi) {
    Point p(dim);
    for (double& v : p) v = range(lo, hi);
    return p;
  }

  PointCloud cloud(std::size_t count, std::size_t dim, double lo, double hi) {
    PointCloud c;
    c.reserve(count);
    for (std::size_t i = 0; i < count; ++i) p_back(c, point(dim, lo, hi));
    return c;
  }

  // Cloud with integer-valued coordinates: exercises ties and exact
  // comparisons.
  PointCloud lattice_cloud(std::size_t count, std::size_t dim, int lo,
                           int hi) {
    PointCloud c;
    for (std::size_t i = 0; i < count; ++i) {
      Point p(dim);
      for (double& v : p) v = static_cast<double>(int_range(lo, hi));
      c.push_back(std::move(p));
    }
    return c;
  }

 private:
  static void p_back(PointCloud& c, Point p) { c.push_back(std::move(p)); }
  std::mt19937_64 rng_;
};

// Independent Pareto-minimal filter: counts dominators instead of scanning
// for the first one, and dedupes via sorting.
inline PointCloud brute_pareto_min(const PointCloud& cloud) {
  PointCloud survivors;
  for (const Point& a : cloud) {
    int dominators = 0;
    for (const Point& b : cloud) {
      if (b == a) continue;
      bool all_leq = true;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (b[j] > a[j]) {
          all_leq = false;
          break;
        }
      }
      if (all_leq) ++dominators;
    }
    if (dominators == 0) survivors.push_back(a);
  }
  PointCloud unique;
  for (const Point& p : survivors) {
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) {
      unique.push_back(p);
    }
  }
  return unique;
}

// Pareto-minimal subset of a two-objective cloud by sorted sweep
// (O(N log N)); used for large grid restrictions.
inline PointCloud sweep_pareto_min_2d(PointCloud cloud) {
  std::sort(cloud.begin(), cloud.end(), [](const Point& a, const Point& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  PointCloud out;
  double best_second = std::numeric_limits<double>::infinity();
  for (const Point& p : cloud) {
    if (p[1] < best_second) {
      out.push_back(p);
      best_second = p[1];
    }
  }
  return out;
}

// Minimal points ("corners") of {y in [lb, ub] | y not strictly below any
// point of S} for two objectives and the plain box order: the classic
// staircase of the componentwise-maximal points of S, swept left to right.
inline PointCloud orthant_staircase_corners_2d(const PointCloud& S,
                                               const Point& lb) {
  PointCloud maximal = robustmo::pareto_max(S);
  std::sort(maximal.begin(), maximal.end(),
            [](const Point& a, const Point& b) { return a[0] < b[0]; });
  PointCloud corners;
  corners.push_back({lb[0], maximal.front()[1]});
  for (std::size_t i = 0; i + 1 < maximal.size(); ++i) {
    corners.push_back({maximal[i][0], maximal[i + 1][1]});
  }
  corners.push_back({maximal.back()[0], lb[1]});
  return corners;
}

// Uniform boundary discretization of a disk.
inline PointCloud disk_boundary(double cx, double cy, double radius,
                                std::size_t count) {
  PointCloud cloud;
  cloud.reserve(count);
  const double tau = 2.0 * std::acos(-1.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = tau * static_cast<double>(i) / static_cast<double>(count);
    cloud.push_back({cx + radius * std::cos(t), cy + radius * std::sin(t)});
  }
  return cloud;
}

// The documented three-decision demo instance: two scenarios, tabulated
// two-objective costs.
inline robustmo::UncertainInstance demo_instance() {
  robustmo::UncertainInstance inst;
  inst.name = "demo3";
  inst.n = 1;
  inst.m = 2;
  inst.k = 1;
  inst.omega = robustmo::SpaceSpec::explicit_points({{0.0}, {1.0}, {2.0}});
  inst.uncertainty = robustmo::SpaceSpec::explicit_points({{0.0}, {1.0}});
  inst.objective.kind = robustmo::ObjectiveSpec::Kind::Table;
  inst.objective.table = {
      {{1.0, 3.0}, {3.0, 1.0}},
      {{2.0, 2.0}, {2.0, 2.0}},
      {{4.0, 4.0}, {0.0, 0.0}},
  };
  robustmo::finalize_instance(inst);
  return inst;
}

inline bool cloud_close(const PointCloud& a, const PointCloud& b,
                        double tol) {
  if (a.size() != b.size()) return false;
  auto near = [tol](const Point& p, const Point& q) {
    if (p.size() != q.size()) return false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (std::fabs(p[j] - q[j]) > tol) return false;
    }
    return true;
  };
  for (const Point& p : a) {
    if (std::none_of(b.begin(), b.end(),
                     [&](const Point& q) { return near(p, q); })) {
      return false;
    }
  }
  for (const Point& q : b) {
    if (std::none_of(a.begin(), a.end(),
                     [&](const Point& p) { return near(p, q); })) {
      return false;
    }
  }
  return true;
}

}  // namespace testsupport
