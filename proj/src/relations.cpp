#include "robustmo/relations.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace robustmo {

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::StrictLower: return "strict_lower";
    case RelationKind::Lower: return "lower";
    case RelationKind::StrictUpper: return "strict_upper";
    case RelationKind::Upper: return "upper";
  }
  throw std::logic_error("unreachable relation kind");
}

double psi(const PointCloud& a_set, const Point& y) {
  const std::size_t m = require_cloud(a_set);
  if (y.size() != m) {
    throw std::invalid_argument("psi: point dimension does not match cloud");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Point& a : a_set) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      worst = std::max(worst, y[j] - a[j]);
    }
    best = std::min(best, worst);
  }
  return best;
}

namespace {

bool covered(const PointCloud& members, const PointCloud& cover,
             bool strict) {
  for (const Point& a : members) {
    bool found = false;
    for (const Point& b : cover) {
      if (strict ? strictly_less(a, b) : leq(a, b)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool holds(RelationKind kind, const PointCloud& A, const PointCloud& B) {
  const std::size_t ma = require_cloud(A);
  const std::size_t mb = require_cloud(B);
  if (ma != mb) {
    throw std::invalid_argument("holds: clouds have different dimensions");
  }
  switch (kind) {
    case RelationKind::StrictUpper: return covered(A, B, /*strict=*/true);
    case RelationKind::Upper: return covered(A, B, /*strict=*/false);
    case RelationKind::StrictLower: {
      // every b in B strictly dominated from below by some a in A
      for (const Point& b : B) {
        bool found = false;
        for (const Point& a : A) {
          if (strictly_less(a, b)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    }
    case RelationKind::Lower: {
      for (const Point& b : B) {
        bool found = false;
        for (const Point& a : A) {
          if (leq(a, b)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    }
  }
  throw std::logic_error("unreachable relation kind");
}

std::optional<double> certify_strict_upper(const PointCloud& A,
                                           const PointCloud& B) {
  const std::size_t ma = require_cloud(A);
  const std::size_t mb = require_cloud(B);
  if (ma != mb) {
    throw std::invalid_argument(
        "certify_strict_upper: clouds have different dimensions");
  }
  double sup = -std::numeric_limits<double>::infinity();
  for (const Point& a : A) {
    sup = std::max(sup, psi(B, a));
  }
  const double eps = -sup;
  if (eps > 0.0) return eps;
  return std::nullopt;
}

std::string to_string(RegionPosition pos) {
  switch (pos) {
    case RegionPosition::InsideLowerSet: return "inside_lower_set";
    case RegionPosition::Boundary: return "boundary";
    case RegionPosition::OutsideLowerSet: return "outside_lower_set";
  }
  throw std::logic_error("unreachable region position");
}

RegionPosition complement_closure_position(const PointCloud& A,
                                           const Point& y) {
  const double value = psi(A, y);
  if (value < 0.0) return RegionPosition::InsideLowerSet;
  if (value > 0.0) return RegionPosition::OutsideLowerSet;
  return RegionPosition::Boundary;
}

}  // namespace robustmo
