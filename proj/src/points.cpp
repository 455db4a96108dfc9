#include "robustmo/points.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace robustmo {

void require_same_dimension(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

std::size_t require_cloud(const PointCloud& cloud) {
  if (cloud.empty()) {
    throw std::invalid_argument("point cloud must be nonempty");
  }
  const std::size_t dim = cloud.front().size();
  for (const Point& p : cloud) {
    if (p.size() != dim) {
      throw std::invalid_argument("point cloud has mixed dimensions");
    }
  }
  return dim;
}

bool strictly_less(const Point& a, const Point& b) {
  require_same_dimension(a, b);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(a[j] < b[j])) return false;
  }
  return true;
}

bool leq(const Point& a, const Point& b) {
  require_same_dimension(a, b);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(a[j] <= b[j])) return false;
  }
  return true;
}

namespace {

template <typename Keep>
PointCloud filter_undominated(const PointCloud& cloud, Keep dominated_by) {
  require_cloud(cloud);
  PointCloud out;
  for (const Point& a : cloud) {
    bool dominated = false;
    for (const Point& b : cloud) {
      if (b != a && dominated_by(b, a)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    if (std::find(out.begin(), out.end(), a) == out.end()) {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

PointCloud pareto_min(const PointCloud& cloud) {
  return filter_undominated(
      cloud, [](const Point& b, const Point& a) { return leq(b, a); });
}

PointCloud pareto_max(const PointCloud& cloud) {
  return filter_undominated(
      cloud, [](const Point& b, const Point& a) { return leq(a, b); });
}

Point all_one(std::size_t dim) { return Point(dim, 1.0); }

}  // namespace robustmo
