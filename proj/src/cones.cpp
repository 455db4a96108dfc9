#include "robustmo/cones.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace robustmo {

ConeSpec ConeSpec::orthant(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("cone dimension must be >= 1");
  return ConeSpec(true, 0.0, dim);
}

ConeSpec ConeSpec::alpha_cone(double alpha, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("cone dimension must be >= 1");
  if (!(alpha > static_cast<double>(dim) - 1.0)) {
    throw std::invalid_argument("alpha must exceed m - 1 (got " +
                                std::to_string(alpha) + " for m = " +
                                std::to_string(dim) + ")");
  }
  return ConeSpec(false, alpha, dim);
}

double ConeSpec::alpha() const {
  if (orthant_) throw std::logic_error("orthant cone has no alpha");
  return alpha_;
}

bool cone_contains(const ConeSpec& cone, const Point& y, bool strict,
                   double slack) {
  if (y.size() != cone.dim()) {
    throw std::invalid_argument("cone_contains: dimension mismatch");
  }
  const std::size_t m = y.size();
  if (cone.is_orthant()) {
    for (std::size_t j = 0; j < m; ++j) {
      if (strict ? !(y[j] > -slack) : !(y[j] >= -slack)) return false;
    }
    return true;
  }
  const double alpha = cone.alpha();
  for (std::size_t k = 0; k < m; ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != k) sum += y[j];
    }
    const double rhs = alpha * y[k] + slack;
    if (strict ? !(sum < rhs) : !(sum <= rhs)) return false;
  }
  return true;
}

bool interval_contains(const ConeSpec& cone, const Point& lo,
                       const Point& hi, const Point& y, bool open,
                       double slack) {
  require_same_dimension(lo, hi);
  require_same_dimension(lo, y);
  const std::size_t m = y.size();
  Point shifted(m);
  for (std::size_t j = 0; j < m; ++j) shifted[j] = y[j] - lo[j];
  if (!cone_contains(cone, shifted, open, slack)) return false;
  for (std::size_t j = 0; j < m; ++j) {
    const double cap = hi[j] + slack;
    if (open ? !(y[j] < cap) : !(y[j] <= cap)) return false;
  }
  return true;
}

double fit_alpha(const PointCloud& shifted_points) {
  const std::size_t m = require_cloud(shifted_points);
  for (const Point& y : shifted_points) {
    for (double v : y) {
      if (!(v > 0.0)) {
        throw std::invalid_argument(
            "fit_alpha: all coordinates must be strictly positive");
      }
    }
  }
  double best = static_cast<double>(m);
  for (const Point& y : shifted_points) {
    for (std::size_t i = 0; i < m; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i) sum += y[j];
      }
      best = std::max(best, sum / y[i]);
    }
  }
  return best + 1.0;
}

Bounds fit_lower_bound(const PointCloud& image_points, double delta) {
  const std::size_t m = require_cloud(image_points);
  if (!(delta > 0.0)) {
    throw std::invalid_argument("fit_lower_bound: delta must be positive");
  }
  Point lb(m);
  for (std::size_t j = 0; j < m; ++j) {
    double lo = image_points.front()[j];
    for (const Point& p : image_points) lo = std::min(lo, p[j]);
    lb[j] = lo - delta;
  }
  PointCloud shifted;
  shifted.reserve(image_points.size());
  for (const Point& p : image_points) {
    Point s(m);
    for (std::size_t j = 0; j < m; ++j) s[j] = p[j] - lb[j];
    shifted.push_back(std::move(s));
  }
  return Bounds{std::move(lb), fit_alpha(shifted), delta};
}

}  // namespace robustmo
