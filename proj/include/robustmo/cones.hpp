/**
 * @file cones.hpp
 * @brief The polyhedral cone family C^alpha, cone-interval membership and
 *        automatic fitting of a strict common lower bound.
 *
 * C^alpha = {y | sum_{j != k} y_j <= alpha * y_k for all k}, which for
 * alpha > m - 1 is a closed, convex, pointed, solid cone strictly inside
 * the nonnegative orthant (apart from the apex). The orthant itself is
 * available as a degenerate variant for diagnostic comparisons only; it is
 * rejected by staircase construction and all solver paths.
 */

#pragma once

#include <cstddef>

#include "robustmo/points.hpp"

namespace robustmo {

/// Ordering-cone parameterization: the nonnegative orthant or C^alpha.
class ConeSpec {
 public:
  static ConeSpec orthant(std::size_t dim);
  /// Requires alpha > dim - 1; throws std::invalid_argument otherwise.
  static ConeSpec alpha_cone(double alpha, std::size_t dim);

  bool is_orthant() const { return orthant_; }
  /// Throws std::logic_error on the orthant variant.
  double alpha() const;
  std::size_t dim() const { return dim_; }

  bool operator==(const ConeSpec&) const = default;

 private:
  ConeSpec(bool orthant, double alpha, std::size_t dim)
      : orthant_(orthant), alpha_(alpha), dim_(dim) {}

  bool orthant_;
  double alpha_;
  std::size_t dim_;
};

/// A fitted strict common lower bound for an instance's image data:
/// every sampled image point lies in {lb} + int C^alpha.
struct Bounds {
  Point lb;
  double alpha = 0.0;
  double delta = 0.0;  ///< margin used when the bound was fitted
};

/// Membership of y in the cone (strict = interior). The optional slack
/// relaxes every inequality by the given amount; the default 0 is an exact
/// evaluation. Slack is used internally to keep membership re-checks of
/// constructed points stable against floating-point rounding.
bool cone_contains(const ConeSpec& cone, const Point& y, bool strict,
                   double slack = 0.0);

/// Membership of y in the cone interval:
///   closed: y - lo in C        and y <= hi,
///   open:   y - lo in int C    and y <  hi.
bool interval_contains(const ConeSpec& cone, const Point& lo,
                       const Point& hi, const Point& y, bool open,
                       double slack = 0.0);

/// Smallest-plus-margin alpha enclosing a strictly positive cloud:
/// max over points y and rows i of max{m, sum_{j != i} y_j / y_i}, plus 1.
/// Every input point then lies in int C^alpha. Throws if any coordinate of
/// any point is nonpositive.
double fit_alpha(const PointCloud& shifted_points);

/// Fits lb = componentwise min - delta and alpha = fit_alpha(points - lb).
/// Every sampled point ends up in {lb} + int C^alpha.
Bounds fit_lower_bound(const PointCloud& image_points, double delta);

}  // namespace robustmo
