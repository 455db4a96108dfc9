/**
 * @file problem.hpp
 * @brief The uncertain multiobjective instance model and its derived maps:
 *        image sets, worst-case upper bounds and transformed staircases.
 *
 * Decision and scenario spaces are either explicit point lists or uniform
 * grids; continuous spaces enter only through their grid discretization.
 * Objectives are tables over explicit spaces, bilinear forms
 * f_j(x, u) = x^T Q_j u + c_j . x + d_j . u + e_j, or the objective-wise
 * special case where the scenario space is a product U_1 x ... x U_m and
 * f_j depends only on block u^j.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "robustmo/cones.hpp"
#include "robustmo/points.hpp"
#include "robustmo/staircase.hpp"

namespace robustmo {

/// A decision or scenario space.
struct SpaceSpec {
  enum class Kind { Explicit, Grid };

  Kind kind = Kind::Explicit;
  PointCloud points;  ///< explicit variant

  // grid variant: uniform lattice with steps[axis] subintervals per axis,
  // including both corners (steps + 1 lattice values per axis).
  Point lower;
  Point upper;
  std::vector<int> steps;

  static SpaceSpec explicit_points(PointCloud pts);
  static SpaceSpec grid(Point lower, Point upper, std::vector<int> steps);

  /// The finite point list of the space, in stable order (grid enumerated
  /// row-major, last axis fastest; both corners exact).
  PointCloud materialize() const;

  bool operator==(const SpaceSpec&) const = default;
};

/// One objective of a bilinear form.
struct BilinearTerm {
  std::vector<std::vector<double>> Q;  ///< n x k
  std::vector<double> c;               ///< n
  std::vector<double> d;               ///< k
  double e = 0.0;

  bool operator==(const BilinearTerm&) const = default;
};

struct ObjectiveSpec {
  enum class Kind { Table, Bilinear, ObjectiveWise };

  Kind kind = Kind::Table;
  /// Table variant: values[x_index][u_index] is the m-vector f(x, u).
  std::vector<std::vector<Point>> table;
  /// Bilinear / objective-wise variants: one term per objective.
  std::vector<BilinearTerm> terms;
  /// Objective-wise variant: scenario block sizes k_1..k_m, sum = k.
  std::vector<int> blocks;

  bool operator==(const ObjectiveSpec&) const = default;
};

struct UncertainInstance {
  std::string name;
  std::size_t n = 0;  ///< decision dimension
  std::size_t m = 0;  ///< objective dimension
  std::size_t k = 0;  ///< scenario dimension
  SpaceSpec omega;
  SpaceSpec uncertainty;
  ObjectiveSpec objective;

  /// Materialized spaces; filled by finalize_instance.
  PointCloud decisions;
  PointCloud scenarios;
};

/// Collects every violated invariant as a human-readable message with a
/// field path. Empty result means the instance is well formed.
std::vector<std::string> validate_instance(const UncertainInstance& inst);

/// Validates and materializes the spaces. Throws std::invalid_argument
/// listing all violations if the instance is malformed.
void finalize_instance(UncertainInstance& inst);

/// f(x, u). For table objectives x and u must be members of the
/// materialized spaces (located by exact match).
Point evaluate(const UncertainInstance& inst, const Point& x, const Point& u);

/// The image set {f(x, u) | u in scenarios}, in scenario order
/// (duplicates preserved).
PointCloud image_set(const UncertainInstance& inst, const Point& x);
PointCloud image_set_by_index(const UncertainInstance& inst, std::size_t xi);

/// Componentwise scenario maximum of the image set plus the all-one vector.
Point upper_bound_map(const UncertainInstance& inst, const Point& x);
Point upper_bound_map_by_index(const UncertainInstance& inst, std::size_t xi);

/// The objective-wise worst case (upper_bound_map minus the all-one
/// vector): the deterministic counterpart of the point-based approach.
Point point_based_counterpart(const UncertainInstance& inst, const Point& x);

/// Fits Bounds over every image point of the materialized instance.
Bounds auto_bounds(const UncertainInstance& inst, double delta = 1.0);

/// Builds the transformed staircase of decision x. The generating cloud is
/// the componentwise-maximal subset of the image set, which generates the
/// same lower set (and hence the same staircase) as the full image.
Staircase build_F(const UncertainInstance& inst, const Point& x,
                  const Bounds& bounds, double tol = 1e-10);
Staircase build_F_by_index(const UncertainInstance& inst, std::size_t xi,
                           const Bounds& bounds, double tol = 1e-10);

}  // namespace robustmo
