/**
 * @file points.hpp
 * @brief Objective-space vectors, finite point clouds and Pareto filtering.
 *
 * All comparisons between vectors are component-wise and exact (no
 * tolerance): downstream exactness results rely on dominance checks not
 * being perturbed.
 */

#pragma once

#include <cstddef>
#include <vector>

namespace robustmo {

/// A point in objective space (length = number of objectives m).
using Point = std::vector<double>;

/// A nonempty finite list of points of equal dimension. Duplicates are
/// permitted; set-valued operations are insensitive to them.
using PointCloud = std::vector<Point>;

/// Throws std::invalid_argument if the two points differ in dimension.
void require_same_dimension(const Point& a, const Point& b);

/// Validates that the cloud is nonempty and of uniform dimension.
/// Returns the common dimension. Throws std::invalid_argument otherwise.
std::size_t require_cloud(const PointCloud& cloud);

/// a_j < b_j for every component j.
bool strictly_less(const Point& a, const Point& b);

/// a_j <= b_j for every component j.
bool leq(const Point& a, const Point& b);

/// The points of the cloud not dominated from below: no b in the cloud has
/// b <= a and b != a. Output is duplicate-free, in stable first-occurrence
/// order. O(N^2 m) scan.
PointCloud pareto_min(const PointCloud& cloud);

/// The points of the cloud not dominated from above: no b in the cloud has
/// b >= a and b != a. Same ordering and duplicate rules as pareto_min.
PointCloud pareto_max(const PointCloud& cloud);

/// The all-one vector of the given dimension.
Point all_one(std::size_t dim);

}  // namespace robustmo
