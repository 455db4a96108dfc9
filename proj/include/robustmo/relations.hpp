/**
 * @file relations.hpp
 * @brief The scalarizing functional psi and the four set relations on
 *        finite point clouds.
 *
 * psi(A, y) = min over a in A of max over j of (y_j - a_j). Its sign
 * classifies y against the lower set A - R^m_+: negative inside, zero on
 * the boundary, positive outside. The relations compare clouds through
 * component-wise dominance against the (interior of the) nonnegative
 * orthant.
 */

#pragma once

#include <optional>
#include <string>

#include "robustmo/points.hpp"

namespace robustmo {

/// The four set relations: lower/upper type, strict and non-strict.
enum class RelationKind { StrictLower, Lower, StrictUpper, Upper };

std::string to_string(RelationKind kind);

/// min_{a in A} max_j (y_j - a_j). Exhaustive O(|A| m) evaluation.
double psi(const PointCloud& a_set, const Point& y);

/// Definitional evaluation of the relation between two clouds:
///   StrictUpper: every a in A is strictly below some b in B,
///   Upper:       every a in A satisfies a <= some b in B,
///   StrictLower: every b in B has some a in A strictly below it,
///   Lower:       every b in B has some a in A with a <= b.
bool holds(RelationKind kind, const PointCloud& A, const PointCloud& B);

/// The strict-upper certificate eps = -max_{a in A} psi(B, a).
/// Returns eps when it is strictly positive, otherwise nothing; presence
/// coincides exactly with holds(StrictUpper, A, B).
std::optional<double> certify_strict_upper(const PointCloud& A,
                                           const PointCloud& B);

/// Position of a point relative to the lower set A - R^m_+ and the closure
/// of its complement.
enum class RegionPosition { InsideLowerSet, Boundary, OutsideLowerSet };

std::string to_string(RegionPosition pos);

/// Classifies y by the exact sign of psi(A, y). Boundary and outside
/// together form cl(A - R^m_+)^c = (A - int R^m_+)^c.
RegionPosition complement_closure_position(const PointCloud& A,
                                           const Point& y);

}  // namespace robustmo
