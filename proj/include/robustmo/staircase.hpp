/**
 * @file staircase.hpp
 * @brief Finite minimal-point representation of the transformed set
 *        cl(S - R^m_+)^c intersected with a cone interval [lb, ub]_C^alpha.
 *
 * The region is compact and its minimal points form a finite "staircase"
 * of at most m^|S| corners. Construction processes the generating points
 * one by one: each insertion solves m box-constrained subproblems per
 * affected corner via a contraction fixed-point iteration, then re-filters
 * the candidate corners for membership and Pareto minimality.
 *
 * Because every point of the compact region dominates one of its minimal
 * points (external stability), the lower set relations between two such
 * regions reduce to finite checks on the staircases; see staircase_prec.
 */

#pragma once

#include "robustmo/cones.hpp"
#include "robustmo/points.hpp"
#include "robustmo/relations.hpp"

namespace robustmo {

/// The transformed set of a generating cloud, held as its corner points.
struct Staircase {
  Point lb;                  ///< shared strict lower bound
  Point ub;                  ///< per-set upper bound (strictly above source)
  ConeSpec cone;             ///< always an alpha cone
  PointCloud minimal_points; ///< Pareto-minimal, duplicate-free corners
  PointCloud source;         ///< the generating image cloud
};

/// One box-constrained subproblem: minimize over the interval
/// [corner_lo, corner_hi]_C^alpha with y >= lower_anchor and coordinate
/// `index` pinned to target[index].
struct BoxProblem {
  std::size_t index = 0;  ///< pinned coordinate i
  Point lower_anchor;     ///< current corner l, l < target
  Point target;           ///< insertion point z, strictly inside the interval
  Point corner_lo;        ///< interval corner a
  Point corner_hi;        ///< interval corner b
  double alpha = 0.0;     ///< cone parameter, > m - 1
};

/// Solves the box problem by iterating its monotone contraction map from
/// y = target until the 1-norm step is <= tol. The iteration count is
/// capped by the Banach budget ceil(log(tol/r0)/log((m-1)/alpha)) + 1;
/// exceeding it indicates a violated precondition and throws
/// std::runtime_error. Returns the (strongly minimal) fixed point.
Point solve_box_problem(const BoxProblem& bp, double tol);

/// Builds the staircase of S inside [bounds.lb, ub]_C^alpha. Every point
/// of S must lie strictly inside the open interval (as guaranteed by a
/// fitted Bounds); otherwise throws std::invalid_argument.
Staircase build_staircase(const PointCloud& S, const Bounds& bounds,
                          const Point& ub, double tol = 1e-10);

/// Exact membership: psi(source, y) >= 0 and closed interval membership.
bool staircase_contains(const Staircase& st, const Point& y);

/// Lower set relation between two staircases built against the same lb and
/// alpha (upper bounds may differ). kind must be StrictLower or Lower.
/// Reduces to the finite minimal-point sets of both sides.
bool staircase_prec(RelationKind kind, const Staircase& s1,
                    const Staircase& s2);

}  // namespace robustmo
