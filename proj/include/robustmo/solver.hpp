/**
 * @file solver.hpp
 * @brief Robust weak efficiency: the brute-force oracle, the finite
 *        vectorization solver over transformed staircases, exactness
 *        thresholds and verification routines.
 *
 * A decision is robust weakly efficient when no other decision's image set
 * strictly upper-dominates its image set. The solver answers the same
 * question through the lower-type relation between transformed staircases:
 * a decision is accepted at order p when some p-tuple of its staircase
 * corners admits no decision whose corners strictly dominate every tuple
 * component (after the epsilon shift). Acceptance grows with p and, on
 * finite instances, reaches the oracle set exactly at a computable order.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "robustmo/config.hpp"
#include "robustmo/problem.hpp"

namespace robustmo {

struct SolveReport {
  std::vector<std::size_t> solution_indices;  ///< ascending decision order
  int p = 0;
  double epsilon = 0.0;
  /// One accepting p-tuple of staircase corners per solution.
  std::vector<std::vector<Point>> witnesses;
  Bounds bounds_used;
  struct GridInfo {
    std::size_t omega_size = 0;
    std::size_t uncertainty_size = 0;
    bool omega_explicit = true;
    bool uncertainty_explicit = true;
  } grid_info;
  /// Solutions whose witnesses violate the refined scenario grid
  /// (discretization warnings; empty when grid_refine_factor == 1).
  std::vector<std::size_t> refine_warnings;
  struct Timings {
    double bounds_ms = 0.0;
    double staircases_ms = 0.0;
    double search_ms = 0.0;
    double total_ms = 0.0;
  } timings;
};

/// Definitional robust weakly efficient set: decision indices whose image
/// set is strictly upper-dominated by no other image set.
std::vector<std::size_t> oracle_robust(const UncertainInstance& inst);

/// Feasibility of a witness tuple for the semi-infinite constraints:
/// min_j (f_j(x, u) - y^i_j) <= 0 for every scenario u and every i, and
/// y^i - lb in C^alpha. With on_grid = false the scenario grid is refined
/// by the given factor (explicit scenario lists are used as-is).
bool semiinfinite_feasible(const UncertainInstance& inst, const Point& x,
                           const std::vector<Point>& ys, const Bounds& bounds,
                           bool on_grid, int refine_factor = 1);

/// Projected epsilon-weakly-efficient set of the order-p reformulation.
SolveReport solve_mp(const UncertainInstance& inst, int p, double epsilon,
                     const RunConfig& config = {});

/// Smallest guaranteed exactness order, when one applies:
/// objective-wise structure -> m; explicit scenarios -> m^|U| (also capped
/// by |Omega| - 1 when decisions are explicit); explicit decisions ->
/// |Omega| - 1 (floored at 1). Grid spaces carry no guarantee.
std::optional<int> wfdvp_p(const UncertainInstance& inst);

struct ApproximationReport {
  bool pass = false;
  std::vector<std::vector<std::size_t>> per_p;  ///< solutions for p = 1..p_max
  std::vector<std::size_t> oracle;
  std::optional<int> exact_p;
  std::string first_violation;  ///< empty when pass
};

/// Solves for p = 1..p_max and checks the inclusion chain in p, inclusion
/// in the oracle set, and equality at the exactness order when defined.
/// With epsilon > 0 the oracle checks become: the oracle set is contained
/// in the epsilon-relaxed solution set at the exactness order.
ApproximationReport verify_approximation(const UncertainInstance& inst,
                                         int p_max, double epsilon,
                                         const RunConfig& config = {});

struct CoverageReport {
  bool pass = false;
  std::vector<std::size_t> solutions;
  /// covered_by[x] = index of a solution whose image upper-dominates x's.
  std::vector<std::optional<std::size_t>> covered_by;
  std::optional<std::size_t> first_uncovered;
};

/// Checks that every decision's image set is upper-dominated by some
/// computed solution's image set.
CoverageReport verify_coverage(const UncertainInstance& inst, int p,
                               const RunConfig& config = {});

struct PointBasedComparison {
  std::vector<std::size_t> point_based;  ///< weakly efficient worst-case set
  std::vector<std::size_t> set_based;    ///< oracle_robust
  std::vector<std::size_t> only_point_based;
  std::vector<std::size_t> only_set_based;
};

/// Weakly efficient decisions of the objective-wise worst case alongside
/// the set-based oracle, flagging decisions the two concepts classify
/// differently.
PointBasedComparison compare_point_based(const UncertainInstance& inst);

}  // namespace robustmo
