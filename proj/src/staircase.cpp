#include "robustmo/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace robustmo {

namespace {

// Slack for re-checking membership of points the construction itself
// produced. The fixed-point iteration stops at residual <= tol and rounding
// in the cone rows is a few ulp, so anything failing by more than this is a
// genuine violation. Exactness of the final corner set is untouched: the
// slack only guards keep/drop decisions, never point values.
double construction_slack(double tol) { return std::max(1e-12, 16.0 * tol); }

double l1_distance(const Point& a, const Point& b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) sum += std::fabs(a[j] - b[j]);
  return sum;
}

Point apply_contraction(const BoxProblem& bp, const Point& y) {
  const std::size_t m = y.size();
  Point out(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (k == bp.index) {
      out[k] = bp.target[k];
      continue;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != k) sum += y[j] - bp.corner_lo[j];
    }
    out[k] = std::max(bp.lower_anchor[k], bp.corner_lo[k] + sum / bp.alpha);
  }
  return out;
}

void validate_box_problem(const BoxProblem& bp, double tol) {
  const std::size_t m = bp.target.size();
  if (m == 0) throw std::invalid_argument("box problem: empty target");
  if (bp.index >= m) throw std::invalid_argument("box problem: index out of range");
  if (bp.lower_anchor.size() != m || bp.corner_lo.size() != m ||
      bp.corner_hi.size() != m) {
    throw std::invalid_argument("box problem: dimension mismatch");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("box problem: tol must be positive");
  if (!(bp.alpha > static_cast<double>(m) - 1.0)) {
    throw std::invalid_argument("box problem: alpha must exceed m - 1");
  }
  if (!strictly_less(bp.lower_anchor, bp.target)) {
    throw std::invalid_argument("box problem: anchor must be strictly below target");
  }
  if (!strictly_less(bp.corner_lo, bp.corner_hi)) {
    throw std::invalid_argument("box problem: degenerate interval corners");
  }
  const ConeSpec cone = ConeSpec::alpha_cone(bp.alpha, m);
  const double slack = construction_slack(tol);
  if (!interval_contains(cone, bp.corner_lo, bp.corner_hi, bp.lower_anchor,
                         /*open=*/false, slack) ||
      !interval_contains(cone, bp.corner_lo, bp.corner_hi, bp.target,
                         /*open=*/false, slack)) {
    throw std::invalid_argument(
        "box problem: anchor and target must lie in the cone interval");
  }
}

}  // namespace

Point solve_box_problem(const BoxProblem& bp, double tol) {
  validate_box_problem(bp, tol);
  const std::size_t m = bp.target.size();
  const double gamma = (static_cast<double>(m) - 1.0) / bp.alpha;

  Point y = bp.target;
  Point next = apply_contraction(bp, y);
  double residual = l1_distance(next, y);
  if (residual <= tol) return next;

  // Banach budget: gamma^r * r0 <= tol after r further applications.
  const long budget =
      static_cast<long>(std::ceil(std::log(tol / residual) / std::log(gamma))) + 1;
  for (long iter = 0; iter < budget; ++iter) {
    y = std::move(next);
    next = apply_contraction(bp, y);
    residual = l1_distance(next, y);
    if (residual <= tol) return next;
  }
  throw std::runtime_error(
      "box problem iteration exceeded its contraction budget (residual " +
      std::to_string(residual) + "); preconditions are likely violated");
}

namespace {

// Membership of a candidate corner in the region generated by the prefix,
// with construction slack (see above).
bool candidate_member(const PointCloud& prefix, const ConeSpec& cone,
                      const Point& lb, const Point& ub, const Point& c,
                      double slack) {
  if (psi(prefix, c) < -slack) return false;
  return interval_contains(cone, lb, ub, c, /*open=*/false, slack);
}

}  // namespace

Staircase build_staircase(const PointCloud& S, const Bounds& bounds,
                          const Point& ub, double tol) {
  const std::size_t m = require_cloud(S);
  if (bounds.lb.size() != m || ub.size() != m) {
    throw std::invalid_argument("build_staircase: dimension mismatch");
  }
  const ConeSpec cone = ConeSpec::alpha_cone(bounds.alpha, m);
  for (const Point& s : S) {
    if (!interval_contains(cone, bounds.lb, ub, s, /*open=*/true)) {
      throw std::invalid_argument(
          "build_staircase: source point lies outside the open cone "
          "interval; bounds were not fitted for this data");
    }
  }
  const double slack = construction_slack(tol);

  PointCloud corners = {bounds.lb};
  PointCloud prefix;
  prefix.reserve(S.size());
  for (const Point& target : S) {
    prefix.push_back(target);

    PointCloud affected;  // corners strictly below the insertion point
    PointCloud kept;
    for (const Point& corner : corners) {
      (strictly_less(corner, target) ? affected : kept).push_back(corner);
    }

    PointCloud candidates;
    candidates.reserve(affected.size() * m + kept.size());
    for (const Point& anchor : affected) {
      for (std::size_t i = 0; i < m; ++i) {
        candidates.push_back(solve_box_problem(
            BoxProblem{i, anchor, target, bounds.lb, ub, bounds.alpha}, tol));
      }
    }
    for (Point& corner : kept) candidates.push_back(std::move(corner));

    PointCloud members;
    members.reserve(candidates.size());
    for (Point& c : candidates) {
      if (candidate_member(prefix, cone, bounds.lb, ub, c, slack)) {
        members.push_back(std::move(c));
      }
    }
    if (members.empty()) {
      throw std::logic_error("build_staircase: corner set became empty");
    }
    corners = pareto_min(members);
  }
  return Staircase{bounds.lb, ub, cone, std::move(corners), S};
}

bool staircase_contains(const Staircase& st, const Point& y) {
  if (y.size() != st.lb.size()) {
    throw std::invalid_argument("staircase_contains: dimension mismatch");
  }
  if (psi(st.source, y) < 0.0) return false;
  return interval_contains(st.cone, st.lb, st.ub, y, /*open=*/false);
}

bool staircase_prec(RelationKind kind, const Staircase& s1,
                    const Staircase& s2) {
  if (kind != RelationKind::StrictLower && kind != RelationKind::Lower) {
    throw std::invalid_argument(
        "staircase_prec: only lower-type relations apply to staircases");
  }
  if (s1.lb != s2.lb || s1.cone != s2.cone) {
    throw std::invalid_argument(
        "staircase_prec: staircases were built against different lb/alpha");
  }
  const bool strict = (kind == RelationKind::StrictLower);
  for (const Point& p : s2.minimal_points) {
    bool found = false;
    for (const Point& q : s1.minimal_points) {
      if (strict ? strictly_less(q, p) : leq(q, p)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace robustmo
