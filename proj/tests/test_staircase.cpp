#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "robustmo/staircase.hpp"
#include "support/test_oracles.hpp"

using namespace robustmo;

namespace {

const double kTol = 1e-10;

Staircase build_for(const PointCloud& S, const Point& lb, double alpha,
                    const Point& ub) {
  return build_staircase(S, Bounds{lb, alpha, 1.0}, ub, kTol);
}

bool point_close(const Point& a, const Point& b, double tol) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (std::fabs(a[j] - b[j]) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("box problems reach their closed-form fixed points") {
  BoxProblem bp;
  bp.corner_lo = {0, 0};
  bp.corner_hi = {10, 10};
  bp.lower_anchor = {0, 0};
  bp.target = {5, 5};
  bp.alpha = 4.0;

  bp.index = 0;
  CHECK(point_close(solve_box_problem(bp, kTol), {5.0, 1.25}, 1e-12));
  bp.index = 1;
  CHECK(point_close(solve_box_problem(bp, kTol), {1.25, 5.0}, 1e-12));

  BoxProblem shifted;
  shifted.corner_lo = {-1, -1};
  shifted.corner_hi = {3, 3};
  shifted.lower_anchor = {-1, -1};
  shifted.target = {2, 2};
  shifted.alpha = 3.0;
  shifted.index = 0;
  CHECK(point_close(solve_box_problem(shifted, kTol), {2.0, 0.0}, 1e-12));
}

TEST_CASE("box problems validate their preconditions") {
  BoxProblem bp;
  bp.corner_lo = {0, 0};
  bp.corner_hi = {10, 10};
  bp.lower_anchor = {5, 5};
  bp.target = {5, 5};  // not strictly above the anchor
  bp.alpha = 4.0;
  bp.index = 0;
  CHECK_THROWS_AS(solve_box_problem(bp, kTol), std::invalid_argument);

  bp.lower_anchor = {0, 0};
  bp.alpha = 0.5;  // not > m - 1
  CHECK_THROWS_AS(solve_box_problem(bp, kTol), std::invalid_argument);

  bp.alpha = 4.0;
  CHECK_THROWS_AS(solve_box_problem(bp, 0.0), std::invalid_argument);
}

TEST_CASE("the contraction shrinks steps by (m-1)/alpha and is strongly minimal") {
  testsupport::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + rng.index(3);
    const double alpha = static_cast<double>(m) - 1.0 + rng.range(0.5, 4.0);
    const double gamma = (static_cast<double>(m) - 1.0) / alpha;

    BoxProblem bp;
    bp.alpha = alpha;
    bp.index = rng.index(m);
    bp.corner_lo = rng.point(m, -3.0, 0.0);
    bp.corner_hi = bp.corner_lo;
    for (double& v : bp.corner_hi) v += rng.range(6.0, 10.0);
    bp.lower_anchor = bp.corner_lo;
    for (double& v : bp.lower_anchor) v += rng.range(0.05, 0.3);
    bp.target = bp.lower_anchor;
    for (double& v : bp.target) v += rng.range(0.5, 2.0);
    const ConeSpec cone = ConeSpec::alpha_cone(alpha, m);
    if (!interval_contains(cone, bp.corner_lo, bp.corner_hi, bp.lower_anchor,
                           false) ||
        !interval_contains(cone, bp.corner_lo, bp.corner_hi, bp.target,
                           false)) {
      continue;
    }

    // manual iteration mirrors the map to watch the step ratios
    auto step = [&](const Point& y) {
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
        out[k] = std::max(bp.lower_anchor[k],
                          bp.corner_lo[k] + sum / alpha);
      }
      return out;
    };
    auto l1 = [](const Point& a, const Point& b) {
      double s = 0.0;
      for (std::size_t j = 0; j < a.size(); ++j) s += std::fabs(a[j] - b[j]);
      return s;
    };

    Point y = bp.target;
    Point next = step(y);
    double prev_residual = l1(next, y);
    int iterations = 0;
    while (prev_residual > kTol && iterations < 500) {
      y = next;
      next = step(y);
      const double residual = l1(next, y);
      if (prev_residual > 1e-13) {
        CHECK(residual / prev_residual <= gamma + 1e-12);
      }
      prev_residual = residual;
      ++iterations;
    }

    const Point fixed = solve_box_problem(bp, kTol);
    CHECK(point_close(fixed, next, 10 * kTol));
    CHECK(fixed[bp.index] == bp.target[bp.index]);

    // strong minimality against sampled feasible points of the subproblem
    for (int sample = 0; sample < 200; ++sample) {
      Point cand(m);
      cand[bp.index] = bp.target[bp.index];
      for (std::size_t j = 0; j < m; ++j) {
        if (j != bp.index) {
          cand[j] = rng.range(bp.lower_anchor[j], bp.corner_hi[j]);
        }
      }
      if (!interval_contains(cone, bp.corner_lo, bp.corner_hi, cand, false)) {
        continue;
      }
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(fixed[j] <= cand[j] + 1e-9);
      }
    }
  }
}

TEST_CASE("staircase corners for documented generating sets") {
  const Staircase one = build_for({{2, 2}}, {-1, -1}, 3.0, {3, 3});
  REQUIRE(one.minimal_points.size() == 2);
  CHECK(testsupport::cloud_close(one.minimal_points, {{2, 0}, {0, 2}}, 1e-12));

  const Staircase two = build_for({{1, 3}, {3, 1}}, {-1, -1}, 3.0, {4, 4});
  REQUIRE(two.minimal_points.size() == 3);
  CHECK(testsupport::cloud_close(
      two.minimal_points, {{1, 1}, {3, 1.0 / 3.0}, {1.0 / 3.0, 3}}, 1e-12));
}

TEST_CASE("building rejects sources outside the open interval") {
  CHECK_THROWS_AS(build_for({{5, 5}}, {-1, -1}, 3.0, {3, 3}),
                  std::invalid_argument);
  // an orthant-like alpha is rejected by the cone factory
  CHECK_THROWS_AS(build_for({{2, 2}}, {-1, -1}, 1.0, {3, 3}),
                  std::invalid_argument);
}

TEST_CASE("membership inside the transformed region") {
  const Staircase st = build_for({{2, 2}}, {-1, -1}, 3.0, {3, 3});
  CHECK(staircase_contains(st, {2, 0}));
  CHECK_FALSE(staircase_contains(st, {1, 1}));    // strictly inside lower set
  CHECK_FALSE(staircase_contains(st, {-1, -1}));  // lb is always dominated
}

TEST_CASE("staircase lower relations reduce to corner checks") {
  const Point lb = {-1, -1};
  const Staircase s1 = build_for({{2, 2}}, lb, 3.0, {3, 3});
  const Staircase s2 = build_for({{4, 4}, {0, 0}}, lb, 3.0, {5, 5});
  CHECK(testsupport::cloud_close(
      s2.minimal_points, {{4, 2.0 / 3.0}, {2.0 / 3.0, 4}}, 1e-12));
  CHECK(staircase_prec(RelationKind::StrictLower, s1, s2));
  CHECK(staircase_prec(RelationKind::Lower, s1, s1));  // reflexive

  const Staircase s3 = build_for({{1, 3}, {3, 1}}, lb, 3.0, {4, 4});
  CHECK_FALSE(staircase_prec(RelationKind::StrictLower, s3, s1));

  CHECK_THROWS_AS(staircase_prec(RelationKind::Upper, s1, s2),
                  std::invalid_argument);
  const Staircase other_lb = build_for({{2, 2}}, {-2, -2}, 3.0, {3, 3});
  CHECK_THROWS_AS(staircase_prec(RelationKind::Lower, other_lb, s1),
                  std::invalid_argument);
}

TEST_CASE("corner count never exceeds m^s") {
  testsupport::Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + rng.index(2);
    const std::size_t s = 1 + rng.index(5);
    const PointCloud S = rng.cloud(s, m, 0.0, 10.0);
    const Bounds bounds = fit_lower_bound(S, 1.0);
    Point ub = S.front();
    for (const Point& p : S) {
      for (std::size_t j = 0; j < m; ++j) ub[j] = std::max(ub[j], p[j]);
    }
    for (double& v : ub) v += 1.0;
    const Staircase st = build_staircase(S, bounds, ub, kTol);
    CHECK(st.minimal_points.size() <=
          static_cast<std::size_t>(std::pow(double(m), double(s))));
    for (const Point& corner : st.minimal_points) {
      CHECK(psi(st.source, corner) >= -1e-9);
      CHECK(interval_contains(st.cone, st.lb, st.ub, corner, false, 1e-9));
    }
    CHECK(pareto_min(st.minimal_points) == st.minimal_points);
  }
}

TEST_CASE("the corner set is independent of insertion order") {
  testsupport::Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + rng.index(2);
    const std::size_t s = 2 + rng.index(3);
    PointCloud S = rng.cloud(s, m, 0.0, 10.0);
    const Bounds bounds = fit_lower_bound(S, 1.0);
    Point ub = S.front();
    for (const Point& p : S) {
      for (std::size_t j = 0; j < m; ++j) ub[j] = std::max(ub[j], p[j]);
    }
    for (double& v : ub) v += 1.0;
    const Staircase direct = build_staircase(S, bounds, ub, kTol);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      for (std::size_t i = S.size(); i > 1; --i) {
        std::swap(S[i - 1], S[rng.index(i)]);
      }
      const Staircase permuted = build_staircase(S, bounds, ub, kTol);
      CHECK(testsupport::cloud_close(direct.minimal_points,
                                     permuted.minimal_points, 1e-9));
    }
  }
}

TEST_CASE("grid restriction confirms corner minimality") {
  testsupport::Rng rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const PointCloud S = rng.cloud(1 + rng.index(4), 2, 0.0, 10.0);
    const Bounds bounds = fit_lower_bound(S, 1.0);
    Point ub = S.front();
    for (const Point& p : S) {
      for (std::size_t j = 0; j < 2; ++j) ub[j] = std::max(ub[j], p[j]);
    }
    for (double& v : ub) v += 1.0;
    const Staircase st = build_staircase(S, bounds, ub, kTol);

    const int res = 150;
    const double hx = (ub[0] - bounds.lb[0]) / res;
    const double hy = (ub[1] - bounds.lb[1]) / res;
    for (int gx = 0; gx <= res; ++gx) {
      for (int gy = 0; gy <= res; ++gy) {
        const Point g = {bounds.lb[0] + gx * hx, bounds.lb[1] + gy * hy};
        if (!staircase_contains(st, g)) continue;
        // every contained grid point sits above some corner
        bool above = false;
        for (const Point& corner : st.minimal_points) {
          if (corner[0] <= g[0] + hx && corner[1] <= g[1] + hy) {
            above = true;
            break;
          }
        }
        CHECK(above);
        // and no corner is strictly dominated by a contained grid point
        for (const Point& corner : st.minimal_points) {
          CHECK_FALSE((g[0] < corner[0] - hx && g[1] < corner[1] - hy));
        }
      }
    }
  }
}

TEST_CASE("strict upper between clouds mirrors strict lower between staircases") {
  testsupport::Rng rng(59);
  int seen_true = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 2 + rng.index(2);
    PointCloud A = rng.cloud(1 + rng.index(5), m, 0.0, 10.0);
    const PointCloud B = rng.cloud(1 + rng.index(5), m, 0.0, 10.0);
    if (trial % 2 == 0) {
      A.clear();
      for (const Point& p : B) {
        Point q = p;
        for (double& v : q) v -= rng.range(0.1, 2.0);
        A.push_back(std::move(q));
      }
    }
    PointCloud joint = A;
    joint.insert(joint.end(), B.begin(), B.end());
    const Bounds bounds = fit_lower_bound(joint, 1.0);
    auto ub_of = [&](const PointCloud& cloud) {
      Point ub = cloud.front();
      for (const Point& p : cloud) {
        for (std::size_t j = 0; j < m; ++j) ub[j] = std::max(ub[j], p[j]);
      }
      for (double& v : ub) v += 1.0;
      return ub;
    };
    const Staircase fa =
        build_staircase(pareto_max(A), bounds, ub_of(A), kTol);
    const Staircase fb =
        build_staircase(pareto_max(B), bounds, ub_of(B), kTol);
    const bool upper = holds(RelationKind::StrictUpper, A, B);
    seen_true += upper ? 1 : 0;
    CHECK(upper == staircase_prec(RelationKind::StrictLower, fa, fb));
    if (staircase_prec(RelationKind::Lower, fa, fb)) {
      CHECK(holds(RelationKind::Upper, A, B));
    }
  }
  CHECK(seen_true > 10);  // both outcomes exercised
}
