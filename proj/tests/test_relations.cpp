#include <doctest.h>

#include <cmath>

#include "robustmo/relations.hpp"
#include "support/test_oracles.hpp"

using namespace robustmo;

TEST_CASE("psi against single points reduces to the max coordinate gap") {
  CHECK(psi({{0, 0}}, {3, -1}) == 3.0);
  CHECK(psi({{0, 0}}, {1, 1}) == 1.0);
  CHECK(psi({{0, 0}, {2, -2}}, {1, 0}) == 1.0);
  CHECK_THROWS_AS(psi({}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(psi({{0, 0}}, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("psi laws: translation along e, monotonicity, Lipschitz") {
  testsupport::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + rng.index(3);
    const PointCloud a_set = rng.cloud(1 + rng.index(8), m, -5.0, 5.0);
    const Point y = rng.point(m, -6.0, 6.0);
    const double t = rng.range(-4.0, 4.0);

    Point shifted = y;
    for (double& v : shifted) v += t;
    CHECK(std::fabs(psi(a_set, shifted) - (psi(a_set, y) + t)) <= 1e-12);

    Point above = y;
    for (double& v : above) v += rng.range(0.0, 2.0);
    CHECK(psi(a_set, y) <= psi(a_set, above));

    const Point z = rng.point(m, -6.0, 6.0);
    double dist = 0.0;
    for (std::size_t j = 0; j < m; ++j) dist += (y[j] - z[j]) * (y[j] - z[j]);
    dist = std::sqrt(dist);
    CHECK(std::fabs(psi(a_set, y) - psi(a_set, z)) <=
          std::sqrt(static_cast<double>(m)) * dist);
  }
}

TEST_CASE("holds evaluates the four relations definitionally") {
  CHECK(holds(RelationKind::StrictUpper, {{0, 0}}, {{1, 1}}));
  CHECK_FALSE(holds(RelationKind::StrictUpper, {{0, 0}}, {{0, 0}}));
  CHECK(holds(RelationKind::Upper, {{0, 0}}, {{0, 0}}));

  const PointCloud any = {{1, 3}, {3, 1}, {2, 2}};
  CHECK(holds(RelationKind::Lower, any, any));  // reflexive preorder
  CHECK(holds(RelationKind::Upper, any, any));

  CHECK_THROWS_AS(holds(RelationKind::Lower, {{1, 2}}, {{1, 2, 3}}),
                  std::invalid_argument);
}

TEST_CASE("two nested disks compare strictly in the upper relation") {
  const PointCloud a = testsupport::disk_boundary(-1.0, 0.0, 1.0, 720);
  const PointCloud b = testsupport::disk_boundary(2.0, 0.0, 2.0, 720);
  CHECK(holds(RelationKind::StrictUpper, a, b));
  const auto eps = certify_strict_upper(a, b);
  REQUIRE(eps.has_value());
  CHECK(*eps > 0.0);
}

TEST_CASE("certificate values on worked examples") {
  auto eps = certify_strict_upper({{0, 0}}, {{1, 1}});
  REQUIRE(eps.has_value());
  CHECK(*eps == 1.0);
  CHECK_FALSE(certify_strict_upper({{0, 0}}, {{0, 0}}).has_value());
  eps = certify_strict_upper({{1, 3}, {3, 1}}, {{4, 4}});
  REQUIRE(eps.has_value());
  CHECK(*eps == 1.0);
}

TEST_CASE("certificate presence coincides with the strict upper relation") {
  testsupport::Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + rng.index(3);
    PointCloud a = (trial % 3 == 0)
                       ? rng.lattice_cloud(1 + rng.index(6), m, 0, 4)
                       : rng.cloud(1 + rng.index(6), m, 0.0, 10.0);
    const PointCloud b = (trial % 3 == 0)
                             ? rng.lattice_cloud(1 + rng.index(6), m, 0, 4)
                             : rng.cloud(1 + rng.index(6), m, 0.0, 10.0);
    if (trial % 2 == 0) {  // bias towards true instances
      a.clear();
      for (const Point& p : b) {
        Point q = p;
        for (double& v : q) v -= rng.range(0.1, 2.0);
        a.push_back(std::move(q));
      }
    }
    CHECK(certify_strict_upper(a, b).has_value() ==
          holds(RelationKind::StrictUpper, a, b));

    // sublevel characterizations of both strict relations
    double worst_a = -1e300;
    for (const Point& p : a) worst_a = std::max(worst_a, psi(b, p));
    CHECK(holds(RelationKind::StrictUpper, a, b) == (worst_a < 0.0));
    double worst_b = -1e300;
    for (const Point& p : b) worst_b = std::max(worst_b, psi(a, p));
    CHECK(holds(RelationKind::StrictLower, a, b) == (worst_b < 0.0));
  }
}

TEST_CASE("lower and upper relations are preorders, strict ones transitive") {
  testsupport::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + rng.index(2);
    const PointCloud a = rng.lattice_cloud(1 + rng.index(5), m, 0, 4);
    const PointCloud b = rng.lattice_cloud(1 + rng.index(5), m, 0, 4);
    const PointCloud c = rng.lattice_cloud(1 + rng.index(5), m, 0, 4);
    for (RelationKind kind : {RelationKind::Lower, RelationKind::Upper}) {
      CHECK(holds(kind, a, a));
      if (holds(kind, a, b) && holds(kind, b, c)) CHECK(holds(kind, a, c));
    }
    for (RelationKind kind :
         {RelationKind::StrictLower, RelationKind::StrictUpper}) {
      if (holds(kind, a, b) && holds(kind, b, c)) CHECK(holds(kind, a, c));
    }
  }
}

TEST_CASE("position against the lower set follows the sign of psi") {
  CHECK(complement_closure_position({{0, 0}}, {0, 0}) ==
        RegionPosition::Boundary);
  CHECK(complement_closure_position({{0, 0}}, {-1, 2}) ==
        RegionPosition::OutsideLowerSet);
  CHECK(complement_closure_position({{0, 0}}, {-1, -1}) ==
        RegionPosition::InsideLowerSet);
}
