#include "robustmo/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"

namespace robustmo {

namespace {

// Slack for cone-row feasibility re-checks of constructed witness points;
// see the matching note in staircase.cpp. Dominance comparisons stay exact.
constexpr double kConeSlack = 1e-9;

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

Bounds make_bounds(const UncertainInstance& inst, const RunConfig& config) {
  Bounds bounds = auto_bounds(inst, config.delta);
  if (!config.alpha_override.has_value()) return bounds;
  const double alpha = *config.alpha_override;
  const ConeSpec cone = ConeSpec::alpha_cone(alpha, inst.m);  // checks m - 1
  for (std::size_t xi = 0; xi < inst.decisions.size(); ++xi) {
    for (const Point& p : image_set_by_index(inst, xi)) {
      Point shifted(inst.m);
      for (std::size_t j = 0; j < inst.m; ++j) shifted[j] = p[j] - bounds.lb[j];
      if (!cone_contains(cone, shifted, /*strict=*/true)) {
        throw std::invalid_argument(
            "alpha override too small: an image point leaves the cone "
            "interior above lb");
      }
    }
  }
  bounds.alpha = alpha;
  return bounds;
}

struct SolveContext {
  Bounds bounds;
  std::vector<Staircase> staircases;
  double bounds_ms = 0.0;
  double staircases_ms = 0.0;
};

SolveContext make_context(const UncertainInstance& inst,
                          const RunConfig& config) {
  config.validate();
  SolveContext ctx;
  auto t0 = std::chrono::steady_clock::now();
  ctx.bounds = make_bounds(inst, config);
  ctx.bounds_ms = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  ctx.staircases.resize(inst.decisions.size(),
                        Staircase{{}, {}, ConeSpec::alpha_cone(
                                              ctx.bounds.alpha, inst.m),
                                  {}, {}});
  detail::parallel_for(inst.decisions.size(), [&](std::size_t xi) {
    ctx.staircases[xi] =
        build_F_by_index(inst, xi, ctx.bounds, config.tol_fixed_point);
  });
  ctx.staircases_ms = elapsed_ms(t0);
  return ctx;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t t = c.size();
  for (std::size_t i = t; i-- > 0;) {
    if (c[i] < n - (t - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Does some decision strictly dominate every component of the shifted
// tuple with one of its own corners?
bool tuple_dominated(const std::vector<Staircase>& staircases,
                     const std::vector<Point>& shifted) {
  for (const Staircase& other : staircases) {
    bool dominates_all = true;
    for (const Point& y : shifted) {
      bool found = false;
      for (const Point& q : other.minimal_points) {
        if (strictly_less(q, y)) {
          found = true;
          break;
        }
      }
      if (!found) {
        dominates_all = false;
        break;
      }
    }
    if (dominates_all) return true;
  }
  return false;
}

// Searches the size-min(p, |corners|) corner subsets in lexicographic
// order; returns the first tuple (padded to length p) no decision
// dominates, or nothing.
std::optional<std::vector<Point>> find_witness(
    const std::vector<Staircase>& staircases, std::size_t bar, int p,
    double epsilon) {
  const PointCloud& corners = staircases[bar].minimal_points;
  const std::size_t t =
      std::min<std::size_t>(static_cast<std::size_t>(p), corners.size());
  std::vector<std::size_t> comb(t);
  for (std::size_t i = 0; i < t; ++i) comb[i] = i;
  const std::size_t m = staircases[bar].lb.size();
  do {
    std::vector<Point> tuple;
    tuple.reserve(static_cast<std::size_t>(p));
    for (std::size_t idx : comb) tuple.push_back(corners[idx]);
    while (tuple.size() < static_cast<std::size_t>(p)) {
      tuple.push_back(tuple.front());
    }
    std::vector<Point> shifted = tuple;
    if (epsilon != 0.0) {
      for (Point& y : shifted) {
        for (std::size_t j = 0; j < m; ++j) y[j] -= epsilon;
      }
    }
    if (!tuple_dominated(staircases, shifted)) return tuple;
  } while (next_combination(comb, corners.size()));
  return std::nullopt;
}

SolveReport solve_with_context(const UncertainInstance& inst,
                               const SolveContext& ctx, int p, double epsilon,
                               const RunConfig& config) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  const auto t_total = std::chrono::steady_clock::now();

  SolveReport report;
  report.p = p;
  report.epsilon = epsilon;
  report.bounds_used = ctx.bounds;
  report.grid_info = {inst.decisions.size(), inst.scenarios.size(),
                      inst.omega.kind == SpaceSpec::Kind::Explicit,
                      inst.uncertainty.kind == SpaceSpec::Kind::Explicit};

  const auto t_search = std::chrono::steady_clock::now();
  std::vector<std::optional<std::vector<Point>>> found(inst.decisions.size());
  detail::parallel_for(inst.decisions.size(), [&](std::size_t bar) {
    found[bar] = find_witness(ctx.staircases, bar, p, epsilon);
  });
  for (std::size_t bar = 0; bar < found.size(); ++bar) {
    if (found[bar].has_value()) {
      report.solution_indices.push_back(bar);
      report.witnesses.push_back(std::move(*found[bar]));
    }
  }
  report.timings.search_ms = elapsed_ms(t_search);

  if (config.grid_refine_factor > 1 &&
      inst.uncertainty.kind == SpaceSpec::Kind::Grid) {
    for (std::size_t s = 0; s < report.solution_indices.size(); ++s) {
      const std::size_t bar = report.solution_indices[s];
      if (!semiinfinite_feasible(inst, inst.decisions[bar],
                                 report.witnesses[s], ctx.bounds,
                                 /*on_grid=*/false,
                                 config.grid_refine_factor)) {
        report.refine_warnings.push_back(bar);
      }
    }
  }

  report.timings.bounds_ms = ctx.bounds_ms;
  report.timings.staircases_ms = ctx.staircases_ms;
  report.timings.total_ms =
      ctx.bounds_ms + ctx.staircases_ms + elapsed_ms(t_total);
  return report;
}

bool subset_of(const std::vector<std::size_t>& a,
               const std::vector<std::size_t>& b) {
  return std::all_of(a.begin(), a.end(), [&](std::size_t v) {
    return std::find(b.begin(), b.end(), v) != b.end();
  });
}

std::string index_set_string(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

std::vector<std::size_t> oracle_robust(const UncertainInstance& inst) {
  std::vector<PointCloud> images(inst.decisions.size());
  for (std::size_t xi = 0; xi < images.size(); ++xi) {
    images[xi] = image_set_by_index(inst, xi);
  }
  std::vector<std::size_t> robust;
  for (std::size_t bar = 0; bar < images.size(); ++bar) {
    bool dominated = false;
    for (std::size_t other = 0; other < images.size(); ++other) {
      if (holds(RelationKind::StrictUpper, images[other], images[bar])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) robust.push_back(bar);
  }
  return robust;
}

bool semiinfinite_feasible(const UncertainInstance& inst, const Point& x,
                           const std::vector<Point>& ys, const Bounds& bounds,
                           bool on_grid, int refine_factor) {
  if (ys.empty()) {
    throw std::invalid_argument("semiinfinite_feasible: empty tuple");
  }
  const std::size_t m = inst.m;
  const ConeSpec cone = ConeSpec::alpha_cone(bounds.alpha, m);
  for (const Point& y : ys) {
    if (y.size() != m) {
      throw std::invalid_argument("semiinfinite_feasible: dimension mismatch");
    }
    Point shifted(m);
    for (std::size_t j = 0; j < m; ++j) shifted[j] = y[j] - bounds.lb[j];
    if (!cone_contains(cone, shifted, /*strict=*/false, kConeSlack)) {
      return false;
    }
  }

  PointCloud scenarios;
  if (!on_grid && refine_factor > 1 &&
      inst.uncertainty.kind == SpaceSpec::Kind::Grid) {
    SpaceSpec refined = inst.uncertainty;
    for (int& s : refined.steps) s *= refine_factor;
    scenarios = refined.materialize();
  } else {
    scenarios = inst.scenarios;
  }

  for (const Point& u : scenarios) {
    const Point f = evaluate(inst, x, u);
    for (const Point& y : ys) {
      double lowest = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < m; ++j) {
        lowest = std::min(lowest, f[j] - y[j]);
      }
      if (!(lowest <= 0.0)) return false;
    }
  }
  return true;
}

SolveReport solve_mp(const UncertainInstance& inst, int p, double epsilon,
                     const RunConfig& config) {
  const SolveContext ctx = make_context(inst, config);
  return solve_with_context(inst, ctx, p, epsilon, config);
}

std::optional<int> wfdvp_p(const UncertainInstance& inst) {
  const bool omega_explicit = inst.omega.kind == SpaceSpec::Kind::Explicit;
  const bool uset_explicit =
      inst.uncertainty.kind == SpaceSpec::Kind::Explicit;
  if (inst.objective.kind == ObjectiveSpec::Kind::ObjectiveWise) {
    return static_cast<int>(inst.m);
  }
  const auto omega_threshold = [&] {
    return std::max<std::size_t>(inst.omega.points.size() - 1, 1);
  };
  if (uset_explicit) {
    // m^|U|, saturating well above any solvable order
    const std::size_t cap = 1u << 30;
    std::size_t power = 1;
    for (std::size_t i = 0; i < inst.uncertainty.points.size(); ++i) {
      if (power > cap / std::max<std::size_t>(inst.m, 1)) {
        power = cap;
        break;
      }
      power *= inst.m;
    }
    const std::size_t threshold =
        omega_explicit ? std::min(omega_threshold(), power) : power;
    return static_cast<int>(threshold);
  }
  if (omega_explicit) return static_cast<int>(omega_threshold());
  return std::nullopt;
}

ApproximationReport verify_approximation(const UncertainInstance& inst,
                                         int p_max, double epsilon,
                                         const RunConfig& config) {
  if (p_max < 1) throw std::invalid_argument("p_max must be >= 1");
  const SolveContext ctx = make_context(inst, config);

  ApproximationReport report;
  report.oracle = oracle_robust(inst);
  report.exact_p = wfdvp_p(inst);
  report.pass = true;
  for (int p = 1; p <= p_max; ++p) {
    report.per_p.push_back(
        solve_with_context(inst, ctx, p, epsilon, config).solution_indices);
  }

  auto fail = [&](std::string message) {
    if (report.pass) {
      report.pass = false;
      report.first_violation = std::move(message);
    }
  };

  for (int p = 1; p + 1 <= p_max && report.pass; ++p) {
    if (!subset_of(report.per_p[p - 1], report.per_p[p])) {
      fail("solutions at p = " + std::to_string(p) + " " +
           index_set_string(report.per_p[p - 1]) +
           " not contained in solutions at p = " + std::to_string(p + 1) +
           " " + index_set_string(report.per_p[p]));
    }
  }

  if (epsilon == 0.0) {
    for (int p = 1; p <= p_max && report.pass; ++p) {
      if (!subset_of(report.per_p[p - 1], report.oracle)) {
        fail("solutions at p = " + std::to_string(p) + " " +
             index_set_string(report.per_p[p - 1]) +
             " not contained in the oracle set " +
             index_set_string(report.oracle));
      }
    }
    if (report.exact_p.has_value() && report.pass) {
      const int pe = *report.exact_p;
      const std::vector<std::size_t> at_exact =
          (pe <= p_max)
              ? report.per_p[pe - 1]
              : solve_with_context(inst, ctx, pe, epsilon, config)
                    .solution_indices;
      if (at_exact != report.oracle) {
        fail("solutions at the exactness order p = " + std::to_string(pe) +
             " " + index_set_string(at_exact) + " differ from the oracle " +
             index_set_string(report.oracle));
      }
    }
  } else if (report.exact_p.has_value() && report.pass) {
    const std::vector<std::size_t> relaxed =
        solve_with_context(inst, ctx, *report.exact_p, epsilon, config)
            .solution_indices;
    if (!subset_of(report.oracle, relaxed)) {
      fail("oracle set " + index_set_string(report.oracle) +
           " not contained in the epsilon-relaxed solutions " +
           index_set_string(relaxed));
    }
  }
  return report;
}

CoverageReport verify_coverage(const UncertainInstance& inst, int p,
                               const RunConfig& config) {
  const std::optional<int> exact = wfdvp_p(inst);
  if (exact.has_value() && p < *exact) {
    throw std::invalid_argument(
        "verify_coverage: p must reach the exactness order " +
        std::to_string(*exact));
  }
  const SolveContext ctx = make_context(inst, config);
  CoverageReport report;
  report.solutions =
      solve_with_context(inst, ctx, p, 0.0, config).solution_indices;

  std::vector<PointCloud> images(inst.decisions.size());
  for (std::size_t xi = 0; xi < images.size(); ++xi) {
    images[xi] = image_set_by_index(inst, xi);
  }
  report.pass = true;
  report.covered_by.resize(images.size());
  for (std::size_t xi = 0; xi < images.size(); ++xi) {
    for (std::size_t sol : report.solutions) {
      if (holds(RelationKind::Upper, images[sol], images[xi])) {
        report.covered_by[xi] = sol;
        break;
      }
    }
    if (!report.covered_by[xi].has_value() && report.pass) {
      report.pass = false;
      report.first_uncovered = xi;
    }
  }
  return report;
}

PointBasedComparison compare_point_based(const UncertainInstance& inst) {
  PointBasedComparison cmp;
  PointCloud worst;
  worst.reserve(inst.decisions.size());
  for (std::size_t xi = 0; xi < inst.decisions.size(); ++xi) {
    worst.push_back(point_based_counterpart(inst, inst.decisions[xi]));
  }
  for (std::size_t xi = 0; xi < worst.size(); ++xi) {
    bool dominated = false;
    for (const Point& other : worst) {
      if (strictly_less(other, worst[xi])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) cmp.point_based.push_back(xi);
  }
  cmp.set_based = oracle_robust(inst);
  for (std::size_t xi : cmp.point_based) {
    if (!subset_of({xi}, cmp.set_based)) cmp.only_point_based.push_back(xi);
  }
  for (std::size_t xi : cmp.set_based) {
    if (!subset_of({xi}, cmp.point_based)) cmp.only_set_based.push_back(xi);
  }
  return cmp;
}

}  // namespace robustmo
