#include "robustmo/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace robustmo {

SpaceSpec SpaceSpec::explicit_points(PointCloud pts) {
  SpaceSpec s;
  s.kind = Kind::Explicit;
  s.points = std::move(pts);
  return s;
}

SpaceSpec SpaceSpec::grid(Point lower, Point upper, std::vector<int> steps) {
  SpaceSpec s;
  s.kind = Kind::Grid;
  s.lower = std::move(lower);
  s.upper = std::move(upper);
  s.steps = std::move(steps);
  return s;
}

PointCloud SpaceSpec::materialize() const {
  if (kind == Kind::Explicit) return points;
  const std::size_t dim = lower.size();
  std::size_t total = 1;
  for (int s : steps) total *= static_cast<std::size_t>(s) + 1;
  PointCloud out;
  out.reserve(total);
  std::vector<int> idx(dim, 0);
  for (std::size_t count = 0; count < total; ++count) {
    Point p(dim);
    for (std::size_t axis = 0; axis < dim; ++axis) {
      const int t = idx[axis];
      const int s = steps[axis];
      // both corners are hit exactly
      p[axis] = (t == 0) ? lower[axis]
              : (t == s) ? upper[axis]
                         : lower[axis] + t * ((upper[axis] - lower[axis]) / s);
    }
    out.push_back(std::move(p));
    for (std::size_t axis = dim; axis-- > 0;) {
      if (++idx[axis] <= steps[axis]) break;
      idx[axis] = 0;
    }
  }
  return out;
}

namespace {

bool all_finite(const Point& p) {
  return std::all_of(p.begin(), p.end(),
                     [](double v) { return std::isfinite(v); });
}

void validate_space(const SpaceSpec& space, std::size_t dim,
                    const std::string& path,
                    std::vector<std::string>& errors) {
  if (space.kind == SpaceSpec::Kind::Explicit) {
    if (space.points.empty()) {
      errors.push_back(path + ".points: must be nonempty");
      return;
    }
    for (std::size_t i = 0; i < space.points.size(); ++i) {
      if (space.points[i].size() != dim) {
        errors.push_back(path + ".points[" + std::to_string(i) +
                         "]: expected dimension " + std::to_string(dim));
      } else if (!all_finite(space.points[i])) {
        errors.push_back(path + ".points[" + std::to_string(i) +
                         "]: entries must be finite");
      }
    }
    return;
  }
  if (space.lower.size() != dim || space.upper.size() != dim ||
      space.steps.size() != dim) {
    errors.push_back(path + ": grid lower/upper/steps must have dimension " +
                     std::to_string(dim));
    return;
  }
  if (!all_finite(space.lower) || !all_finite(space.upper)) {
    errors.push_back(path + ": grid corners must be finite");
  }
  for (std::size_t axis = 0; axis < dim; ++axis) {
    if (space.steps[axis] < 1) {
      errors.push_back(path + ".steps[" + std::to_string(axis) +
                       "]: must be >= 1");
    }
    if (!(space.lower[axis] <= space.upper[axis])) {
      errors.push_back(path + ": lower[" + std::to_string(axis) +
                       "] exceeds upper[" + std::to_string(axis) + "]");
    }
  }
}

void validate_terms(const UncertainInstance& inst,
                    std::vector<std::string>& errors) {
  const auto& terms = inst.objective.terms;
  if (terms.size() != inst.m) {
    errors.push_back("objective.terms: expected " + std::to_string(inst.m) +
                     " terms, got " + std::to_string(terms.size()));
    return;
  }
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const std::string path = "objective.terms[" + std::to_string(j) + "]";
    const BilinearTerm& t = terms[j];
    if (t.Q.size() != inst.n) {
      errors.push_back(path + ".Q: expected " + std::to_string(inst.n) +
                       " rows");
    } else {
      for (std::size_t r = 0; r < t.Q.size(); ++r) {
        if (t.Q[r].size() != inst.k) {
          errors.push_back(path + ".Q[" + std::to_string(r) + "]: expected " +
                           std::to_string(inst.k) + " columns");
        }
      }
    }
    if (t.c.size() != inst.n) {
      errors.push_back(path + ".c: expected length " + std::to_string(inst.n));
    }
    if (t.d.size() != inst.k) {
      errors.push_back(path + ".d: expected length " + std::to_string(inst.k));
    }
    if (!std::isfinite(t.e)) {
      errors.push_back(path + ".e: must be finite");
    }
  }
}

// Column range [begin, end) of scenario block j under the declared sizes.
std::pair<std::size_t, std::size_t> block_range(const std::vector<int>& blocks,
                                                std::size_t j) {
  std::size_t begin = 0;
  for (std::size_t b = 0; b < j; ++b) begin += static_cast<std::size_t>(blocks[b]);
  return {begin, begin + static_cast<std::size_t>(blocks[j])};
}

void validate_blocks(const UncertainInstance& inst,
                     std::vector<std::string>& errors) {
  const auto& blocks = inst.objective.blocks;
  if (blocks.size() != inst.m) {
    errors.push_back("objective.blocks: expected " + std::to_string(inst.m) +
                     " block sizes");
    return;
  }
  std::size_t sum = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j] < 1) {
      errors.push_back("objective.blocks[" + std::to_string(j) +
                       "]: must be >= 1");
      return;
    }
    sum += static_cast<std::size_t>(blocks[j]);
  }
  if (sum != inst.k) {
    errors.push_back("objective.blocks: sizes must sum to k = " +
                     std::to_string(inst.k));
    return;
  }
  if (inst.objective.terms.size() != inst.m) return;  // reported above
  for (std::size_t j = 0; j < inst.m; ++j) {
    const auto [begin, end] = block_range(blocks, j);
    const BilinearTerm& t = inst.objective.terms[j];
    const std::string path = "objective.terms[" + std::to_string(j) + "]";
    for (std::size_t col = 0; col < inst.k; ++col) {
      if (col >= begin && col < end) continue;
      if (col < t.d.size() && t.d[col] != 0.0) {
        errors.push_back(path + ".d[" + std::to_string(col) +
                         "]: must be zero outside scenario block " +
                         std::to_string(j));
      }
      for (std::size_t r = 0; r < t.Q.size(); ++r) {
        if (col < t.Q[r].size() && t.Q[r][col] != 0.0) {
          errors.push_back(path + ".Q[" + std::to_string(r) + "][" +
                           std::to_string(col) +
                           "]: must be zero outside scenario block " +
                           std::to_string(j));
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate_instance(const UncertainInstance& inst) {
  std::vector<std::string> errors;
  if (inst.m < 1) errors.push_back("m: must be >= 1");
  if (inst.n < 1) errors.push_back("n: must be >= 1");
  if (inst.k < 1) errors.push_back("k: must be >= 1");
  if (!errors.empty()) return errors;

  validate_space(inst.omega, inst.n, "omega", errors);
  validate_space(inst.uncertainty, inst.k, "uncertainty", errors);

  switch (inst.objective.kind) {
    case ObjectiveSpec::Kind::Table: {
      if (inst.omega.kind != SpaceSpec::Kind::Explicit ||
          inst.uncertainty.kind != SpaceSpec::Kind::Explicit) {
        errors.push_back("objective: table objectives require explicit spaces");
        break;
      }
      const auto& values = inst.objective.table;
      if (values.size() != inst.omega.points.size()) {
        errors.push_back("objective.values: expected " +
                         std::to_string(inst.omega.points.size()) +
                         " decision rows, got " +
                         std::to_string(values.size()));
        break;
      }
      for (std::size_t xi = 0; xi < values.size(); ++xi) {
        if (values[xi].size() != inst.uncertainty.points.size()) {
          errors.push_back("objective.values[" + std::to_string(xi) +
                           "]: expected " +
                           std::to_string(inst.uncertainty.points.size()) +
                           " scenario entries, got " +
                           std::to_string(values[xi].size()));
          continue;
        }
        for (std::size_t ui = 0; ui < values[xi].size(); ++ui) {
          if (values[xi][ui].size() != inst.m) {
            errors.push_back("objective.values[" + std::to_string(xi) + "][" +
                             std::to_string(ui) + "]: expected " +
                             std::to_string(inst.m) + " objective values");
          } else if (!all_finite(values[xi][ui])) {
            errors.push_back("objective.values[" + std::to_string(xi) + "][" +
                             std::to_string(ui) + "]: entries must be finite");
          }
        }
      }
      break;
    }
    case ObjectiveSpec::Kind::Bilinear:
      validate_terms(inst, errors);
      break;
    case ObjectiveSpec::Kind::ObjectiveWise:
      validate_terms(inst, errors);
      validate_blocks(inst, errors);
      break;
  }
  return errors;
}

void finalize_instance(UncertainInstance& inst) {
  const std::vector<std::string> errors = validate_instance(inst);
  if (!errors.empty()) {
    std::ostringstream oss;
    oss << "invalid instance";
    if (!inst.name.empty()) oss << " '" << inst.name << "'";
    oss << ":";
    for (const std::string& e : errors) oss << "\n  - " << e;
    throw std::invalid_argument(oss.str());
  }
  inst.decisions = inst.omega.materialize();
  inst.scenarios = inst.uncertainty.materialize();
}

namespace {

std::size_t locate(const PointCloud& cloud, const Point& p,
                   const char* what) {
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (cloud[i] == p) return i;
  }
  throw std::invalid_argument(std::string(what) +
                              " is not a member of the materialized space");
}

Point evaluate_bilinear(const UncertainInstance& inst, const Point& x,
                        const Point& u) {
  Point out(inst.m);
  for (std::size_t j = 0; j < inst.m; ++j) {
    const BilinearTerm& t = inst.objective.terms[j];
    double value = t.e;
    for (std::size_t r = 0; r < inst.n; ++r) {
      double row = 0.0;
      for (std::size_t s = 0; s < inst.k; ++s) row += t.Q[r][s] * u[s];
      value += x[r] * row;
      value += t.c[r] * x[r];
    }
    for (std::size_t s = 0; s < inst.k; ++s) value += t.d[s] * u[s];
    out[j] = value;
  }
  return out;
}

}  // namespace

Point evaluate(const UncertainInstance& inst, const Point& x,
               const Point& u) {
  if (x.size() != inst.n || u.size() != inst.k) {
    throw std::invalid_argument("evaluate: dimension mismatch");
  }
  if (inst.objective.kind == ObjectiveSpec::Kind::Table) {
    const std::size_t xi = locate(inst.decisions, x, "decision");
    const std::size_t ui = locate(inst.scenarios, u, "scenario");
    return inst.objective.table[xi][ui];
  }
  return evaluate_bilinear(inst, x, u);
}

PointCloud image_set_by_index(const UncertainInstance& inst, std::size_t xi) {
  if (xi >= inst.decisions.size()) {
    throw std::invalid_argument("image_set: decision index out of range");
  }
  if (inst.objective.kind == ObjectiveSpec::Kind::Table) {
    return inst.objective.table[xi];
  }
  PointCloud out;
  out.reserve(inst.scenarios.size());
  for (const Point& u : inst.scenarios) {
    out.push_back(evaluate_bilinear(inst, inst.decisions[xi], u));
  }
  return out;
}

PointCloud image_set(const UncertainInstance& inst, const Point& x) {
  if (inst.objective.kind == ObjectiveSpec::Kind::Table) {
    return image_set_by_index(inst, locate(inst.decisions, x, "decision"));
  }
  if (x.size() != inst.n) {
    throw std::invalid_argument("image_set: dimension mismatch");
  }
  PointCloud out;
  out.reserve(inst.scenarios.size());
  for (const Point& u : inst.scenarios) {
    out.push_back(evaluate_bilinear(inst, x, u));
  }
  return out;
}

namespace {

Point componentwise_max(const PointCloud& cloud) {
  Point out = cloud.front();
  for (const Point& p : cloud) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(out[j], p[j]);
  }
  return out;
}

}  // namespace

Point upper_bound_map_by_index(const UncertainInstance& inst,
                               std::size_t xi) {
  Point ub = componentwise_max(image_set_by_index(inst, xi));
  for (double& v : ub) v += 1.0;
  return ub;
}

Point upper_bound_map(const UncertainInstance& inst, const Point& x) {
  Point ub = componentwise_max(image_set(inst, x));
  for (double& v : ub) v += 1.0;
  return ub;
}

Point point_based_counterpart(const UncertainInstance& inst, const Point& x) {
  return componentwise_max(image_set(inst, x));
}

Bounds auto_bounds(const UncertainInstance& inst, double delta) {
  PointCloud all;
  all.reserve(inst.decisions.size() * inst.scenarios.size());
  for (std::size_t xi = 0; xi < inst.decisions.size(); ++xi) {
    for (Point& p : image_set_by_index(inst, xi)) all.push_back(std::move(p));
  }
  return fit_lower_bound(all, delta);
}

Staircase build_F_by_index(const UncertainInstance& inst, std::size_t xi,
                           const Bounds& bounds, double tol) {
  return build_staircase(pareto_max(image_set_by_index(inst, xi)), bounds,
                         upper_bound_map_by_index(inst, xi), tol);
}

Staircase build_F(const UncertainInstance& inst, const Point& x,
                  const Bounds& bounds, double tol) {
  return build_staircase(pareto_max(image_set(inst, x)), bounds,
                         upper_bound_map(inst, x), tol);
}

}  // namespace robustmo
