#include "robustmo/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "robustmo/geometry_export.hpp"

namespace robustmo {

namespace {

using nlohmann::json;

// Field-path-aware extraction helpers. Every problem is collected so the
// error message names all of them at once.
struct Extractor {
  std::vector<std::string> errors;

  void problem(const std::string& path, const std::string& what) {
    errors.push_back(path + ": " + what);
  }

  double number(const json& j, const std::string& path) {
    if (!j.is_number()) {
      problem(path, "expected a number");
      return 0.0;
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) problem(path, "must be finite");
    return v;
  }

  std::size_t count(const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) {
      problem(path, "expected a nonnegative integer");
      return 0;
    }
    return j.get<std::size_t>();
  }

  std::vector<double> vector(const json& j, const std::string& path) {
    std::vector<double> out;
    if (!j.is_array()) {
      problem(path, "expected an array of numbers");
      return out;
    }
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  const json* field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) {
      problem(path + "." + key, "missing");
      return nullptr;
    }
    return &j.at(key);
  }
};

SpaceSpec extract_space(Extractor& ex, const json& j,
                        const std::string& path) {
  SpaceSpec space;
  const json* type = ex.field(j, "type", path);
  if (!type || !type->is_string()) {
    ex.problem(path + ".type", "expected \"explicit\" or \"grid\"");
    return space;
  }
  const std::string kind = type->get<std::string>();
  if (kind == "explicit") {
    space.kind = SpaceSpec::Kind::Explicit;
    if (const json* pts = ex.field(j, "points", path)) {
      if (!pts->is_array()) {
        ex.problem(path + ".points", "expected an array of points");
      } else {
        for (std::size_t i = 0; i < pts->size(); ++i) {
          space.points.push_back(ex.vector(
              (*pts)[i], path + ".points[" + std::to_string(i) + "]"));
        }
      }
    }
  } else if (kind == "grid") {
    space.kind = SpaceSpec::Kind::Grid;
    if (const json* lo = ex.field(j, "lower", path)) {
      space.lower = ex.vector(*lo, path + ".lower");
    }
    if (const json* hi = ex.field(j, "upper", path)) {
      space.upper = ex.vector(*hi, path + ".upper");
    }
    if (const json* st = ex.field(j, "steps", path)) {
      if (!st->is_array()) {
        ex.problem(path + ".steps", "expected an array of integers");
      } else {
        for (std::size_t i = 0; i < st->size(); ++i) {
          const json& s = (*st)[i];
          if (!s.is_number_integer()) {
            ex.problem(path + ".steps[" + std::to_string(i) + "]",
                       "expected an integer");
            space.steps.push_back(0);
          } else {
            space.steps.push_back(s.get<int>());
          }
        }
      }
    }
  } else {
    ex.problem(path + ".type", "unknown space type '" + kind + "'");
  }
  return space;
}

BilinearTerm extract_term(Extractor& ex, const json& j,
                          const std::string& path) {
  BilinearTerm term;
  if (const json* q = ex.field(j, "Q", path)) {
    if (!q->is_array()) {
      ex.problem(path + ".Q", "expected a matrix (array of rows)");
    } else {
      for (std::size_t r = 0; r < q->size(); ++r) {
        term.Q.push_back(
            ex.vector((*q)[r], path + ".Q[" + std::to_string(r) + "]"));
      }
    }
  }
  if (const json* c = ex.field(j, "c", path)) {
    term.c = ex.vector(*c, path + ".c");
  }
  if (const json* d = ex.field(j, "d", path)) {
    term.d = ex.vector(*d, path + ".d");
  }
  if (const json* e = ex.field(j, "e", path)) {
    term.e = ex.number(*e, path + ".e");
  }
  return term;
}

ObjectiveSpec extract_objective(Extractor& ex, const json& j,
                                const std::string& path) {
  ObjectiveSpec obj;
  const json* type = ex.field(j, "type", path);
  if (!type || !type->is_string()) {
    ex.problem(path + ".type",
               "expected \"table\", \"bilinear\" or \"objective_wise\"");
    return obj;
  }
  const std::string kind = type->get<std::string>();
  if (kind == "table") {
    obj.kind = ObjectiveSpec::Kind::Table;
    if (const json* values = ex.field(j, "values", path)) {
      if (!values->is_array()) {
        ex.problem(path + ".values", "expected a decision-major array");
        return obj;
      }
      for (std::size_t xi = 0; xi < values->size(); ++xi) {
        const json& row = (*values)[xi];
        const std::string row_path =
            path + ".values[" + std::to_string(xi) + "]";
        std::vector<Point> entries;
        if (!row.is_array()) {
          ex.problem(row_path, "expected an array of points");
        } else {
          for (std::size_t ui = 0; ui < row.size(); ++ui) {
            entries.push_back(ex.vector(
                row[ui], row_path + "[" + std::to_string(ui) + "]"));
          }
        }
        obj.table.push_back(std::move(entries));
      }
    }
    return obj;
  }
  if (kind != "bilinear" && kind != "objective_wise") {
    ex.problem(path + ".type", "unknown objective type '" + kind + "'");
    return obj;
  }
  obj.kind = (kind == "bilinear") ? ObjectiveSpec::Kind::Bilinear
                                  : ObjectiveSpec::Kind::ObjectiveWise;
  if (obj.kind == ObjectiveSpec::Kind::ObjectiveWise) {
    if (const json* blocks = ex.field(j, "blocks", path)) {
      if (!blocks->is_array()) {
        ex.problem(path + ".blocks", "expected an array of block sizes");
      } else {
        for (std::size_t i = 0; i < blocks->size(); ++i) {
          const json& b = (*blocks)[i];
          if (!b.is_number_integer()) {
            ex.problem(path + ".blocks[" + std::to_string(i) + "]",
                       "expected an integer");
            obj.blocks.push_back(0);
          } else {
            obj.blocks.push_back(b.get<int>());
          }
        }
      }
    }
  }
  if (const json* terms = ex.field(j, "terms", path)) {
    if (!terms->is_array()) {
      ex.problem(path + ".terms", "expected an array of terms");
    } else {
      for (std::size_t t = 0; t < terms->size(); ++t) {
        obj.terms.push_back(extract_term(
            ex, (*terms)[t], path + ".terms[" + std::to_string(t) + "]"));
      }
    }
  }
  return obj;
}

[[noreturn]] void throw_instance_error(const std::string& context,
                                       const std::vector<std::string>& errors) {
  std::ostringstream oss;
  oss << context << ":";
  for (const std::string& e : errors) oss << "\n  - " << e;
  throw InstanceError(oss.str());
}

}  // namespace

UncertainInstance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw InstanceError("malformed JSON in '" + path + "': " + err.what());
  }

  Extractor ex;
  UncertainInstance inst;
  if (doc.contains("name") && doc.at("name").is_string()) {
    inst.name = doc.at("name").get<std::string>();
  }
  if (const json* n = ex.field(doc, "n", "")) inst.n = ex.count(*n, "n");
  if (const json* m = ex.field(doc, "m", "")) inst.m = ex.count(*m, "m");
  if (const json* k = ex.field(doc, "k", "")) inst.k = ex.count(*k, "k");
  if (const json* omega = ex.field(doc, "omega", "")) {
    inst.omega = extract_space(ex, *omega, "omega");
  }
  if (const json* uset = ex.field(doc, "uncertainty", "")) {
    inst.uncertainty = extract_space(ex, *uset, "uncertainty");
  }
  if (const json* obj = ex.field(doc, "objective", "")) {
    inst.objective = extract_objective(ex, *obj, "objective");
  }
  if (!ex.errors.empty()) {
    throw_instance_error("malformed instance file '" + path + "'", ex.errors);
  }

  const std::vector<std::string> violations = validate_instance(inst);
  if (!violations.empty()) {
    throw_instance_error("invalid instance file '" + path + "'", violations);
  }
  finalize_instance(inst);
  return inst;
}

namespace {

json space_to_json(const SpaceSpec& space) {
  json j;
  if (space.kind == SpaceSpec::Kind::Explicit) {
    j["type"] = "explicit";
    j["points"] = space.points;
  } else {
    j["type"] = "grid";
    j["lower"] = space.lower;
    j["upper"] = space.upper;
    j["steps"] = space.steps;
  }
  return j;
}

json objective_to_json(const ObjectiveSpec& obj) {
  json j;
  switch (obj.kind) {
    case ObjectiveSpec::Kind::Table:
      j["type"] = "table";
      j["values"] = obj.table;
      return j;
    case ObjectiveSpec::Kind::ObjectiveWise:
      j["type"] = "objective_wise";
      j["blocks"] = obj.blocks;
      break;
    case ObjectiveSpec::Kind::Bilinear:
      j["type"] = "bilinear";
      break;
  }
  json terms = json::array();
  for (const BilinearTerm& t : obj.terms) {
    terms.push_back({{"Q", t.Q}, {"c", t.c}, {"d", t.d}, {"e", t.e}});
  }
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace

void write_instance(const UncertainInstance& inst, const std::string& path) {
  const std::vector<std::string> violations = validate_instance(inst);
  if (!violations.empty()) {
    throw_instance_error("refusing to write invalid instance", violations);
  }
  json doc;
  doc["name"] = inst.name;
  doc["n"] = inst.n;
  doc["m"] = inst.m;
  doc["k"] = inst.k;
  doc["omega"] = space_to_json(inst.omega);
  doc["uncertainty"] = space_to_json(inst.uncertainty);
  doc["objective"] = objective_to_json(inst.objective);
  write_file_atomic(path, doc.dump(2) + "\n");
}

namespace {

// Seed-stable uniform deviate; keeps generated instances identical across
// standard libraries (uniform_real_distribution is not portable).
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Point point(std::size_t dim, double lo, double hi) {
    Point p(dim);
    for (double& v : p) v = range(lo, hi);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

PointCloud index_points(std::size_t count, std::size_t dim) {
  PointCloud pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Point p(dim, 0.0);
    p[0] = static_cast<double>(i);
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

UncertainInstance generate_instance(GeneratorKind kind,
                                    const GeneratorSizes& sizes,
                                    std::uint64_t seed) {
  if (sizes.omega_count == 0 || sizes.uncertainty_count == 0 ||
      sizes.n == 0 || sizes.m == 0 || sizes.k == 0) {
    throw std::invalid_argument("generate_instance: sizes must be positive");
  }
  Uniform rng(seed);
  UncertainInstance inst;
  inst.n = sizes.n;
  inst.m = sizes.m;
  inst.k = sizes.k;

  switch (kind) {
    case GeneratorKind::TableRandom: {
      inst.name = "table_random_" + std::to_string(seed);
      inst.omega =
          SpaceSpec::explicit_points(index_points(sizes.omega_count, sizes.n));
      inst.uncertainty = SpaceSpec::explicit_points(
          index_points(sizes.uncertainty_count, sizes.k));
      inst.objective.kind = ObjectiveSpec::Kind::Table;
      for (std::size_t xi = 0; xi < sizes.omega_count; ++xi) {
        std::vector<Point> row;
        row.reserve(sizes.uncertainty_count);
        for (std::size_t ui = 0; ui < sizes.uncertainty_count; ++ui) {
          row.push_back(rng.point(sizes.m, 0.0, 10.0));
        }
        inst.objective.table.push_back(std::move(row));
      }
      break;
    }
    case GeneratorKind::BilinearRandom: {
      inst.name = "bilinear_random_" + std::to_string(seed);
      PointCloud omega, uset;
      for (std::size_t i = 0; i < sizes.omega_count; ++i) {
        omega.push_back(rng.point(sizes.n, 0.0, 1.0));
      }
      for (std::size_t i = 0; i < sizes.uncertainty_count; ++i) {
        uset.push_back(rng.point(sizes.k, 0.0, 1.0));
      }
      inst.omega = SpaceSpec::explicit_points(std::move(omega));
      inst.uncertainty = SpaceSpec::explicit_points(std::move(uset));
      inst.objective.kind = ObjectiveSpec::Kind::Bilinear;
      for (std::size_t j = 0; j < sizes.m; ++j) {
        BilinearTerm term;
        term.Q.resize(sizes.n);
        for (auto& row : term.Q) {
          row.resize(sizes.k);
          for (double& v : row) v = rng.range(-1.0, 1.0);
        }
        term.c.resize(sizes.n);
        for (double& v : term.c) v = rng.range(-1.0, 1.0);
        term.d.resize(sizes.k);
        for (double& v : term.d) v = rng.range(-1.0, 1.0);
        term.e = rng.range(-1.0, 1.0);
        inst.objective.terms.push_back(std::move(term));
      }
      break;
    }
    case GeneratorKind::ObjectiveWiseRandom: {
      if (sizes.k < sizes.m) {
        throw std::invalid_argument(
            "generate_instance: objective-wise instances need k >= m");
      }
      inst.name = "objective_wise_random_" + std::to_string(seed);
      PointCloud omega;
      for (std::size_t i = 0; i < sizes.omega_count; ++i) {
        omega.push_back(rng.point(sizes.n, 0.0, 1.0));
      }
      inst.omega = SpaceSpec::explicit_points(std::move(omega));

      // near-equal block split of the k scenario coordinates
      std::vector<int> blocks(sizes.m,
                              static_cast<int>(sizes.k / sizes.m));
      for (std::size_t j = 0; j < sizes.k % sizes.m; ++j) blocks[j] += 1;
      inst.objective.kind = ObjectiveSpec::Kind::ObjectiveWise;
      inst.objective.blocks = blocks;

      // per-block scenario values, then the full product space
      std::vector<PointCloud> block_values(sizes.m);
      for (std::size_t j = 0; j < sizes.m; ++j) {
        for (std::size_t i = 0; i < sizes.uncertainty_count; ++i) {
          block_values[j].push_back(rng.point(
              static_cast<std::size_t>(blocks[j]), 0.0, 1.0));
        }
      }
      PointCloud product = {Point{}};
      for (std::size_t j = 0; j < sizes.m; ++j) {
        PointCloud grown;
        grown.reserve(product.size() * block_values[j].size());
        for (const Point& prefix : product) {
          for (const Point& value : block_values[j]) {
            Point joined = prefix;
            joined.insert(joined.end(), value.begin(), value.end());
            grown.push_back(std::move(joined));
          }
        }
        product = std::move(grown);
      }
      inst.uncertainty = SpaceSpec::explicit_points(std::move(product));

      std::size_t offset = 0;
      for (std::size_t j = 0; j < sizes.m; ++j) {
        BilinearTerm term;
        term.Q.assign(sizes.n, std::vector<double>(sizes.k, 0.0));
        term.c.resize(sizes.n);
        for (double& v : term.c) v = rng.range(-1.0, 1.0);
        term.d.assign(sizes.k, 0.0);
        const std::size_t width = static_cast<std::size_t>(blocks[j]);
        for (std::size_t r = 0; r < sizes.n; ++r) {
          for (std::size_t s = 0; s < width; ++s) {
            term.Q[r][offset + s] = rng.range(-1.0, 1.0);
          }
        }
        for (std::size_t s = 0; s < width; ++s) {
          term.d[offset + s] = rng.range(-1.0, 1.0);
        }
        term.e = rng.range(-1.0, 1.0);
        inst.objective.terms.push_back(std::move(term));
        offset += width;
      }
      break;
    }
  }
  finalize_instance(inst);
  return inst;
}

PointCloud load_point_cloud_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open point cloud file '" + path + "'");
  }
  PointCloud cloud;
  std::string line;
  bool header = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {  // header row y1,...,ym
      header = false;
      continue;
    }
    Point p;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size() || !std::isfinite(v)) throw std::exception();
        p.push_back(v);
      } catch (...) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": invalid numeric cell '" + cell + "'");
      }
    }
    cloud.push_back(std::move(p));
  }
  require_cloud(cloud);
  return cloud;
}

void write_point_cloud_csv(const PointCloud& cloud, const std::string& path) {
  const std::size_t m = require_cloud(cloud);
  std::ostringstream oss;
  for (std::size_t j = 0; j < m; ++j) {
    if (j != 0) oss << ',';
    oss << 'y' << (j + 1);
  }
  oss << '\n';
  for (const Point& p : cloud) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j != 0) oss << ',';
      oss << format_sig12(p[j]);
    }
    oss << '\n';
  }
  write_file_atomic(path, oss.str());
}

}  // namespace robustmo
