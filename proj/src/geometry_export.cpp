#include "robustmo/geometry_export.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace robustmo {

std::string format_sig12(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    fs::create_directories(target.parent_path());
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

namespace {

void append_point(std::ostringstream& oss, const Point& p) {
  for (double v : p) oss << ',' << format_sig12(v);
}

}  // namespace

void write_solve_report_csv(const SolveReport& report,
                            const UncertainInstance& inst,
                            const std::string& path) {
  std::ostringstream oss;
  oss << "decision";
  for (std::size_t r = 0; r < inst.n; ++r) oss << ",x" << (r + 1);
  for (int i = 0; i < report.p; ++i) {
    for (std::size_t j = 0; j < inst.m; ++j) {
      oss << ",w" << (i + 1) << "_y" << (j + 1);
    }
  }
  oss << '\n';
  for (std::size_t s = 0; s < report.solution_indices.size(); ++s) {
    const std::size_t xi = report.solution_indices[s];
    oss << xi;
    append_point(oss, inst.decisions[xi]);
    for (const Point& w : report.witnesses[s]) append_point(oss, w);
    oss << '\n';
  }
  write_file_atomic(path, oss.str());
}

void write_oracle_csv(const std::vector<std::size_t>& robust,
                      std::size_t decision_count, const std::string& path) {
  std::ostringstream oss;
  oss << "decision,robust\n";
  for (std::size_t xi = 0; xi < decision_count; ++xi) {
    const bool in = std::find(robust.begin(), robust.end(), xi) != robust.end();
    oss << xi << ',' << (in ? 1 : 0) << '\n';
  }
  write_file_atomic(path, oss.str());
}

void write_bounds_csv(const Bounds& bounds, const std::string& path) {
  std::ostringstream oss;
  oss << "quantity,component,value\n";
  for (std::size_t j = 0; j < bounds.lb.size(); ++j) {
    oss << "lb," << (j + 1) << ',' << format_sig12(bounds.lb[j]) << '\n';
  }
  oss << "alpha,," << format_sig12(bounds.alpha) << '\n';
  oss << "delta,," << format_sig12(bounds.delta) << '\n';
  write_file_atomic(path, oss.str());
}

void write_compare_csv(const PointBasedComparison& cmp,
                       std::size_t decision_count, const std::string& path) {
  const auto member = [](const std::vector<std::size_t>& s, std::size_t v) {
    return std::find(s.begin(), s.end(), v) != s.end();
  };
  std::ostringstream oss;
  oss << "decision,point_based,set_based,differs\n";
  for (std::size_t xi = 0; xi < decision_count; ++xi) {
    const bool pb = member(cmp.point_based, xi);
    const bool sb = member(cmp.set_based, xi);
    oss << xi << ',' << (pb ? 1 : 0) << ',' << (sb ? 1 : 0) << ','
        << (pb != sb ? 1 : 0) << '\n';
  }
  write_file_atomic(path, oss.str());
}

namespace {

std::string cloud_csv(const PointCloud& cloud, std::size_t m) {
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
  return oss.str();
}

}  // namespace

void export_geometry(const UncertainInstance& inst, const Bounds& bounds,
                     const std::string& out_dir, double tol) {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);

  std::ostringstream summary;
  summary << "decision,image_points,staircase_points";
  for (std::size_t j = 0; j < inst.m; ++j) summary << ",ub_y" << (j + 1);
  summary << '\n';

  for (std::size_t xi = 0; xi < inst.decisions.size(); ++xi) {
    const PointCloud image = image_set_by_index(inst, xi);
    const Staircase st = build_F_by_index(inst, xi, bounds, tol);
    write_file_atomic(
        (dir / ("decision_" + std::to_string(xi) + "_image.csv")).string(),
        cloud_csv(image, inst.m));
    write_file_atomic(
        (dir / ("decision_" + std::to_string(xi) + "_staircase.csv")).string(),
        cloud_csv(st.minimal_points, inst.m));
    summary << xi << ',' << image.size() << ',' << st.minimal_points.size();
    for (std::size_t j = 0; j < inst.m; ++j) {
      summary << ',' << format_sig12(st.ub[j]);
    }
    summary << '\n';
  }
  write_file_atomic((dir / "geometry_summary.csv").string(), summary.str());
  write_bounds_csv(bounds, (dir / "bounds.csv").string());
}

}  // namespace robustmo
