/**
 * @file geometry_export.hpp
 * @brief Machine-readable CSV export of solver results and per-decision
 *        geometry (image points, staircase corners, bounds).
 *
 * All result files use LF line endings, header rows and 12 significant
 * digits; writes are atomic (temp file + rename). Identical inputs and
 * configuration produce byte-identical files.
 */

#pragma once

#include <string>

#include "robustmo/solver.hpp"

namespace robustmo {

/// %.12g formatting used by every result file.
std::string format_sig12(double value);

/// Writes content to path via a temporary file in the same directory.
void write_file_atomic(const std::string& path, const std::string& content);

/// solutions.csv: one row per solution with its witness tuple flattened.
void write_solve_report_csv(const SolveReport& report,
                            const UncertainInstance& inst,
                            const std::string& path);

/// oracle.csv: every decision with its robustness flag.
void write_oracle_csv(const std::vector<std::size_t>& robust,
                      std::size_t decision_count, const std::string& path);

/// bounds.csv: lb components, alpha and delta.
void write_bounds_csv(const Bounds& bounds, const std::string& path);

/// compare.csv: per decision, membership in the point-based and set-based
/// weakly efficient sets and a difference flag.
void write_compare_csv(const PointBasedComparison& cmp,
                       std::size_t decision_count, const std::string& path);

/// Per-decision geometry under out_dir: decision_<i>_image.csv,
/// decision_<i>_staircase.csv, plus bounds.csv and geometry_summary.csv
/// (decision index, image size, corner count, ub components).
void export_geometry(const UncertainInstance& inst, const Bounds& bounds,
                     const std::string& out_dir, double tol = 1e-10);

}  // namespace robustmo
