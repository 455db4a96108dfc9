/**
 * @file instance_io.hpp
 * @brief Instance ingestion and export, reproducible random instance
 *        generation, and point-cloud CSV files.
 *
 * Instance files are a single JSON document with top-level keys
 * {name, n, m, k, omega, uncertainty, objective}. Spaces are
 * {"type":"explicit","points":[[...],...]} or
 * {"type":"grid","lower":[...],"upper":[...],"steps":[...]};
 * objectives are {"type":"table","values":[[[...],...],...]} (decision-
 * major), {"type":"bilinear","terms":[{"Q":..,"c":..,"d":..,"e":..},...]}
 * or {"type":"objective_wise","blocks":[...],"terms":[...]}. Numbers are
 * decimal; NaN and infinities are rejected.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "robustmo/problem.hpp"

namespace robustmo {

/// Parse error listing every violated invariant with its field path.
class InstanceError : public std::runtime_error {
 public:
  explicit InstanceError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses and validates an instance file. Throws InstanceError naming
/// every violation.
UncertainInstance parse_instance(const std::string& path);

/// Writes the instance as a JSON document (atomically). Round-trips
/// exactly through parse_instance.
void write_instance(const UncertainInstance& inst, const std::string& path);

enum class GeneratorKind { TableRandom, BilinearRandom, ObjectiveWiseRandom };

/// Size knobs for generated instances. For ObjectiveWiseRandom,
/// uncertainty_count is the per-block scenario count (the scenario space is
/// the product of the m blocks) and k must be >= m.
struct GeneratorSizes {
  std::size_t omega_count = 4;
  std::size_t uncertainty_count = 3;
  std::size_t n = 1;
  std::size_t m = 2;
  std::size_t k = 1;
};

/// Deterministic instance for a given (kind, sizes, seed). Table values
/// are uniform on [0, 10]; bilinear coefficients uniform on [-1, 1].
UncertainInstance generate_instance(GeneratorKind kind,
                                    const GeneratorSizes& sizes,
                                    std::uint64_t seed);

/// CSV point cloud: header y1,...,ym then one row per point.
PointCloud load_point_cloud_csv(const std::string& path);
void write_point_cloud_csv(const PointCloud& cloud, const std::string& path);

}  // namespace robustmo
