/**
 * @file config.hpp
 * @brief Run configuration shared by the solver and the CLI.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace robustmo {

struct RunConfig {
  double delta = 1.0;                  ///< lower-bound fitting margin
  std::optional<double> alpha_override;
  double epsilon = 0.0;                ///< weak-efficiency slack
  std::optional<int> p;                ///< vectorization order
  int grid_refine_factor = 1;          ///< scenario-grid refinement re-check
  double tol_fixed_point = 1e-10;      ///< box-problem iteration tolerance
  std::uint64_t seed = 0;              ///< generator seed
  std::string output_dir = ".";

  void validate() const {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
    if (p.has_value() && *p < 1) throw std::invalid_argument("p must be >= 1");
    if (grid_refine_factor < 1) {
      throw std::invalid_argument("refine factor must be >= 1");
    }
    if (!(tol_fixed_point > 0.0)) {
      throw std::invalid_argument("fixed-point tolerance must be > 0");
    }
  }
};

}  // namespace robustmo
