#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phavail/report.hpp"
#include "phavail/system.hpp"

namespace phavail {

/// Tolerances and knobs of the end-to-end cross-check suite.
struct VerifyOptions {
  double tol_closed_vs_numeric = 1e-8;   // Eq-level: closed form vs CTMC
  double tol_steady = 1e-10;             // steady formula vs stationary solve
  double tol_product_space = 1e-10;      // series/parallel vs product chain
  double mc_se_multiplier = 3.0;
  std::uint64_t mc_seed = 42;
  int mc_replications = 200;
  double mc_horizon = 1e5;
  int grid_points = 200;
  double grid_t_min = 1e-3;
  double grid_t_max = 1e4;
  /// Test hook (negative control): added to every closed-form availability
  /// value inside the closed-vs-numeric check.
  double closed_form_perturbation = 0.0;
};

struct VerifyCheck {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool all_passed = true;
  ReportTable table() const;
};

/// Runs the cross-validation matrix on a model: time-dependent closed form
/// vs transient CTMC per component, steady-state formula vs stationary
/// solve, series/parallel formulas vs the product-space chain (up to 4
/// components), and the Monte Carlo long-run estimate within k standard
/// errors.
VerifyResult run_verification(const SystemModel& model,
                              const VerifyOptions& options = {});

}  // namespace phavail
