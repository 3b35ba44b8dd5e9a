#include "phavail/verify.hpp"

#include <algorithm>
#include <cmath>

#include "phavail/mc.hpp"

namespace phavail {

namespace {

// 2-state up/down chain for an exponential component.
GeneratorMatrix exp_generator(const ComponentParams& p) {
  Eigen::MatrixXd Q(2, 2);
  Q << -p.lambda, p.lambda, p.mu, -p.mu;
  return GeneratorMatrix::validate(Q);
}

double up_mass(const StateDistribution& pi, const std::vector<int>& up) {
  double s = 0.0;
  for (int i : up) s += pi[i];
  return s;
}

}  // namespace

ReportTable VerifyResult::table() const {
  ReportTable t;
  t.title = "Cross-validation checks";
  t.headers = {"check", "max_deviation", "tolerance", "verdict"};
  for (const auto& c : checks)
    t.rows.push_back({c.name, format_sig(c.deviation, 3),
                      format_sig(c.tolerance, 3), c.passed ? "PASS" : "FAIL"});
  t.note = "closed forms vs transient/stationary CTMC solves vs Monte Carlo";
  return t;
}

VerifyResult run_verification(const SystemModel& model,
                              const VerifyOptions& opt) {
  model.check();
  VerifyResult result;
  auto add = [&result](std::string name, double dev, double tol) {
    result.checks.push_back({std::move(name), dev, tol, dev <= tol});
    result.all_passed = result.all_passed && result.checks.back().passed;
  };

  const std::vector<double> grid =
      log_grid(opt.grid_t_min, opt.grid_t_max, opt.grid_points);

  // Time-dependent availability: closed form vs Kolmogorov solve.
  for (const auto& c : model.components) {
    const auto& p = c.params;
    double dev = 0.0;
    if (p.law == DistributionLaw::Lindley) {
      for (double t : grid)
        dev = std::max(dev, std::abs(availability_closed(p.lambda, p.mu, t) +
                                     opt.closed_form_perturbation -
                                     availability_numeric(p.lambda, p.mu, t)));
    } else {
      const GeneratorMatrix Q = exp_generator(p);
      const StateDistribution p0 = StateDistribution::point_mass(2, 0);
      for (double t : grid) {
        const double numeric = transient_distribution(Q, p0, t)[0];
        dev = std::max(dev,
                       std::abs(availability_exponential_closed(p.lambda, p.mu, t) +
                                opt.closed_form_perturbation - numeric));
      }
    }
    add("A(t) closed vs CTMC [" + c.label + "]", dev, opt.tol_closed_vs_numeric);
  }

  // Steady state: formula vs stationary solve of the per-component chain.
  for (const auto& c : model.components) {
    const auto& p = c.params;
    double numeric;
    if (p.law == DistributionLaw::Lindley) {
      const StateDistribution pi =
          stationary_distribution(build_single_component_generator(p));
      numeric = 1.0 - pi[3];
    } else {
      numeric = stationary_distribution(exp_generator(p))[0];
    }
    add("A_inf formula vs stationary [" + c.label + "]",
        std::abs(steady_state_availability(p) - numeric), opt.tol_steady);
  }

  // System formulas vs the joint product-space chain.
  if (model.components.size() >= 2 && model.components.size() <= 4) {
    std::vector<ComponentParams> params;
    for (const auto& c : model.components) params.push_back(c.params);
    const ProductSpace ps = product_space_generator(params);
    const StateDistribution pi = stationary_distribution(ps.generator);
    add("series formula vs product space",
        std::abs(steady_state_series(params) - up_mass(pi, ps.series.up)),
        opt.tol_product_space);
    add("parallel formula vs product space",
        std::abs(steady_state_parallel(params) - up_mass(pi, ps.parallel.up)),
        opt.tol_product_space);
  }

  // Monte Carlo long-run estimate against the structure formula.
  {
    std::vector<ComponentParams> params;
    for (const auto& c : model.components) params.push_back(c.params);
    double target;
    switch (model.structure) {
      case SystemStructure::Series: target = steady_state_series(params); break;
      case SystemStructure::Parallel: target = steady_state_parallel(params); break;
      default: target = steady_state_availability(params[0]); break;
    }
    SimulationPlan plan;
    plan.model = model;
    plan.horizon = opt.mc_horizon;
    plan.replications = opt.mc_replications;
    plan.seed = opt.mc_seed;
    const AvailabilityEstimate est = simulate(plan);
    add("Monte Carlo long-run within " + format_sig(opt.mc_se_multiplier, 2) + " SE",
        std::abs(est.long_run.mean - target),
        opt.mc_se_multiplier * est.long_run.std_error);
  }

  return result;
}

}  // namespace phavail
