#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phavail/config.hpp"
#include "phavail/report.hpp"
#include "phavail/svg.hpp"
#include "phavail/verify.hpp"

namespace {

using namespace phavail;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitVerifyFailed = 3;

struct GridFlags {
  double t_start = -1.0;
  double t_stop = -1.0;
  int points = -1;
  bool log_spacing = false;
};

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
  cmd->add_option("--t-start", g.t_start, "grid start time (days)");
  cmd->add_option("--t-stop", g.t_stop, "grid stop time (days)");
  cmd->add_option("--points", g.points, "number of grid points");
  cmd->add_flag("--log", g.log_spacing, "log-spaced grid");
}

std::vector<double> resolve_grid(const AnalysisOptions& defaults,
                                 const GridFlags& flags, const CLI::App* cmd) {
  AnalysisOptions a = defaults;
  if (cmd->count("--t-start")) a.t_start = flags.t_start;
  if (cmd->count("--t-stop")) a.t_stop = flags.t_stop;
  if (cmd->count("--points")) a.points = flags.points;
  if (cmd->count("--log")) a.log_spacing = true;
  if (!(a.t_start >= 0.0) || !(a.t_stop > a.t_start) || a.points < 2)
    throw ConfigError("grid requires 0 <= t-start < t-stop and points >= 2");
  return make_grid(a);
}

void emit(const std::string& content, const std::string& csv_path) {
  if (csv_path.empty())
    std::cout << content;
  else
    write_file_atomic(csv_path, content);
}

double component_avail(const ComponentParams& p, DistributionLaw law, double t) {
  return law == DistributionLaw::Lindley
             ? availability_closed(p.lambda, p.mu, t)
             : availability_exponential_closed(p.lambda, p.mu, t);
}

void write_availability_svg(const SystemModel& model,
                            const std::vector<double>& grid,
                            const std::string& path) {
  std::vector<ChartSeries> series;
  for (const auto& c : model.components) {
    ChartSeries lin{c.label + " (Lindley)", grid, {}};
    ChartSeries exp{c.label + " (exponential)", grid, {}};
    for (double t : grid) {
      lin.y.push_back(component_avail(c.params, DistributionLaw::Lindley, t));
      exp.y.push_back(component_avail(c.params, DistributionLaw::Exponential, t));
    }
    series.push_back(std::move(lin));
    series.push_back(std::move(exp));
  }
  if (model.structure != SystemStructure::Single) {
    const AvailabilityCurve sys = system_availability_curve(model, grid);
    series.push_back({"system", grid, sys.values});
  }
  write_file_atomic(path, render_line_chart("Availability: " + model.name,
                                            "t (days)", "A(t)", series));
}

void write_reliability_svg(const SystemModel& model,
                           const std::vector<double>& grid,
                           const std::string& path) {
  std::vector<ChartSeries> series;
  for (const auto& c : model.components) {
    ChartSeries with{c.label + " (with repair)", grid, {}};
    ChartSeries without{c.label + " (no repair)", grid, {}};
    for (double t : grid) {
      with.y.push_back(component_avail(c.params, c.params.law, t));
      without.y.push_back(c.params.law == DistributionLaw::Lindley
                              ? reliability_lindley(c.params.lambda, t)
                              : std::exp(-c.params.lambda * t));
    }
    series.push_back(std::move(with));
    series.push_back(std::move(without));
  }
  write_file_atomic(path, render_line_chart("Reliability: " + model.name,
                                            "t (days)", "R(t) / A(t)", series));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repairable-system availability toolkit (Lindley failure law, "
               "phase-type based)"};
  app.require_subcommand(1);

  std::string model_path, csv_path, svg_path, component_filter;
  GridFlags grid_flags;
  std::string param_name = "lambda";
  std::vector<double> values;
  VerifyOptions verify_opts;

  auto add_model = [&model_path](CLI::App* cmd) {
    cmd->add_option("--model", model_path, "model config (JSON)")->required();
  };

  CLI::App* availability =
      app.add_subcommand("availability", "A(t) per component under both laws, CSV/SVG");
  add_model(availability);
  add_grid_flags(availability, grid_flags);
  availability->add_option("--csv", csv_path, "CSV output path (default stdout)");
  availability->add_option("--svg", svg_path, "SVG chart output path");

  CLI::App* reliability = app.add_subcommand(
      "reliability", "with-repair vs no-repair curves per component, CSV/SVG");
  add_model(reliability);
  add_grid_flags(reliability, grid_flags);
  reliability->add_option("--csv", csv_path, "CSV output path (default stdout)");
  reliability->add_option("--svg", svg_path, "SVG chart output path");

  CLI::App* steady = app.add_subcommand(
      "steady-state", "long-run availability table under both laws");
  add_model(steady);

  CLI::App* sensitivity = app.add_subcommand(
      "sensitivity", "steady-state availability and its derivative over a rate grid");
  add_model(sensitivity);
  sensitivity->add_option("--param", param_name, "rate to vary: lambda or mu")
      ->check(CLI::IsMember({"lambda", "mu"}));
  sensitivity->add_option("--values", values, "rate values (comma separated); default nominal x {0.5,1,1.5,2}")
      ->delimiter(',');
  sensitivity->add_option("--component", component_filter,
                          "restrict to one component label");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check closed forms vs CTMC solves vs Monte Carlo");
  add_model(verify);
  verify->add_option("--tol", verify_opts.tol_closed_vs_numeric,
                     "closed-form vs CTMC tolerance");
  verify->add_option("--seed", verify_opts.mc_seed, "Monte Carlo root seed");
  verify->add_option("--reps", verify_opts.mc_replications, "Monte Carlo replications");
  verify->add_option("--horizon", verify_opts.mc_horizon, "Monte Carlo horizon (days)");
  verify->add_option("--perturb-closed", verify_opts.closed_form_perturbation,
                     "test hook: bias added to closed-form values")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ModelConfig cfg = load_model_config(model_path);

    if (availability->parsed()) {
      const std::vector<double> grid = resolve_grid(cfg.analysis, grid_flags, availability);
      emit(availability_csv(cfg.model, grid), csv_path);
      if (!svg_path.empty()) write_availability_svg(cfg.model, grid, svg_path);
    } else if (reliability->parsed()) {
      const std::vector<double> grid = resolve_grid(cfg.analysis, grid_flags, reliability);
      emit(reliability_csv(cfg.model, grid), csv_path);
      if (!svg_path.empty()) write_reliability_svg(cfg.model, grid, svg_path);
    } else if (steady->parsed()) {
      std::cout << render_table(steady_state_report(cfg.model));
    } else if (sensitivity->parsed()) {
      const SensitivityParam param = param_name == "mu" ? SensitivityParam::Mu
                                                        : SensitivityParam::Lambda;
      bool matched = false;
      bool first = true;
      for (const auto& c : cfg.model.components) {
        if (!component_filter.empty() && c.label != component_filter) continue;
        matched = true;
        if (!first) std::cout << "\n";
        first = false;
        std::cout << render_table(sensitivity_report(c, param, values));
      }
      if (!matched)
        throw ConfigError("no component labeled '" + component_filter + "'");
    } else if (verify->parsed()) {
      const VerifyResult res = run_verification(cfg.model, verify_opts);
      std::cout << render_table(res.table());
      if (!res.all_passed) return kExitVerifyFailed;
    }
  } catch (const phavail::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
