#include "phavail/mc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "phavail/phase_type.hpp"

namespace phavail {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t root, std::uint64_t rep,
                             std::uint64_t comp) {
  std::uint64_t x = splitmix64(root ^ (0x9E3779B97F4A7C15ULL * (rep + 1)));
  return splitmix64(x ^ (0xBF58476D1CE4E5B9ULL * (comp + 1)));
}

// Times at which one component flips state over [0, horizon], starting Up.
// Even indices are failures, odd indices repair completions. A mu = 0
// component fails once and stays down.
std::vector<double> component_toggles(const ComponentParams& p,
                                      const PhaseTypeDistribution* ph,
                                      double horizon, std::mt19937_64& rng) {
  std::vector<double> toggles;
  double t = 0.0;
  for (;;) {
    t += ph ? ph_sample(*ph, rng) : sample_exponential(p.lambda, rng);
    if (t >= horizon) break;
    toggles.push_back(t);
    if (p.mu == 0.0) break;
    t += sample_exponential(p.mu, rng);
    if (t >= horizon) break;
    toggles.push_back(t);
  }
  return toggles;
}

bool up_at(const std::vector<double>& toggles, double t) {
  const auto n = std::upper_bound(toggles.begin(), toggles.end(), t) -
                 toggles.begin();
  return n % 2 == 0;
}

bool system_up(const SystemModel& model, const std::vector<bool>& comp_up) {
  switch (model.structure) {
    case SystemStructure::Single:
      return comp_up[0];
    case SystemStructure::Series:
      return std::ranges::all_of(comp_up, [](bool b) { return b; });
    case SystemStructure::Parallel:
      return std::ranges::any_of(comp_up, [](bool b) { return b; });
  }
  return false;
}

PointEstimate mean_and_se(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace

AvailabilityEstimate simulate(const SimulationPlan& plan) {
  plan.model.check();
  if (plan.replications < 1)
    throw InvalidPlan("replications must be >= 1");
  if (!(plan.horizon > 0.0) || !std::isfinite(plan.horizon))
    throw InvalidPlan("horizon must be positive and finite");
  double prev = -1.0;
  for (double c : plan.checkpoints) {
    if (c < 0.0 || c > plan.horizon)
      throw InvalidPlan("checkpoint outside [0, horizon]");
    if (c <= prev) throw InvalidPlan("checkpoints must be increasing");
    prev = c;
  }
  const double burn_in =
      plan.burn_in < 0.0 ? 0.2 * plan.horizon : plan.burn_in;
  if (burn_in >= plan.horizon)
    throw InvalidPlan("burn-in must be shorter than the horizon");

  const auto& comps = plan.model.components;
  const int n_comp = static_cast<int>(comps.size());

  // Phase-type samplers are shared across replications (immutable).
  std::vector<PhaseTypeDistribution> phs;
  std::vector<const PhaseTypeDistribution*> ph_of(n_comp, nullptr);
  phs.reserve(n_comp);
  for (int c = 0; c < n_comp; ++c) {
    if (comps[c].params.law == DistributionLaw::Lindley) {
      phs.push_back(lindley_ph(comps[c].params.lambda));
      ph_of[c] = &phs.back();
    }
  }

  std::vector<double> longrun_per_rep(plan.replications);
  std::vector<double> up_counts(plan.checkpoints.size(), 0.0);
  std::vector<std::vector<double>> toggles(n_comp);
  std::vector<bool> comp_up(n_comp);

  for (int rep = 0; rep < plan.replications; ++rep) {
    for (int c = 0; c < n_comp; ++c) {
      std::mt19937_64 rng(substream_seed(plan.seed, rep, c));
      toggles[c] = component_toggles(comps[c].params, ph_of[c], plan.horizon, rng);
    }

    // Pointwise state at each checkpoint.
    for (std::size_t k = 0; k < plan.checkpoints.size(); ++k) {
      for (int c = 0; c < n_comp; ++c)
        comp_up[c] = up_at(toggles[c], plan.checkpoints[k]);
      if (system_up(plan.model, comp_up)) up_counts[k] += 1.0;
    }

    // Time-average of the system state over [burn_in, horizon]: sweep the
    // merged toggle sequence.
    std::vector<std::pair<double, int>> events;  // (time, component)
    for (int c = 0; c < n_comp; ++c)
      for (double t : toggles[c]) events.emplace_back(t, c);
    std::ranges::sort(events);

    std::fill(comp_up.begin(), comp_up.end(), true);
    double cursor = 0.0, up_time = 0.0;
    bool up = system_up(plan.model, comp_up);
    for (const auto& [t, c] : events) {
      if (up) up_time += std::max(0.0, std::min(t, plan.horizon) - std::max(cursor, burn_in));
      cursor = t;
      comp_up[c] = !comp_up[c];
      up = system_up(plan.model, comp_up);
    }
    if (up) up_time += std::max(0.0, plan.horizon - std::max(cursor, burn_in));
    longrun_per_rep[rep] = up_time / (plan.horizon - burn_in);
  }

  AvailabilityEstimate est;
  est.burn_in = burn_in;
  est.long_run = mean_and_se(longrun_per_rep);
  const double r = static_cast<double>(plan.replications);
  for (double count : up_counts) {
    const double p = count / r;
    est.pointwise.push_back({p, std::sqrt(p * (1.0 - p) / r)});
  }
  return est;
}

}  // namespace phavail
