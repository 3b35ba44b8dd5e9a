#include "phavail/system.hpp"

#include <algorithm>
#include <cmath>

namespace phavail {

void SystemModel::check() const {
  if (components.empty()) throw EmptySystem();
  if (structure == SystemStructure::Single && components.size() != 1)
    throw Error("single-structure model must have exactly one component, got " +
                std::to_string(components.size()));
  for (const auto& c : components) c.params.check();
}

double steady_state_series(std::span<const ComponentParams> components) {
  if (components.empty()) throw EmptySystem();
  double prod = 1.0;
  for (const auto& p : components) {
    p.check();
    if (p.mu <= 0.0) throw NonPositiveRate("mu", p.mu);
    prod *= steady_state_availability(p);
  }
  return prod;
}

double steady_state_parallel(std::span<const ComponentParams> components) {
  if (components.empty()) throw EmptySystem();
  double prod_down = 1.0;
  for (const auto& p : components) {
    p.check();
    if (p.mu <= 0.0) throw NonPositiveRate("mu", p.mu);
    prod_down *= 1.0 - steady_state_availability(p);
  }
  return 1.0 - prod_down;
}

namespace {

double component_availability(const ComponentParams& p, double t) {
  return p.law == DistributionLaw::Lindley
             ? availability_closed(p.lambda, p.mu, t)
             : availability_exponential_closed(p.lambda, p.mu, t);
}

// Per-component building block of the product space.
struct Block {
  Eigen::MatrixXd Q;
  Eigen::RowVectorXd p0;
  int failed_state;  // index of the down state within the block
};

Block make_block(const ComponentParams& p) {
  p.check();
  if (p.law == DistributionLaw::Lindley) {
    return Block{build_single_component_generator(p).rates(),
                 lindley_initial_distribution(p.lambda).probs(), 3};
  }
  Eigen::MatrixXd Q(2, 2);
  Q << -p.lambda, p.lambda, p.mu, -p.mu;
  Eigen::RowVectorXd p0(2);
  p0 << 1.0, 0.0;
  return Block{std::move(Q), std::move(p0), 1};
}

}  // namespace

AvailabilityCurve system_availability_curve(const SystemModel& model,
                                            std::span<const double> grid) {
  model.check();
  double prev = -1.0;
  for (double t : grid) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw NegativeTime(t);
    if (t <= prev) throw Error("time grid must be strictly increasing");
    prev = t;
  }

  AvailabilityCurve curve;
  curve.times.assign(grid.begin(), grid.end());
  curve.values.reserve(grid.size());
  curve.provenance = CurveKind::ClosedForm;
  for (double t : grid) {
    double value;
    switch (model.structure) {
      case SystemStructure::Single:
        value = component_availability(model.components[0].params, t);
        break;
      case SystemStructure::Series: {
        value = 1.0;
        for (const auto& c : model.components)
          value *= component_availability(c.params, t);
        break;
      }
      case SystemStructure::Parallel: {
        double down = 1.0;
        for (const auto& c : model.components)
          down *= 1.0 - component_availability(c.params, t);
        value = 1.0 - down;
        break;
      }
    }
    curve.values.push_back(value);
  }
  return curve;
}

ProductSpace product_space_generator(std::span<const ComponentParams> components) {
  if (components.empty()) throw EmptySystem();
  if (components.size() > 4) throw TooManyComponents(components.size());

  std::vector<Block> blocks;
  blocks.reserve(components.size());
  long total = 1;
  for (const auto& p : components) {
    blocks.push_back(make_block(p));
    total *= blocks.back().Q.rows();
  }
  const int n_comp = static_cast<int>(blocks.size());

  // Strides for lexicographic indexing, first component most significant.
  std::vector<long> stride(n_comp);
  long s = 1;
  for (int i = n_comp - 1; i >= 0; --i) {
    stride[i] = s;
    s *= blocks[i].Q.rows();
  }

  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(total, total);
  Eigen::RowVectorXd p0 = Eigen::RowVectorXd::Ones(total);
  StateClassification series, parallel;

  std::vector<int> digits(n_comp);
  for (long state = 0; state < total; ++state) {
    long rem = state;
    int failed = 0;
    for (int i = 0; i < n_comp; ++i) {
      digits[i] = static_cast<int>(rem / stride[i]);
      rem %= stride[i];
      if (digits[i] == blocks[i].failed_state) ++failed;
      p0[state] *= blocks[i].p0[digits[i]];
    }

    // Kronecker sum: one component moves at a time, diagonal is the sum of
    // the per-component diagonals.
    double diag = 0.0;
    for (int i = 0; i < n_comp; ++i) {
      const auto& Qi = blocks[i].Q;
      diag += Qi(digits[i], digits[i]);
      for (int to = 0; to < Qi.rows(); ++to) {
        if (to == digits[i]) continue;
        const long target = state + (to - digits[i]) * stride[i];
        Q(state, target) += Qi(digits[i], to);
      }
    }
    Q(state, state) = diag;

    const int idx = static_cast<int>(state);
    if (failed == 0) series.up.push_back(idx); else series.down.push_back(idx);
    if (failed == n_comp) parallel.down.push_back(idx); else parallel.up.push_back(idx);
  }

  return ProductSpace{GeneratorMatrix::validate(Q),
                      StateDistribution::validate(p0), std::move(series),
                      std::move(parallel)};
}

}  // namespace phavail
