#pragma once

#include <random>

#include <Eigen/Dense>

#include "phavail/ctmc.hpp"
#include "phavail/errors.hpp"

namespace phavail {

/// Distribution of the absorption time of a CTMC with m transient states:
/// initial vector alpha over the transient states and transient-transition
/// matrix A. Mass exits to the implicit absorbing state at per-state rate
/// -(row sum of A).
class PhaseTypeDistribution {
 public:
  /// Validates alpha (non-negative, sums to one) and A (negative diagonal,
  /// non-negative off-diagonals, row sums <= 0, invertible).
  static PhaseTypeDistribution validate(Eigen::RowVectorXd alpha,
                                        Eigen::MatrixXd A);

  int order() const { return static_cast<int>(A_.rows()); }
  const Eigen::RowVectorXd& alpha() const { return alpha_; }
  const Eigen::MatrixXd& A() const { return A_; }

  /// Exit rate to absorption from each transient state: -(A * ones).
  Eigen::VectorXd exit_rates() const { return -A_.rowwise().sum(); }

 private:
  PhaseTypeDistribution(Eigen::RowVectorXd a, Eigen::MatrixXd m)
      : alpha_(std::move(a)), A_(std::move(m)) {}
  Eigen::RowVectorXd alpha_;
  Eigen::MatrixXd A_;
};

/// Survival function R(t) = alpha * exp(A t) * ones.
double ph_survival(const PhaseTypeDistribution& ph, double t);

/// Order-3 representation of the Lindley distribution with rate lambda:
/// an exponential phase chosen with weight lambda/(lambda+1), or a two-stage
/// gamma path chosen with the complementary weight.
PhaseTypeDistribution lindley_ph(double lambda);

/// Lindley survival in closed form: (1 + lambda*t/(lambda+1)) * exp(-lambda*t).
double lindley_survival_closed(double lambda, double t);

/// Expected absorption time: -alpha * A^{-1} * ones.
double ph_mean(const PhaseTypeDistribution& ph);

/// One absorption time, simulating the phase path (exponential sojourns,
/// competing-rate transitions). Deterministic for a fixed engine state.
double ph_sample(const PhaseTypeDistribution& ph, std::mt19937_64& rng);

/// Uniform in [0,1) from the top 53 bits of the engine output. Used by all
/// samplers so streams are reproducible independent of the standard
/// library's distribution implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Exponential variate with the given rate via inverse CDF.
inline double sample_exponential(double rate, std::mt19937_64& rng) {
  return -std::log1p(-uniform01(rng)) / rate;
}

}  // namespace phavail
