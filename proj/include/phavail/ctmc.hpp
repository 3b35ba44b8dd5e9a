#pragma once

#include <Eigen/Dense>

#include "phavail/errors.hpp"

namespace phavail {

/// Numeric tolerances of the CTMC engine. Defaults are the module contract;
/// callers may override per call.
struct CtmcTolerances {
  double row_sum = 1e-12;              ///< generator row-sum validation
  double distribution = 1e-12;         ///< probability-vector validation
  double stationary_residual = 1e-12;  ///< max |pi*Q| accepted after solve
  double poisson_tail = 1e-12;         ///< truncated Poisson mass budget
  double uniformization_slack = 1.05;  ///< Lambda = slack * max|Q_ii|
};

/// Transition-rate matrix of a finite CTMC: non-negative off-diagonals,
/// non-positive diagonal, zero row sums. Immutable once validated.
class GeneratorMatrix {
 public:
  /// Validates a raw square matrix. Never repairs entries: any violation
  /// throws (NonSquare, NegativeOffDiagonal, RowSumNonzero).
  static GeneratorMatrix validate(const Eigen::MatrixXd& raw,
                                  const CtmcTolerances& tol = {});

  int order() const { return static_cast<int>(rates_.rows()); }
  const Eigen::MatrixXd& rates() const { return rates_; }

 private:
  explicit GeneratorMatrix(Eigen::MatrixXd m) : rates_(std::move(m)) {}
  Eigen::MatrixXd rates_;
};

/// Probability row vector over the chain's states: entries in [0,1],
/// summing to one.
class StateDistribution {
 public:
  /// Validates entries and sum within `tol`; roundoff-sized excursions
  /// outside [0,1] are clipped, anything larger throws.
  static StateDistribution validate(const Eigen::RowVectorXd& probs,
                                    double tol = 1e-12);

  /// Unit mass on one state.
  static StateDistribution point_mass(int n, int state);

  int size() const { return static_cast<int>(probs_.size()); }
  const Eigen::RowVectorXd& probs() const { return probs_; }
  double operator[](int i) const { return probs_[i]; }

 private:
  explicit StateDistribution(Eigen::RowVectorXd p) : probs_(std::move(p)) {}
  Eigen::RowVectorXd probs_;
};

/// P(t) = p0 * exp(Q t) by uniformization (Jensen's method).
StateDistribution transient_distribution(const GeneratorMatrix& Q,
                                         const StateDistribution& p0, double t,
                                         const CtmcTolerances& tol = {});

/// Stationary distribution pi with pi*Q = 0, sum(pi) = 1. Dense LU solve
/// with the last balance equation replaced by normalization; throws
/// SingularSystem if the chain is reducible or the residual check fails.
StateDistribution stationary_distribution(const GeneratorMatrix& Q,
                                          const CtmcTolerances& tol = {});

/// v * exp(A t) for a sub-stochastic transient matrix A (row sums <= 0).
/// A is embedded into a generator with one appended absorbing state and the
/// same uniformization engine is run, then the appended coordinate dropped.
Eigen::RowVectorXd expm_action(const Eigen::MatrixXd& A,
                               const Eigen::RowVectorXd& v, double t,
                               const CtmcTolerances& tol = {});

}  // namespace phavail
