#include "phavail/phase_type.hpp"

#include <algorithm>
#include <cmath>

namespace phavail {

PhaseTypeDistribution PhaseTypeDistribution::validate(Eigen::RowVectorXd alpha,
                                                      Eigen::MatrixXd A) {
  if (A.rows() != A.cols()) throw NonSquare(A.rows(), A.cols());
  if (alpha.size() != A.rows()) throw DimensionMismatch(A.rows(), alpha.size());
  const int m = static_cast<int>(A.rows());

  for (int i = 0; i < m; ++i) {
    if (alpha[i] < 0.0)
      throw Error("alpha[" + std::to_string(i) + "] is negative");
  }
  if (std::abs(alpha.sum() - 1.0) > 1e-12)
    throw Error("alpha must sum to 1 over the transient states, got " +
                std::to_string(alpha.sum()));
  for (int i = 0; i < m; ++i) {
    if (!(A(i, i) < 0.0))
      throw Error("A diagonal must be negative at state " + std::to_string(i));
    for (int j = 0; j < m; ++j)
      if (i != j && A(i, j) < 0.0) throw NegativeOffDiagonal(i, j, A(i, j));
    if (A.row(i).sum() > 1e-12)
      throw Error("A row " + std::to_string(i) + " has positive sum");
  }
  if (!Eigen::FullPivLU<Eigen::MatrixXd>(A).isInvertible())
    throw SingularMatrix("transient matrix A is singular; some phase never absorbs");
  return PhaseTypeDistribution(std::move(alpha), std::move(A));
}

double ph_survival(const PhaseTypeDistribution& ph, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw NegativeTime(t);
  if (t == 0.0) return 1.0;
  const Eigen::RowVectorXd w = expm_action(ph.A(), ph.alpha(), t);
  return std::clamp(w.sum(), 0.0, 1.0);
}

PhaseTypeDistribution lindley_ph(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw NonPositiveRate("lambda", lambda);
  Eigen::MatrixXd A(3, 3);
  A << -lambda, 0.0, 0.0,
       0.0, -lambda, lambda,
       0.0, 0.0, -lambda;
  Eigen::RowVectorXd alpha(3);
  // Direct entry to the second gamma stage is impossible.
  alpha << lambda / (lambda + 1.0), 1.0 / (lambda + 1.0), 0.0;
  return PhaseTypeDistribution::validate(std::move(alpha), std::move(A));
}

double lindley_survival_closed(double lambda, double t) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw NonPositiveRate("lambda", lambda);
  if (!(t >= 0.0) || !std::isfinite(t)) throw NegativeTime(t);
  return (1.0 + lambda * t / (lambda + 1.0)) * std::exp(-lambda * t);
}

double ph_mean(const PhaseTypeDistribution& ph) {
  // -alpha * A^{-1} * ones, via one linear solve A x = ones.
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(ph.A());
  Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(ph.order()));
  if (!x.allFinite()) throw SingularMatrix("phase-type mean: singular A");
  const double mean = -(ph.alpha() * x).value();
  if (!(mean > 0.0) || !std::isfinite(mean))
    throw SingularMatrix("phase-type mean is not positive");
  return mean;
}

double ph_sample(const PhaseTypeDistribution& ph, std::mt19937_64& rng) {
  const int m = ph.order();
  const Eigen::VectorXd exit = ph.exit_rates();

  // Initial phase ~ alpha.
  int state = m - 1;
  {
    double u = uniform01(rng);
    for (int i = 0; i < m; ++i) {
      u -= ph.alpha()[i];
      if (u < 0.0) { state = i; break; }
    }
  }

  double time = 0.0;
  for (;;) {
    const double total = -ph.A()(state, state);
    time += sample_exponential(total, rng);
    // Competing transitions: absorb with probability exit/total, otherwise
    // jump to phase j with probability A(state,j)/total.
    double u = uniform01(rng) * total;
    u -= exit[state];
    if (u < 0.0) return time;
    int next = -1;
    for (int j = 0; j < m; ++j) {
      if (j == state) continue;
      u -= ph.A()(state, j);
      if (u < 0.0) { next = j; break; }
    }
    // Roundoff in the cumulative scan can only land here when the remaining
    // mass is ~ulp; absorb in that case.
    if (next < 0) return time;
    state = next;
  }
}

}  // namespace phavail
