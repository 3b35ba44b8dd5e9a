#include "phavail/ctmc.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace phavail {

GeneratorMatrix GeneratorMatrix::validate(const Eigen::MatrixXd& raw,
                                          const CtmcTolerances& tol) {
  if (raw.rows() != raw.cols()) throw NonSquare(raw.rows(), raw.cols());
  const int n = static_cast<int>(raw.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && raw(i, j) < 0.0) throw NegativeOffDiagonal(i, j, raw(i, j));
    }
    if (raw(i, i) > 0.0) throw RowSumNonzero(i, raw.row(i).sum());
    const double residual = raw.row(i).sum();
    if (std::abs(residual) > tol.row_sum) throw RowSumNonzero(i, residual);
  }
  return GeneratorMatrix(raw);
}

StateDistribution StateDistribution::validate(const Eigen::RowVectorXd& probs,
                                              double tol) {
  Eigen::RowVectorXd p = probs;
  for (long i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i]) || p[i] < -tol || p[i] > 1.0 + tol)
      throw Error("probability entry " + std::to_string(i) + " out of [0,1]: " +
                  std::to_string(p[i]));
    p[i] = std::clamp(p[i], 0.0, 1.0);
  }
  const double sum = p.sum();
  if (std::abs(sum - 1.0) > tol)
    throw Error("probabilities sum to " + std::to_string(sum) + ", not 1");
  return StateDistribution(std::move(p));
}

StateDistribution StateDistribution::point_mass(int n, int state) {
  Eigen::RowVectorXd p = Eigen::RowVectorXd::Zero(n);
  p[state] = 1.0;
  return StateDistribution(std::move(p));
}

namespace {

// Poisson(rate) weights over [left, right] around the mode, renormalized so
// the kept mass is exactly one. Working from the mode outward avoids
// underflow of e^{-rate} for large rate; the cutoff threshold leaves
// discarded mass orders of magnitude below the tail budget.
struct PoissonWindow {
  long left = 0;
  std::vector<double> weights;  // weights[k - left], normalized
};

PoissonWindow poisson_window(double rate) {
  constexpr double kCutoff = 1e-18;
  const long mode = static_cast<long>(std::floor(rate));

  std::vector<double> up;  // mode, mode+1, ...
  up.push_back(1.0);
  for (long k = mode + 1;; ++k) {
    const double w = up.back() * (rate / static_cast<double>(k));
    if (w < kCutoff && k > static_cast<long>(rate)) break;
    up.push_back(w);
  }
  std::vector<double> down;  // mode-1, mode-2, ...
  for (long k = mode; k > 0;) {
    const double prev = down.empty() ? up.front() : down.back();
    const double w = prev * (static_cast<double>(k) / rate);
    if (w < kCutoff) break;
    down.push_back(w);
    --k;
  }

  PoissonWindow win;
  win.left = mode - static_cast<long>(down.size());
  win.weights.reserve(down.size() + up.size());
  win.weights.insert(win.weights.end(), down.rbegin(), down.rend());
  win.weights.insert(win.weights.end(), up.begin(), up.end());
  double total = 0.0;
  for (double w : win.weights) total += w;
  for (double& w : win.weights) w /= total;
  return win;
}

// v * exp(Q t) where Q is any matrix with zero row sums and non-negative
// off-diagonals. Shared by the public transient and expm_action paths.
Eigen::RowVectorXd uniformized_action(const Eigen::MatrixXd& Q,
                                      const Eigen::RowVectorXd& v, double t,
                                      const CtmcTolerances& tol) {
  const double lambda_max = Q.diagonal().cwiseAbs().maxCoeff();
  if (t == 0.0 || lambda_max == 0.0) return v;

  const double uni_rate = tol.uniformization_slack * lambda_max;
  const long n = Q.rows();
  // P = I + Q / uni_rate is sub-stochastic with non-negative entries.
  Eigen::MatrixXd P = Q / uni_rate;
  P.diagonal().array() += 1.0;

  const PoissonWindow win = poisson_window(uni_rate * t);
  const long right = win.left + static_cast<long>(win.weights.size()) - 1;

  Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(n);
  Eigen::RowVectorXd vk = v;
  for (long k = 0; k <= right; ++k) {
    if (k >= win.left) acc += win.weights[k - win.left] * vk;
    if (k < right) vk = vk * P;
  }
  return acc;
}

}  // namespace

StateDistribution transient_distribution(const GeneratorMatrix& Q,
                                         const StateDistribution& p0, double t,
                                         const CtmcTolerances& tol) {
  if (p0.size() != Q.order())
    throw DimensionMismatch(Q.order(), p0.size());
  if (!(t >= 0.0) || !std::isfinite(t)) throw NegativeTime(t);
  if (t == 0.0 || Q.order() == 1) return p0;
  Eigen::RowVectorXd out = uniformized_action(Q.rates(), p0.probs(), t, tol);
  return StateDistribution::validate(out, 1e-10);
}

StateDistribution stationary_distribution(const GeneratorMatrix& Q,
                                          const CtmcTolerances& tol) {
  const int n = Q.order();
  if (n == 1) return StateDistribution::point_mass(1, 0);

  // Solve Q^T x = 0 with the last equation replaced by sum(x) = 1.
  Eigen::MatrixXd A = Q.rates().transpose();
  A.row(n - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b[n - 1] = 1.0;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  Eigen::VectorXd x = lu.solve(b);
  if (!x.allFinite()) throw SingularSystem("stationary solve produced non-finite entries");

  const Eigen::RowVectorXd pi = x.transpose();
  const double residual = (pi * Q.rates()).cwiseAbs().maxCoeff();
  if (residual > tol.stationary_residual)
    throw SingularSystem("stationary residual " + std::to_string(residual) +
                         " exceeds tolerance (chain reducible?)");
  if (x.minCoeff() < -tol.stationary_residual)
    throw SingularSystem("stationary solve produced negative probabilities");
  return StateDistribution::validate(pi, 1e-12);
}

Eigen::RowVectorXd expm_action(const Eigen::MatrixXd& A,
                               const Eigen::RowVectorXd& v, double t,
                               const CtmcTolerances& tol) {
  if (A.rows() != A.cols()) throw NonSquare(A.rows(), A.cols());
  if (v.size() != A.rows()) throw DimensionMismatch(A.rows(), v.size());
  if (!(t >= 0.0) || !std::isfinite(t)) throw NegativeTime(t);
  if (t == 0.0) return v;

  // Embed into a generator: exit rates flow to an appended absorbing state.
  // Its row is zero, so it never feeds back and the leading block evolves as
  // exp(A t) exactly.
  const long m = A.rows();
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(m + 1, m + 1);
  Q.topLeftCorner(m, m) = A;
  Q.col(m).head(m) = -A.rowwise().sum();
  Eigen::RowVectorXd w(m + 1);
  w.head(m) = v;
  w[m] = std::max(0.0, 1.0 - v.sum());
  return uniformized_action(Q, w, t, tol).head(m);
}

}  // namespace phavail
