// Test-only numerical oracles, independent of the library's solvers.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

// ---- adaptive quadrature with an embedded Gauss-Legendre pair ----

inline std::pair<double, double> legendre_with_deriv(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

struct GaussRule {
  std::vector<double> nodes, weights;  // on [-1, 1]
  explicit GaussRule(int n) : nodes(n), weights(n) {
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 64; ++it) {
        auto [p, dp] = legendre_with_deriv(n, x);
        const double dx = -p / dp;
        x += dx;
        if (std::abs(dx) < 1e-16) break;
      }
      auto [p, dp] = legendre_with_deriv(n, x);
      (void)p;
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
  double apply(const std::function<double(double)>& f, double a, double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      s += weights[i] * f(mid + half * nodes[i]);
    return s * half;
  }
};

inline double adaptive_panel(const std::function<double(double)>& f, double a,
                             double b, double tol, const GaussRule& lo,
                             const GaussRule& hi, int depth) {
  const double coarse = lo.apply(f, a, b);
  const double fine = hi.apply(f, a, b);
  if (std::abs(fine - coarse) <= tol || depth >= 48) return fine;
  const double mid = 0.5 * (a + b);
  return adaptive_panel(f, a, mid, 0.5 * tol, lo, hi, depth + 1) +
         adaptive_panel(f, mid, b, 0.5 * tol, lo, hi, depth + 1);
}

/// Integral of f over [a, b] to absolute tolerance abs_tol.
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double abs_tol = 1e-10) {
  static const GaussRule lo(15), hi(31);
  return adaptive_panel(f, a, b, abs_tol, lo, hi, 0);
}

// ---- dense matrix exponential by scaling-and-squaring Taylor ----

inline Eigen::MatrixXd expm_taylor(const Eigen::MatrixXd& M) {
  const long n = M.rows();
  double norm = M.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm > 0.25) {
    norm *= 0.5;
    ++squarings;
  }
  const Eigen::MatrixXd A = M / std::pow(2.0, squarings);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd sum = term;
  for (int k = 1; k <= 60; ++k) {
    term = (term * A) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-22) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// ---- Kolmogorov-Smirnov statistic ----

inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = cdf(samples[i]);
    d = std::max(d, F - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - F);
  }
  return d;
}

/// Asymptotic KS critical value sqrt(-ln(alpha/2)/2)/sqrt(n).
inline double ks_critical(double alpha, std::size_t n) {
  return std::sqrt(-std::log(alpha / 2.0) / 2.0) / std::sqrt(static_cast<double>(n));
}

// ---- central finite difference ----

inline double central_diff(const std::function<double(double)>& f, double x,
                           double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// ---- random CTMC generators for property tests ----

inline Eigen::MatrixXd random_generator(int n, std::mt19937_64& rng,
                                        double rate_scale = 1.0) {
  std::uniform_real_distribution<double> u(0.0, rate_scale);
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Q(i, j) = u(rng);
      row += Q(i, j);
    }
    Q(i, i) = -row;
  }
  return Q;
}

}  // namespace oracles
