#include "phavail/lindley.hpp"

#include <algorithm>
#include <cmath>

#include "phavail/phase_type.hpp"

namespace phavail {

namespace {
// Relative discriminant threshold for the critical branch.
constexpr double kCriticalEps = 1e-9;

void check_rate(const char* name, double v, bool strictly_positive) {
  const bool ok = std::isfinite(v) && (strictly_positive ? v > 0.0 : v >= 0.0);
  if (!ok) throw NonPositiveRate(name, v);
}

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw NegativeTime(t);
}
}  // namespace

void ComponentParams::check() const {
  check_rate("lambda", lambda, true);
  check_rate("mu", mu, false);
}

ClosedFormTerms closed_form_terms(double lambda, double mu) {
  check_rate("lambda", lambda, true);
  check_rate("mu", mu, false);

  ClosedFormTerms terms{};
  const double lp1 = lambda + 1.0;
  terms.disc = mu * mu - 4.0 * lambda * mu / lp1;
  terms.omega = std::sqrt(std::abs(terms.disc));
  terms.steady =
      mu * (lambda + 2.0) / (lambda * lp1 + mu * (lambda + 2.0));
  terms.decay = lambda + 0.5 * mu;

  // Numerator of the M coefficient.
  const double num = (mu - 2.0) * lambda * lambda + 2.0 * (mu - 1.0) * lambda - mu;
  if (terms.disc > kCriticalEps * mu * mu) {
    terms.branch = ClosedFormBranch::Hyperbolic;
    terms.bigM = num / (terms.omega * lp1 * lp1);
  } else if (terms.disc < -kCriticalEps * mu * mu) {
    terms.branch = ClosedFormBranch::Trigonometric;
    terms.bigM = num / (terms.omega * lp1 * lp1);
  } else {
    // omega -> 0 limit: M*sinh(omega*t/2) -> K*t.
    terms.branch = ClosedFormBranch::Critical;
    terms.bigM = num / (2.0 * lp1 * lp1);
  }
  return terms;
}

GeneratorMatrix build_single_component_generator(const ComponentParams& p) {
  p.check();
  const double l = p.lambda, m = p.mu;
  const double a1 = p.alpha1(), a2 = p.alpha2();
  Eigen::MatrixXd Q(4, 4);
  Q << -l, 0.0, 0.0, l,
       0.0, -l, l, 0.0,
       0.0, 0.0, -l, l,
       m * a1, m * a2, 0.0, -m;
  // Repair row sums to -m + m*(a1+a2); force the diagonal so validation is
  // exact even when a1 + a2 rounds away from 1.
  Q(3, 3) = -(Q(3, 0) + Q(3, 1));
  return GeneratorMatrix::validate(Q);
}

StateDistribution lindley_initial_distribution(double lambda) {
  check_rate("lambda", lambda, true);
  Eigen::RowVectorXd p0(4);
  p0 << lambda / (lambda + 1.0), 1.0 / (lambda + 1.0), 0.0, 0.0;
  return StateDistribution::validate(p0);
}

double availability_closed(double lambda, double mu, double t) {
  check_rate("lambda", lambda, true);
  check_rate("mu", mu, false);
  check_time(t);
  if (t == 0.0) return 1.0;
  if (mu == 0.0) return reliability_lindley(lambda, t);

  const ClosedFormTerms c = closed_form_terms(lambda, mu);
  double transient;
  switch (c.branch) {
    case ClosedFormBranch::Hyperbolic: {
      // e^{-decay t} (cosh - M sinh) regrouped as two pure exponentials;
      // omega < mu guarantees both exponents are negative, so no overflow.
      const double a = 0.5 * c.omega - c.decay;
      const double b = -0.5 * c.omega - c.decay;
      return std::clamp(c.steady + (1.0 - c.steady) * 0.5 *
                                       ((1.0 - c.bigM) * std::exp(a * t) +
                                        (1.0 + c.bigM) * std::exp(b * t)),
                        0.0, 1.0);
    }
    case ClosedFormBranch::Trigonometric:
      // cosh(i x) = cos x, M sinh(i x) = (num/(omega_tilde ...)) sin x.
      transient = std::cos(0.5 * c.omega * t) - c.bigM * std::sin(0.5 * c.omega * t);
      break;
    case ClosedFormBranch::Critical:
      transient = 1.0 - c.bigM * t;
      break;
  }
  return std::clamp(
      c.steady + (1.0 - c.steady) * transient * std::exp(-c.decay * t), 0.0,
      1.0);
}

double availability_numeric(double lambda, double mu, double t) {
  const ComponentParams p{lambda, mu, DistributionLaw::Lindley};
  const GeneratorMatrix Q = build_single_component_generator(p);
  const StateDistribution p0 = lindley_initial_distribution(lambda);
  const StateDistribution pt = transient_distribution(Q, p0, t);
  return std::clamp(1.0 - pt[3], 0.0, 1.0);
}

double steady_state_availability(const ComponentParams& p) {
  p.check();
  if (p.mu == 0.0) return 0.0;
  if (p.law == DistributionLaw::Exponential) return p.mu / (p.lambda + p.mu);
  return p.mu * (p.lambda + 2.0) /
         (p.lambda * (p.lambda + 1.0) + p.mu * (p.lambda + 2.0));
}

double availability_exponential_closed(double lambda, double mu, double t) {
  check_rate("lambda", lambda, true);
  check_rate("mu", mu, false);
  check_time(t);
  if (t == 0.0) return 1.0;
  const double s = lambda + mu;
  return std::clamp(mu / s + lambda / s * std::exp(-s * t), 0.0, 1.0);
}

double reliability_lindley(double lambda, double t) {
  check_rate("lambda", lambda, true);
  check_time(t);
  return lindley_survival_closed(lambda, t);
}

double mttf_lindley(double lambda) {
  check_rate("lambda", lambda, true);
  return (lambda + 2.0) / (lambda * (lambda + 1.0));
}

double mttr(double mu) {
  check_rate("mu", mu, true);
  return 1.0 / mu;
}

double dA_dlambda(double lambda, double mu) {
  check_rate("lambda", lambda, true);
  check_rate("mu", mu, true);
  const double den = lambda * (lambda + 1.0) + mu * (lambda + 2.0);
  return -mu * (lambda * lambda + 4.0 * lambda + 2.0) / (den * den);
}

double dA_dmu(double lambda, double mu) {
  check_rate("lambda", lambda, true);
  check_rate("mu", mu, false);
  const double den = lambda * (lambda + 1.0) + mu * (lambda + 2.0);
  return lambda * (lambda + 1.0) * (lambda + 2.0) / (den * den);
}

}  // namespace phavail
