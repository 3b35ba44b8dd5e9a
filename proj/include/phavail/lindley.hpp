#pragma once

#include "phavail/ctmc.hpp"
#include "phavail/errors.hpp"

namespace phavail {

enum class DistributionLaw { Lindley, Exponential };

/// One repairable component: failure rate lambda, repair rate mu (per day),
/// and the failure-time law. mu = 0 encodes a non-repairable component.
struct ComponentParams {
  double lambda = 0.0;
  double mu = 0.0;
  DistributionLaw law = DistributionLaw::Lindley;

  /// Mixture weight of the exponential failure path, lambda/(lambda+1).
  double alpha1() const { return lambda / (lambda + 1.0); }
  /// Mixture weight of the two-stage gamma path.
  double alpha2() const { return 1.0 / (lambda + 1.0); }

  /// Throws NonPositiveRate unless lambda > 0 and mu >= 0.
  void check() const;
};

enum class ClosedFormBranch { Hyperbolic, Trigonometric, Critical };

/// Precomputed pieces of the time-dependent availability closed form.
struct ClosedFormTerms {
  double disc;    ///< omega^2 = mu^2 - 4*lambda*mu/(lambda+1)
  double omega;   ///< sqrt(|disc|)
  double bigM;    ///< sinh/sin coefficient; the t-slope K on the Critical branch
  double steady;  ///< long-run availability
  double decay;   ///< lambda + mu/2
  ClosedFormBranch branch;
};

ClosedFormTerms closed_form_terms(double lambda, double mu);

/// The 4-state generator over (E0, G0, G1, F) for a repairable Lindley
/// component: failure through the phase path, exponential repair from F
/// routed back to E0/G0 with the mixture weights.
GeneratorMatrix build_single_component_generator(const ComponentParams& p);

/// Companion initial distribution (alpha1, alpha2, 0, 0).
StateDistribution lindley_initial_distribution(double lambda);

/// Time-dependent availability of a repairable Lindley component, closed
/// form. Selects the hyperbolic / trigonometric / critical branch from the
/// discriminant sign; mu = 0 reduces to the Lindley survival function.
double availability_closed(double lambda, double mu, double t);

/// Same quantity as 1 - P_F(t) from the transient CTMC solver; the closed
/// form's independent oracle.
double availability_numeric(double lambda, double mu, double t);

/// Long-run availability under the component's law. Returns 0 when mu = 0.
double steady_state_availability(const ComponentParams& p);

/// Classical exponential baseline mu/(lambda+mu) + lambda/(lambda+mu)*e^{-(lambda+mu)t}.
double availability_exponential_closed(double lambda, double mu, double t);

/// Non-repairable survival (1 + lambda + lambda*t)/(lambda+1) * e^{-lambda*t}.
double reliability_lindley(double lambda, double t);

/// Mean time to failure (lambda+2)/(lambda*(lambda+1)).
double mttf_lindley(double lambda);

/// Mean time to repair, 1/mu. mu = 0 is an error: a non-repairable
/// component has no repair time.
double mttr(double mu);

/// d(steady availability)/d(lambda); always negative.
double dA_dlambda(double lambda, double mu);

/// d(steady availability)/d(mu); always positive.
double dA_dmu(double lambda, double mu);

}  // namespace phavail
