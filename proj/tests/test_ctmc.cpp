#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "phavail/ctmc.hpp"
#include "phavail/lindley.hpp"

using namespace phavail;

namespace {
GeneratorMatrix two_state(double lambda, double mu) {
  Eigen::MatrixXd Q(2, 2);
  Q << -lambda, lambda, mu, -mu;
  return GeneratorMatrix::validate(Q);
}
}  // namespace

TEST_CASE("validate_generator accepts birth-death and degenerate forms") {
  CHECK(two_state(0.004, 0.03).order() == 2);
  Eigen::MatrixXd one(1, 1);
  one << 0.0;
  CHECK(GeneratorMatrix::validate(one).order() == 1);
}

TEST_CASE("validate_generator rejects malformed matrices without repairing") {
  Eigen::MatrixXd bad_rowsum(2, 2);
  bad_rowsum << -1.0, 2.0, 1.0, -1.0;
  CHECK_THROWS_AS(GeneratorMatrix::validate(bad_rowsum), RowSumNonzero);
  try {
    GeneratorMatrix::validate(bad_rowsum);
  } catch (const RowSumNonzero& e) {
    CHECK(e.row == 0);
    CHECK(e.residual == doctest::Approx(1.0));
  }

  Eigen::MatrixXd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(GeneratorMatrix::validate(rect), NonSquare);

  Eigen::MatrixXd neg(2, 2);
  neg << -1.0, 1.0, -0.5, 0.5;
  CHECK_THROWS_AS(GeneratorMatrix::validate(neg), NegativeOffDiagonal);

  Eigen::MatrixXd posdiag(2, 2);
  posdiag << 1.0, -1.0, 0.0, 0.0;
  CHECK_THROWS_AS(GeneratorMatrix::validate(posdiag), Error);
}

TEST_CASE("transient_distribution degenerate cases") {
  const GeneratorMatrix Q = two_state(0.5, 0.25);
  const StateDistribution p0 = StateDistribution::point_mass(2, 0);

  const StateDistribution at0 = transient_distribution(Q, p0, 0.0);
  CHECK(at0[0] == 1.0);
  CHECK(at0[1] == 0.0);

  Eigen::MatrixXd one(1, 1);
  one << 0.0;
  const GeneratorMatrix Q1 = GeneratorMatrix::validate(one);
  CHECK(transient_distribution(Q1, StateDistribution::point_mass(1, 0), 123.0)[0] == 1.0);

  CHECK_THROWS_AS(transient_distribution(Q, StateDistribution::point_mass(3, 0), 1.0),
                  DimensionMismatch);
  CHECK_THROWS_AS(transient_distribution(Q, p0, -1.0), NegativeTime);
}

TEST_CASE("transient_distribution matches an independent Taylor expm oracle") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Eigen::MatrixXd Qm = oracles::random_generator(n, rng, 2.0);
    const GeneratorMatrix Q = GeneratorMatrix::validate(Qm);
    const StateDistribution p0 = StateDistribution::point_mass(n, 0);
    for (double t : {0.1, 1.0, 7.5}) {
      const Eigen::RowVectorXd expect =
          Eigen::RowVectorXd(p0.probs() * oracles::expm_taylor(Qm * t));
      const StateDistribution got = transient_distribution(Q, p0, t);
      CHECK((got.probs() - expect).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("transient output is a distribution for random chains") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> tdist(0.0, 100.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const GeneratorMatrix Q =
        GeneratorMatrix::validate(oracles::random_generator(n, rng, 1.5));
    const StateDistribution p0 = StateDistribution::point_mass(n, static_cast<int>(rng() % n));
    const StateDistribution pt = transient_distribution(Q, p0, tdist(rng));
    CHECK(std::abs(pt.probs().sum() - 1.0) <= 1e-10);
    CHECK(pt.probs().minCoeff() >= 0.0);
    CHECK(pt.probs().maxCoeff() <= 1.0);
  }
}

TEST_CASE("semigroup property of the transient solver") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> tdist(0.0, 100.0);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const GeneratorMatrix Q =
        GeneratorMatrix::validate(oracles::random_generator(n, rng, 0.5));
    const StateDistribution p0 = StateDistribution::point_mass(n, 0);
    const double s = tdist(rng), t = tdist(rng);
    const StateDistribution two_step =
        transient_distribution(Q, transient_distribution(Q, p0, s), t);
    const StateDistribution one_step = transient_distribution(Q, p0, s + t);
    CHECK((two_step.probs() - one_step.probs()).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("stationary_distribution on textbook chains") {
  const StateDistribution pi = stationary_distribution(two_state(0.004, 0.03));
  CHECK(pi[0] == doctest::Approx(0.88235294117647059).epsilon(1e-13));
  CHECK(pi[1] == doctest::Approx(0.11764705882352941).epsilon(1e-13));

  Eigen::MatrixXd one(1, 1);
  one << 0.0;
  CHECK(stationary_distribution(GeneratorMatrix::validate(one))[0] == 1.0);
}

TEST_CASE("stationary_distribution of the 4-state repairable chain") {
  const ComponentParams p{0.004, 0.03, DistributionLaw::Lindley};
  const StateDistribution pi =
      stationary_distribution(build_single_component_generator(p));
  // P(F) = 1 - steady-state availability.
  CHECK(pi[3] == doctest::Approx(0.062616939004615193).epsilon(1e-10));
  CHECK((pi.probs() * build_single_component_generator(p).rates())
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
}

TEST_CASE("stationary_distribution rejects reducible chains") {
  Eigen::MatrixXd Q(4, 4);
  Q.setZero();
  Q(0, 0) = -1.0; Q(0, 1) = 1.0; Q(1, 0) = 2.0; Q(1, 1) = -2.0;
  Q(2, 2) = -0.5; Q(2, 3) = 0.5; Q(3, 2) = 0.5; Q(3, 3) = -0.5;
  CHECK_THROWS_AS(stationary_distribution(GeneratorMatrix::validate(Q)),
                  SingularSystem);
}

TEST_CASE("stationary distribution is the long-time transient limit") {
  const ComponentParams p{0.004, 0.03, DistributionLaw::Lindley};
  const GeneratorMatrix Q = build_single_component_generator(p);
  const StateDistribution pi = stationary_distribution(Q);
  const double horizon = 50.0 / 0.004;  // 50 / smallest nonzero |diagonal|
  const StateDistribution pt =
      transient_distribution(Q, lindley_initial_distribution(0.004), horizon);
  CHECK((pt.probs() - pi.probs()).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("expm_action basics") {
  Eigen::MatrixXd A(1, 1);
  A << -0.5;
  Eigen::RowVectorXd v(1);
  v << 1.0;
  CHECK(expm_action(A, v, 0.0)[0] == 1.0);
  CHECK(expm_action(A, v, 2.0)[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));

  CHECK_THROWS_AS(expm_action(A, Eigen::RowVectorXd::Ones(2), 1.0), DimensionMismatch);
  CHECK_THROWS_AS(expm_action(A, v, -0.1), NegativeTime);
}

TEST_CASE("expm_action on the order-3 transient matrix reproduces the mixture survival") {
  // alpha * exp(A) * ones = 1.5/e at unit rate and time.
  Eigen::MatrixXd A(3, 3);
  A << -1, 0, 0, 0, -1, 1, 0, 0, -1;
  Eigen::RowVectorXd alpha(3);
  alpha << 0.5, 0.5, 0.0;
  const Eigen::RowVectorXd w = expm_action(A, alpha, 1.0);
  CHECK(w.sum() == doctest::Approx(0.55181916175716348).epsilon(1e-12));
  CHECK(w.minCoeff() >= 0.0);
  CHECK(w.maxCoeff() <= 1.0);
}

TEST_CASE("expm_action with a full generator equals transient_distribution") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Eigen::MatrixXd Qm = oracles::random_generator(n, rng, 1.0);
    const GeneratorMatrix Q = GeneratorMatrix::validate(Qm);
    const StateDistribution p0 = StateDistribution::point_mass(n, 0);
    for (double t : {0.5, 3.0, 20.0}) {
      const Eigen::RowVectorXd via_action = expm_action(Qm, p0.probs(), t);
      const StateDistribution via_transient = transient_distribution(Q, p0, t);
      CHECK((via_action - via_transient.probs()).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}
