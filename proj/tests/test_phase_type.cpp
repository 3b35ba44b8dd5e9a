#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "phavail/phase_type.hpp"

using namespace phavail;

namespace {

PhaseTypeDistribution exponential_ph(double lambda) {
  Eigen::MatrixXd A(1, 1);
  A << -lambda;
  Eigen::RowVectorXd alpha(1);
  alpha << 1.0;
  return PhaseTypeDistribution::validate(alpha, A);
}

// Random PH of order <= 5 with strictly positive exit rates everywhere.
PhaseTypeDistribution random_ph(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int m = 1 + static_cast<int>(rng() % 5);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    double off = 0.0;
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      A(i, j) = u(rng);
      off += A(i, j);
    }
    A(i, i) = -(off + 0.05 + u(rng));  // exit rate in [0.05, 1.05]
  }
  Eigen::RowVectorXd alpha(m);
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    alpha[i] = 0.01 + u(rng);
    sum += alpha[i];
  }
  alpha /= sum;
  alpha[m - 1] = 1.0 - alpha.head(m - 1).sum();  // exact unit total
  return PhaseTypeDistribution::validate(alpha, A);
}

}  // namespace

TEST_CASE("phase-type validation") {
  Eigen::MatrixXd A(2, 2);
  A << -1.0, 1.0, 1.0, -1.0;  // no exit anywhere: singular
  Eigen::RowVectorXd alpha(2);
  alpha << 0.5, 0.5;
  CHECK_THROWS_AS(PhaseTypeDistribution::validate(alpha, A), SingularMatrix);

  Eigen::MatrixXd ok(2, 2);
  ok << -2.0, 1.0, 0.0, -1.0;
  Eigen::RowVectorXd bad_alpha(2);
  bad_alpha << 0.7, 0.7;
  CHECK_THROWS_AS(PhaseTypeDistribution::validate(bad_alpha, ok), Error);
  bad_alpha << -0.1, 1.1;
  CHECK_THROWS_AS(PhaseTypeDistribution::validate(bad_alpha, ok), Error);

  Eigen::MatrixXd pos_rowsum(1, 1);
  pos_rowsum << 0.5;
  Eigen::RowVectorXd one(1);
  one << 1.0;
  CHECK_THROWS_AS(PhaseTypeDistribution::validate(one, pos_rowsum), Error);
}

TEST_CASE("lindley_ph representation") {
  const PhaseTypeDistribution ph = lindley_ph(1.0);
  CHECK(ph.order() == 3);
  CHECK(ph.alpha()[0] == 0.5);
  CHECK(ph.alpha()[1] == 0.5);
  CHECK(ph.alpha()[2] == 0.0);
  CHECK(ph.A()(0, 0) == -1.0);
  CHECK(ph.A()(1, 2) == 1.0);
  CHECK(ph.A()(2, 2) == -1.0);
  CHECK(ph.A()(1, 0) == 0.0);

  const PhaseTypeDistribution small = lindley_ph(0.004);
  CHECK(small.alpha()[0] == doctest::Approx(0.004 / 1.004).epsilon(1e-15));
  CHECK(small.alpha()[1] == doctest::Approx(1.0 / 1.004).epsilon(1e-15));
  CHECK(small.alpha()[2] == 0.0);

  CHECK_THROWS_AS(lindley_ph(0.0), NonPositiveRate);
  CHECK_THROWS_AS(lindley_ph(-2.0), NonPositiveRate);
}

TEST_CASE("ph_survival basics and closed-form agreement") {
  CHECK(ph_survival(lindley_ph(0.7), 0.0) == 1.0);
  CHECK(ph_survival(exponential_ph(0.5), 2.0) ==
        doctest::Approx(0.36787944117144233).epsilon(1e-13));
  CHECK(ph_survival(lindley_ph(1.0), 1.0) ==
        doctest::Approx(0.55181916175716348).epsilon(1e-12));
  CHECK_THROWS_AS(ph_survival(lindley_ph(1.0), -0.5), NegativeTime);
}

TEST_CASE("lindley_survival_closed") {
  CHECK(lindley_survival_closed(3.0, 0.0) == 1.0);
  CHECK(lindley_survival_closed(1.0, 1.0) ==
        doctest::Approx(0.55181916175716348).epsilon(1e-14));
  CHECK(std::abs(lindley_survival_closed(0.004, 100.0) -
                 ph_survival(lindley_ph(0.004), 100.0)) <= 1e-12);
  CHECK_THROWS_AS(lindley_survival_closed(0.0, 1.0), NonPositiveRate);
  CHECK_THROWS_AS(lindley_survival_closed(1.0, -1.0), NegativeTime);
}

TEST_CASE("matrix-exponential route equals the closed Lindley survival") {
  for (double lambda : {0.01, 0.1, 1.0, 5.0}) {
    const PhaseTypeDistribution ph = lindley_ph(lambda);
    for (double t : {0.0, 0.5, 1.0, 5.0, 20.0 / lambda}) {
      CHECK(std::abs(ph_survival(ph, t) - lindley_survival_closed(lambda, t)) <=
            1e-10);
    }
  }
}

TEST_CASE("ph_survival is non-increasing on random PH") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> tdist(0.0, 30.0);
  for (int trial = 0; trial < 20; ++trial) {
    const PhaseTypeDistribution ph = random_ph(rng);
    double t1 = tdist(rng), t2 = tdist(rng);
    if (t2 < t1) std::swap(t1, t2);
    CHECK(ph_survival(ph, t1) >= ph_survival(ph, t2) - 1e-12);
  }
}

TEST_CASE("ph_mean closed values") {
  CHECK(ph_mean(exponential_ph(0.5)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ph_mean(lindley_ph(0.004)) ==
        doctest::Approx(499.00398406374502).epsilon(1e-12));
  CHECK(ph_mean(lindley_ph(1.0)) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("ph_mean equals quadrature of the survival function") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 8; ++trial) {
    const PhaseTypeDistribution ph = random_ph(rng);
    const double horizon = 200.0 / ph.A().diagonal().cwiseAbs().minCoeff();
    const double quad = oracles::integrate(
        [&](double t) { return ph_survival(ph, t); }, 0.0, horizon, 1e-10);
    const double mean = ph_mean(ph);
    CHECK(std::abs(mean - quad) / mean <= 1e-6);
  }
  // and the Lindley case specifically
  const PhaseTypeDistribution ph = lindley_ph(1.0);
  const double quad = oracles::integrate(
      [&](double t) { return ph_survival(ph, t); }, 0.0, 200.0, 1e-10);
  CHECK(std::abs(ph_mean(ph) - quad) / ph_mean(ph) <= 1e-8);
}

TEST_CASE("ph_sample statistics and determinism") {
  const int n = 100000;

  std::mt19937_64 rng(42);
  const PhaseTypeDistribution ph = lindley_ph(0.004);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += ph_sample(ph, rng);
  const double mean = sum / n;
  const double se = 353.55198762311424 / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(mean - 499.00398406374502) <= 3.0 * se);

  std::mt19937_64 rng2(7);
  const PhaseTypeDistribution e1 = exponential_ph(1.0);
  sum = 0.0;
  for (int i = 0; i < n; ++i) sum += ph_sample(e1, rng2);
  CHECK(std::abs(sum / n - 1.0) <= 3.0 / std::sqrt(static_cast<double>(n)));

  // same seed, same call sequence -> bit-identical draws
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 200; ++i) CHECK(ph_sample(ph, a) == ph_sample(ph, b));
}

TEST_CASE("empirical CDF of Lindley samples passes a KS test at 0.01") {
  const int n = 100000;
  std::mt19937_64 rng(20240615);
  const PhaseTypeDistribution ph = lindley_ph(1.0);
  std::vector<double> samples(n);
  for (auto& s : samples) s = ph_sample(ph, rng);
  const double d = oracles::ks_statistic(
      samples, [](double t) { return 1.0 - lindley_survival_closed(1.0, t); });
  CHECK(d <= oracles::ks_critical(0.01, n));
}
