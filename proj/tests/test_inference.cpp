#include <cmath>
#include <random>

#include "doctest.h"
#include "induction/error.hpp"
#include "induction/inference.hpp"
#include "oracles.hpp"

using namespace induction;

namespace {

double mass_of(const PosteriorState& s) { return universal_law_probability(s); }

}  // namespace

TEST_CASE("EvidenceSummary and BetaParams validation") {
  CHECK_THROWS_AS(EvidenceSummary::make(3, 4), Error);
  CHECK_THROWS_AS(EvidenceSummary::make(-1, 0), Error);
  CHECK_THROWS_AS(BetaParams::make(0.0, 1.0), Error);
  CHECK_THROWS_AS(BetaParams::make(1.0, NAN), Error);
  CHECK(EvidenceSummary::make(5, 4).failures() == 1);
}

TEST_CASE("conjugate posterior examples") {
  CHECK(posterior(kUniformBeta, EvidenceSummary::make(5, 5)) == BetaParams{6, 1});
  CHECK(posterior(kUniformBeta, EvidenceSummary::make(0, 0)) == BetaParams{1, 1});
  CHECK(posterior(kUniformBeta, EvidenceSummary::make(10, 9)) == BetaParams{10, 2});
}

TEST_CASE("predictive is the posterior mean") {
  CHECK(predictive({1, 1}) == 0.5);
  CHECK(predictive({10001, 1}) == 10001.0 / 10002.0);
  CHECK(std::fabs(predictive({10001, 1}) - 0.99990002) <= 1e-8);
  CHECK(std::fabs(predictive({10, 2}) - 10.0 / 12.0) <= 1e-15);
}

TEST_CASE("property: rule of succession increases toward but never reaches 1") {
  double prev = 0.0;
  for (std::int64_t n = 0; n <= 5000; ++n) {
    const double p = predictive(posterior(kUniformBeta, EvidenceSummary::all_successes(n)));
    CHECK(p > prev);
    CHECK(p < 1.0);
    prev = p;
  }
}

TEST_CASE("mixture_posterior examples") {
  const BoundaryMixture half(0.5);
  const auto s98 = mixture_posterior(half, EvidenceSummary::make(98, 98));
  CHECK(mass_of(s98) == 99.0 / 100.0);

  const auto s0 = std::get<Mixture>(mixture_posterior(half, EvidenceSummary::make(0, 0)));
  CHECK(s0.mass_at_one == 0.5);
  CHECK(s0.continuous == BetaParams{1, 1});

  const auto s_fail = std::get<Mixture>(mixture_posterior(half, EvidenceSummary::make(10, 9)));
  CHECK(s_fail.mass_at_one == 0.0);
  CHECK(s_fail.continuous == BetaParams{10, 2});
}

TEST_CASE("mixture mass against a quadrature oracle of the marginal likelihood") {
  // mass = w / (w + (1 - w) * integral_0^1 theta^n dtheta)
  for (double w : {0.2, 0.5, 0.9}) {
    for (int n : {1, 4, 20, 100}) {
      const double marginal =
          oracle::gauss_legendre([n](double th) { return std::pow(th, n); }, 0.0, 1.0, 50);
      const double expected = w / (w + (1 - w) * marginal);
      const double got = mass_of(mixture_posterior(BoundaryMixture(w), EvidenceSummary::all_successes(n)));
      CAPTURE(w);
      CAPTURE(n);
      CHECK(std::fabs(got - expected) <= 1e-12);
    }
  }
  const double m4 = mass_of(mixture_posterior(BoundaryMixture(0.2), EvidenceSummary::all_successes(4)));
  CHECK(std::fabs(m4 - 0.2 * 5 / (0.2 * 5 + 0.8)) <= 1e-15);
  CHECK(std::fabs(m4 - 0.5555555555555556) <= 1e-12);
}

TEST_CASE("mixture with a non-uniform continuous component uses the Beta-function marginal") {
  // Continuous Beta(2, 3): marginal of n successes is B(2 + n, 3) / B(2, 3).
  const BoundaryMixture prior(0.3, BetaParams{2, 3});
  for (int n : {1, 5, 30}) {
    const double marginal = oracle::gauss_legendre(
        [n](double th) { return std::pow(th, n) * oracle::beta_pdf(th, 2, 3); }, 0.0, 1.0, 50);
    const double expected = 0.3 / (0.3 + 0.7 * marginal);
    CHECK(std::fabs(mass_of(mixture_posterior(prior, EvidenceSummary::all_successes(n))) - expected) <= 1e-12);
  }
}

TEST_CASE("property: Jeffreys mass increases in n and w, stays below 1") {
  for (double w : {0.01, 0.2, 0.5, 0.8, 0.99}) {
    double prev = 0.0;
    for (std::int64_t n = 0; n <= 2000; ++n) {
      const double m = mass_of(mixture_posterior(BoundaryMixture(w), EvidenceSummary::all_successes(n)));
      CHECK(m > prev);
      CHECK(m < 1.0);
      prev = m;
    }
  }
  for (std::int64_t n : {0, 3, 50}) {
    double prev = 0.0;
    for (double w = 0.05; w < 1.0; w += 0.05) {
      const double m = mass_of(mixture_posterior(BoundaryMixture(w), EvidenceSummary::all_successes(n)));
      CHECK(m > prev);
      prev = m;
    }
  }
}

TEST_CASE("Cromwell guard on the boundary-mass prior") {
  for (double w : {0.0, 1.0, -0.2, 1.5}) {
    try {
      BoundaryMixture bad(w);
      FAIL("accepted w = " << w);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CromwellViolation);
    }
  }
}

TEST_CASE("property: one failure sends the law to exactly zero") {
  for (std::int64_t n = 1; n <= 300; ++n) {
    for (double w : {0.1, 0.5, 0.999}) {
      CHECK(mass_of(mixture_posterior(BoundaryMixture(w), EvidenceSummary::make(n, n - 1))) == 0.0);
    }
  }
}

TEST_CASE("property: sequential updating equals batch updating") {
  std::mt19937_64 gen(31);
  std::bernoulli_distribution coin(0.8);
  for (int trial = 0; trial < 100; ++trial) {
    PosteriorState pure = PureBeta{BetaParams{1, 1}};
    PosteriorState mix = Mixture{0.5, BetaParams{1, 1}};
    std::int64_t n = 0;
    std::int64_t t = 0;
    for (int step = 0; step < 60; ++step) {
      const bool s = coin(gen);
      ++n;
      t += s;
      pure = observe(pure, s);
      mix = observe(mix, s);
      const EvidenceSummary data{n, t};
      CHECK(std::get<PureBeta>(pure).params == posterior(kUniformBeta, data));
      const auto batch = std::get<Mixture>(mixture_posterior(BoundaryMixture(0.5), data));
      CHECK(std::get<Mixture>(mix).continuous == batch.continuous);
      CHECK(std::fabs(std::get<Mixture>(mix).mass_at_one - batch.mass_at_one) <= 1e-12);
    }
  }
}

TEST_CASE("credible_interval examples") {
  const auto u = credible_interval({1, 1}, 0.95);
  CHECK(std::fabs(u.lo - 0.025) <= 1e-12);
  CHECK(std::fabs(u.hi - 0.975) <= 1e-12);

  const auto ten = credible_interval({10, 1}, 0.95);
  CHECK(std::fabs(ten.lo - std::pow(0.025, 0.1)) <= 1e-10);
  CHECK(std::fabs(ten.hi - std::pow(0.975, 0.1)) <= 1e-10);
  CHECK(std::fabs(ten.hi - 0.9974714214555382) <= 1e-10);

  const auto sym = credible_interval({3, 3}, 0.5);
  CHECK(std::fabs((sym.lo + sym.hi) - 1.0) <= 1e-12);

  CHECK_THROWS_AS(credible_interval({2, 2}, 0.0), Error);
  CHECK_THROWS_AS(credible_interval({2, 2}, 1.0), Error);
}

TEST_CASE("property: credible intervals bracket the posterior mean") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> shape(1.0, 200.0);
  std::uniform_real_distribution<double> lvl(0.5, 0.999);
  for (int i = 0; i < 300; ++i) {
    const BetaParams p{shape(gen), shape(gen)};
    const auto ci = credible_interval(p, lvl(gen));
    CHECK(ci.lo <= p.mean());
    CHECK(p.mean() <= ci.hi);
  }
}

TEST_CASE("normal approximation of the all-success posterior") {
  const auto a0 = normal_approx(EvidenceSummary::all_successes(0));
  CHECK(a0.mu == 0.5);
  CHECK(std::fabs(a0.sigma2 - 1.0 / 12.0) <= 1e-15);

  const auto a8 = normal_approx(EvidenceSummary::all_successes(8));
  CHECK(std::fabs(a8.mu - 0.9) <= 1e-15);
  CHECK(std::fabs(a8.sigma2 - 0.9 * 0.1 / 11) <= 1e-15);

  const auto big = normal_approx(EvidenceSummary::all_successes(10000));
  const BetaParams exact{10001, 1};
  CHECK(std::fabs(big.mu - 0.99990002) <= 1e-8);
  CHECK(std::fabs(big.sigma2 - exact.variance()) <= 1e-22);
  CHECK(std::fabs(big.sigma2 - 9.995e-9) <= 2e-12);

  CHECK_THROWS_AS(normal_approx(EvidenceSummary::make(5, 4)), Error);
}

TEST_CASE("universal law probability") {
  CHECK(universal_law_probability(PureBeta{{10001, 1}}) == 0.0);
  CHECK(universal_law_probability(Mixture{0.99, {99, 1}}) == 0.99);
  CHECK(universal_law_probability(Mixture{0.0, {10, 2}}) == 0.0);
}
