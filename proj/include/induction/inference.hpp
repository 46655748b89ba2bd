#pragma once

#include <cstdint>
#include <variant>

#include "induction/special.hpp"

// Beta-Bernoulli conjugate updating with and without a point mass at theta = 1.

namespace induction {

struct BetaParams {
  double alpha = 1.0;
  double beta = 1.0;

  /// Throws ErrorKind::Domain unless both shapes are finite and > 0.
  static BetaParams make(double alpha, double beta);

  double mean() const noexcept { return alpha / (alpha + beta); }
  double variance() const noexcept;

  friend bool operator==(const BetaParams&, const BetaParams&) = default;
};

inline constexpr BetaParams kUniformBeta{1.0, 1.0};

/// Counts of a Bernoulli record: t successes in n trials.
struct EvidenceSummary {
  std::int64_t n = 0;
  std::int64_t t = 0;

  /// Throws ErrorKind::Domain unless 0 <= t <= n.
  static EvidenceSummary make(std::int64_t n, std::int64_t t);
  static EvidenceSummary all_successes(std::int64_t n) { return make(n, n); }

  std::int64_t failures() const noexcept { return n - t; }
  bool all_success() const noexcept { return t == n; }

  friend bool operator==(const EvidenceSummary&, const EvidenceSummary&) = default;
};

/// Prior with mass w on theta = 1 and mass 1 - w on a continuous Beta law.
class BoundaryMixture {
 public:
  /// Throws ErrorKind::CromwellViolation unless 0 < w < 1.
  BoundaryMixture(double w, BetaParams continuous = kUniformBeta);

  double w() const noexcept { return w_; }
  const BetaParams& continuous() const noexcept { return continuous_; }

 private:
  double w_;
  BetaParams continuous_;
};

struct PureBeta {
  BetaParams params;
  friend bool operator==(const PureBeta&, const PureBeta&) = default;
};

struct Mixture {
  double mass_at_one = 0.0;
  BetaParams continuous;
  friend bool operator==(const Mixture&, const Mixture&) = default;
};

using PosteriorState = std::variant<PureBeta, Mixture>;

BetaParams posterior(const BetaParams& prior, const EvidenceSummary& data);

/// Probability that the next trial succeeds: the posterior mean.
double predictive(const BetaParams& posterior);

/// log of the marginal probability of the observed sequence under a continuous
/// Beta prior: ln B(alpha + t, beta + n - t) - ln B(alpha, beta).
double log_marginal_likelihood(const BetaParams& prior, const EvidenceSummary& data);

/// Posterior of a boundary-mass prior. Any failure sets the mass at one to
/// exactly 0; otherwise the mass is w / (w + (1 - w) m) with m the continuous
/// component's marginal likelihood of n straight successes.
PosteriorState mixture_posterior(const BoundaryMixture& prior, const EvidenceSummary& data);

/// One-observation update of a posterior state; sequential application agrees
/// with mixture_posterior / posterior on the accumulated counts.
PosteriorState observe(const PosteriorState& state, bool success);

/// Equal-tailed credible interval at the given level. Throws ErrorKind::Domain
/// unless 0 < level < 1.
RealInterval credible_interval(const BetaParams& posterior, double level);

struct NormalApprox {
  double mu = 0.0;
  double sigma2 = 0.0;
};

/// Normal approximation to the all-success posterior Beta(n + 1, 1):
/// mu = (n+1)/(n+2), sigma2 = mu (1 - mu) / (n + 3). The values are untruncated;
/// the approximation is only meaningful restricted to [0, 1].
/// Throws ErrorKind::Domain if the data contain a failure.
NormalApprox normal_approx(const EvidenceSummary& data);

/// P(theta = 1 | data): exactly 0 for a continuous posterior.
double universal_law_probability(const PosteriorState& state) noexcept;

}  // namespace induction
