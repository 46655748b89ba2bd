#include "induction/inference.hpp"

#include <cmath>
#include <string>

#include "induction/error.hpp"

namespace induction {

BetaParams BetaParams::make(double alpha, double beta) {
  if (!(std::isfinite(alpha) && alpha > 0.0) || !(std::isfinite(beta) && beta > 0.0)) {
    fail(ErrorKind::Domain, "BetaParams: shapes must be finite and > 0");
  }
  return BetaParams{alpha, beta};
}

double BetaParams::variance() const noexcept {
  const double s = alpha + beta;
  return alpha * beta / (s * s * (s + 1.0));
}

EvidenceSummary EvidenceSummary::make(std::int64_t n, std::int64_t t) {
  if (n < 0 || t < 0 || t > n) {
    fail(ErrorKind::Domain, "EvidenceSummary: need 0 <= t <= n (got n=" + std::to_string(n) +
                                ", t=" + std::to_string(t) + ")");
  }
  return EvidenceSummary{n, t};
}

BoundaryMixture::BoundaryMixture(double w, BetaParams continuous)
    : w_(w), continuous_(BetaParams::make(continuous.alpha, continuous.beta)) {
  if (!(w > 0.0 && w < 1.0)) {
    fail(ErrorKind::CromwellViolation,
         "BoundaryMixture: prior mass at theta = 1 must lie strictly inside (0, 1), got " + std::to_string(w));
  }
}

BetaParams posterior(const BetaParams& prior, const EvidenceSummary& data) {
  return BetaParams::make(prior.alpha + static_cast<double>(data.t),
                          prior.beta + static_cast<double>(data.failures()));
}

double predictive(const BetaParams& posterior) { return posterior.mean(); }

double log_marginal_likelihood(const BetaParams& prior, const EvidenceSummary& data) {
  const BetaParams post = posterior(prior, data);
  return log_beta(post.alpha, post.beta) - log_beta(prior.alpha, prior.beta);
}

PosteriorState mixture_posterior(const BoundaryMixture& prior, const EvidenceSummary& data) {
  const BetaParams cont = posterior(prior.continuous(), data);
  if (!data.all_success()) {
    // A single failure has likelihood exactly 0 under theta = 1.
    return Mixture{0.0, cont};
  }
  const double w = prior.w();
  double mass;
  if (prior.continuous().beta == 1.0) {
    // Marginal of n straight successes is alpha / (alpha + n); clearing the
    // denominator keeps w = 1/2, alpha = 1 at the correctly rounded (n+1)/(n+2).
    const double alpha = prior.continuous().alpha;
    const double law = w * (alpha + static_cast<double>(data.n));
    mass = law / (law + (1.0 - w) * alpha);
  } else {
    const double marginal = std::exp(log_marginal_likelihood(prior.continuous(), data));
    mass = w / (w + (1.0 - w) * marginal);
  }
  return Mixture{mass, cont};
}

PosteriorState observe(const PosteriorState& state, bool success) {
  auto bump = [success](BetaParams p) {
    if (success) {
      p.alpha += 1.0;
    } else {
      p.beta += 1.0;
    }
    return p;
  };
  if (const auto* pure = std::get_if<PureBeta>(&state)) return PureBeta{bump(pure->params)};
  const auto& mix = std::get<Mixture>(state);
  double mass = 0.0;
  if (success && mix.mass_at_one > 0.0) {
    const double m = mix.mass_at_one;
    mass = m / (m + (1.0 - m) * mix.continuous.mean());
  }
  return Mixture{mass, bump(mix.continuous)};
}

RealInterval credible_interval(const BetaParams& posterior, double level) {
  if (!(level > 0.0 && level < 1.0)) fail(ErrorKind::Domain, "credible_interval: level must lie in (0, 1)");
  const double tail = 0.5 * (1.0 - level);
  const double lo = inv_reg_inc_beta(tail, posterior.alpha, posterior.beta);
  const double hi = inv_reg_inc_beta(1.0 - tail, posterior.alpha, posterior.beta);
  return make_interval(lo, hi);
}

NormalApprox normal_approx(const EvidenceSummary& data) {
  if (!data.all_success()) fail(ErrorKind::Domain, "normal_approx: requires all-success data (t = n)");
  const double n = static_cast<double>(data.n);
  const double mu = (n + 1.0) / (n + 2.0);
  const double one_minus_mu = 1.0 / (n + 2.0);
  return NormalApprox{mu, mu * one_minus_mu / (n + 3.0)};
}

double universal_law_probability(const PosteriorState& state) noexcept {
  if (const auto* mix = std::get_if<Mixture>(&state)) return mix->mass_at_one;
  return 0.0;
}

}  // namespace induction
