#include "induction/evidence.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "induction/error.hpp"
#include "induction/format.hpp"
#include "induction/splitmix.hpp"

namespace induction {
namespace {

void require_nonvacuous(const EvidenceSummary& data, const char* who) {
  if (data.n == 0) {
    fail(ErrorKind::VacuousEvidence, std::string(who) + ": undefined without observations (n = 0)");
  }
}

}  // namespace

ExtendedNonneg ExtendedNonneg::finite(double value) {
  if (!(std::isfinite(value) && value >= 0.0)) fail(ErrorKind::Domain, "ExtendedNonneg: value must be finite and >= 0");
  return ExtendedNonneg(false, value);
}

double ExtendedNonneg::value() const {
  if (infinite_) fail(ErrorKind::Domain, "ExtendedNonneg: value is infinite");
  return value_;
}

double ExtendedNonneg::to_double() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

double ExtendedNonneg::log10() const noexcept { return std::log10(to_double()); }

std::string to_string(const ExtendedNonneg& x) { return format_double(x.to_double()); }

ExtendedNonneg bayes_factor_law(const EvidenceSummary& data, const BetaParams& alternative) {
  if (!data.all_success()) return ExtendedNonneg::finite(0.0);
  const double n = static_cast<double>(data.n);
  if (alternative.beta == 1.0) {
    // 1 / marginal, with marginal = alpha / (alpha + n) in closed form.
    return ExtendedNonneg::finite((alternative.alpha + n) / alternative.alpha);
  }
  return ExtendedNonneg::finite(std::exp(-log_marginal_likelihood(alternative, data)));
}

ExtendedNonneg posterior_odds(double prior_odds, const ExtendedNonneg& bf) {
  if (!(prior_odds >= 0.0) || std::isnan(prior_odds)) fail(ErrorKind::Domain, "posterior_odds: prior odds must be >= 0");
  if (std::isinf(prior_odds) || bf.is_infinite()) {
    if (prior_odds == 0.0 || bf.is_zero()) {
      fail(ErrorKind::IndeterminateProduct, "posterior_odds: 0 * infinity is undefined");
    }
    return ExtendedNonneg::infinite();
  }
  const double product = prior_odds * bf.value();
  return std::isinf(product) ? ExtendedNonneg::infinite() : ExtendedNonneg::finite(product);
}

double accumulate_log_bf(std::span<const double> log10_steps) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : log10_steps) {
    if (!std::isfinite(x)) fail(ErrorKind::Domain, "accumulate_log_bf: steps must be finite");
    const double t = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double step_log10_bf(const BetaParams& alternative_before, bool success) {
  if (!success) return -std::numeric_limits<double>::infinity();
  // P(success | theta = 1) / P(success | alternative) = (alpha + beta) / alpha
  return std::log1p(alternative_before.beta / alternative_before.alpha) / std::numbers::ln10;
}

std::vector<double> sequential_log10_bf(std::int64_t n, const BetaParams& alternative) {
  if (n < 0) fail(ErrorKind::Domain, "sequential_log10_bf: n must be >= 0");
  std::vector<double> steps;
  steps.reserve(static_cast<std::size_t>(n));
  BetaParams alt = alternative;
  for (std::int64_t i = 0; i < n; ++i) {
    steps.push_back(step_log10_bf(alt, true));
    alt.alpha += 1.0;
  }
  return steps;
}

ConfidenceObject confidence_density(const EvidenceSummary& data) {
  require_nonvacuous(data, "confidence_density");
  if (data.all_success()) return PointMassAtOne{};
  return ContinuousBeta{BetaParams::make(static_cast<double>(data.t) + 1.0, static_cast<double>(data.failures()))};
}

int confidence_in_law(const EvidenceSummary& data) {
  require_nonvacuous(data, "confidence_in_law");
  return data.all_success() ? 1 : 0;
}

ExtendedNonneg elr(const EvidenceSummary& data) {
  require_nonvacuous(data, "elr");
  return data.all_success() ? ExtendedNonneg::infinite() : ExtendedNonneg::finite(0.0);
}

CoverageResult coverage_simulation(double theta0, std::int64_t n, double level, std::int64_t replicates,
                                   std::uint64_t seed) {
  if (!(theta0 > 0.0 && theta0 < 1.0)) fail(ErrorKind::Domain, "coverage: theta0 must lie in (0, 1)");
  if (n < 1) fail(ErrorKind::Domain, "coverage: n must be >= 1");
  if (!(level > 0.0 && level < 1.0)) fail(ErrorKind::Domain, "coverage: level must lie in (0, 1)");
  if (replicates < 1) fail(ErrorKind::Domain, "coverage: replicates must be >= 1");

  // Only n + 1 distinct intervals exist; build each on first use.
  std::vector<std::optional<bool>> covers(static_cast<std::size_t>(n) + 1);
  std::int64_t hits = 0;
  for (std::int64_t k = 0; k < replicates; ++k) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(k));
    std::int64_t t = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      if (rng.uniform() < theta0) ++t;
    }
    auto& slot = covers[static_cast<std::size_t>(t)];
    if (!slot) {
      const BetaParams post = posterior(kUniformBeta, EvidenceSummary{n, t});
      slot = credible_interval(post, level).contains(theta0);
    }
    if (*slot) ++hits;
  }
  const double reps = static_cast<double>(replicates);
  const double empirical = static_cast<double>(hits) / reps;
  return CoverageResult{level, empirical, std::sqrt(empirical * (1.0 - empirical) / reps)};
}

UtilityTable::UtilityTable(std::vector<std::vector<double>> utilities) : rows_(std::move(utilities)) {
  if (rows_.empty() || rows_.front().empty()) fail(ErrorKind::Domain, "UtilityTable: table must be nonempty");
  for (const auto& row : rows_) {
    if (row.size() != rows_.front().size()) fail(ErrorKind::Domain, "UtilityTable: table must be rectangular");
    for (double u : row) {
      if (!std::isfinite(u)) fail(ErrorKind::Domain, "UtilityTable: utilities must be finite");
    }
  }
}

Decision decide(const FiniteDistribution& posterior, const UtilityTable& utilities) {
  if (utilities.hypotheses() != posterior.size()) {
    fail(ErrorKind::Domain, "decide: utility columns do not match the number of hypotheses");
  }
  Decision d;
  d.expected_utilities.reserve(utilities.actions());
  for (std::size_t a = 0; a < utilities.actions(); ++a) {
    const auto row = utilities.row(a);
    double eu = 0.0;
    for (std::size_t h = 0; h < row.size(); ++h) eu += posterior[h] * row[h];
    d.expected_utilities.push_back(eu);
    if (eu > d.expected_utilities[d.action_index]) d.action_index = a;
  }
  return d;
}

}  // namespace induction
