#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "induction/inference.hpp"
#include "induction/plausibility.hpp"

// Bayes factors, confidence-based acceptance, coverage checks and decisions.

namespace induction {

/// A value in [0, +inf] with an explicit infinite state.
class ExtendedNonneg {
 public:
  /// Throws ErrorKind::Domain unless value is finite and >= 0.
  static ExtendedNonneg finite(double value);
  static ExtendedNonneg infinite() noexcept { return ExtendedNonneg(true, 0.0); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const noexcept { return !infinite_ && value_ == 0.0; }
  /// Finite value; throws ErrorKind::Domain when infinite.
  double value() const;
  /// As a double (+inf when infinite).
  double to_double() const noexcept;
  /// log10 of the value: -inf for 0, +inf for Infinite.
  double log10() const noexcept;

  friend bool operator==(const ExtendedNonneg&, const ExtendedNonneg&) = default;

 private:
  ExtendedNonneg(bool infinite, double value) noexcept : infinite_(infinite), value_(value) {}

  bool infinite_;
  double value_;
};

/// Renders "inf" for the infinite state, shortest round-trip decimal otherwise.
std::string to_string(const ExtendedNonneg& x);

struct PointMassAtOne {
  friend bool operator==(const PointMassAtOne&, const PointMassAtOne&) = default;
};
struct ContinuousBeta {
  BetaParams params;
  friend bool operator==(const ContinuousBeta&, const ContinuousBeta&) = default;
};
using ConfidenceObject = std::variant<PointMassAtOne, ContinuousBeta>;

/// Bayes factor of the law theta = 1 against a continuous Beta alternative:
/// n + 1 for all-success data under the uniform alternative, exactly 0 after
/// any failure.
ExtendedNonneg bayes_factor_law(const EvidenceSummary& data, const BetaParams& alternative = kUniformBeta);

/// prior_odds * bf. Throws ErrorKind::IndeterminateProduct for 0 * Infinite and
/// ErrorKind::Domain for negative prior odds.
ExtendedNonneg posterior_odds(double prior_odds, const ExtendedNonneg& bf);

/// Sum of per-step log10 Bayes factors (compensated). Throws ErrorKind::Domain
/// on non-finite entries.
double accumulate_log_bf(std::span<const double> log10_steps);

/// log10 Bayes factor contributed by a single observation, given the
/// continuous alternative's posterior before the observation. A failure gives -inf.
double step_log10_bf(const BetaParams& alternative_before, bool success);

/// Per-observation log10 Bayes factors for n straight successes under the
/// given alternative; step i (1-based) under the uniform alternative is log10((i+1)/i).
std::vector<double> sequential_log10_bf(std::int64_t n, const BetaParams& alternative = kUniformBeta);

/// Confidence density of theta: a point mass at 1 for all-success data,
/// otherwise Beta(t + 1, n - t). Throws ErrorKind::VacuousEvidence for n = 0.
ConfidenceObject confidence_density(const EvidenceSummary& data);

/// Confidence assigned to the law: 1 iff t = n. Throws ErrorKind::VacuousEvidence for n = 0.
int confidence_in_law(const EvidenceSummary& data);

/// Extended likelihood ratio: Infinite iff t = n, otherwise 0.
/// Throws ErrorKind::VacuousEvidence for n = 0.
ExtendedNonneg elr(const EvidenceSummary& data);

struct CoverageResult {
  double nominal = 0.0;
  double empirical = 0.0;
  double mc_stderr = 0.0;
};

/// Monte Carlo coverage of the equal-tailed Beta(t + 1, n - t + 1) interval at
/// theta0. Replicate k draws T ~ Bin(n, theta0) as n Bernoulli trials from
/// SplitMix64(seed + k); the result is a pure function of the arguments.
CoverageResult coverage_simulation(double theta0, std::int64_t n, double level, std::int64_t replicates,
                                   std::uint64_t seed);

/// U(a, H): one row per action, one column per hypothesis.
class UtilityTable {
 public:
  /// Throws ErrorKind::Domain on an empty, ragged or non-finite table.
  explicit UtilityTable(std::vector<std::vector<double>> utilities);

  std::size_t actions() const noexcept { return rows_.size(); }
  std::size_t hypotheses() const noexcept { return rows_.front().size(); }
  std::span<const double> row(std::size_t action) const { return rows_[action]; }

 private:
  std::vector<std::vector<double>> rows_;
};

struct Decision {
  std::size_t action_index = 0;
  std::vector<double> expected_utilities;
};

/// Maximizes sum_H P(H) U(a, H); ties go to the lowest action index.
/// Throws ErrorKind::Domain if the hypothesis counts differ.
Decision decide(const FiniteDistribution& posterior, const UtilityTable& utilities);

}  // namespace induction
