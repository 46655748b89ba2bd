#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

// Probability algebra over finitely many propositions.

namespace induction {

inline constexpr double kNormalizationTol = 1e-12;

/// Probability vector over labelled propositions. Entries lie in [0, 1] and are
/// renormalized exactly on construction.
class FiniteDistribution {
 public:
  /// Throws ErrorKind::Domain if an entry is outside [0, 1] or the total is
  /// off by more than kNormalizationTol. Empty labels become "H0", "H1", ...
  explicit FiniteDistribution(std::vector<double> probs, std::vector<std::string> labels = {});

  /// Normalizes arbitrary nonnegative weights. Throws ErrorKind::Domain on a
  /// negative or non-finite weight and ErrorKind::TotalEvidenceZero if all vanish.
  static FiniteDistribution from_weights(std::span<const double> weights, std::vector<std::string> labels = {});

  static FiniteDistribution uniform(std::size_t size);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  FiniteDistribution() = default;

  std::vector<double> probs_;
  std::vector<std::string> labels_;
};

/// Joint table P(A_i B_j | C) over row propositions A_i and column propositions B_j.
class FiniteJoint {
 public:
  /// Throws ErrorKind::Domain on a ragged or empty table, a negative entry, or
  /// a grand total off by more than kNormalizationTol.
  explicit FiniteJoint(std::vector<std::vector<double>> table, std::vector<std::string> row_labels = {},
                       std::vector<std::string> col_labels = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }

  FiniteDistribution row_marginal() const;
  FiniteDistribution col_marginal() const;
  FiniteJoint transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// P(row | column j). Throws ErrorKind::ZeroProbabilityCondition when column j has no mass.
FiniteDistribution condition(const FiniteJoint& joint, std::size_t column);
FiniteDistribution condition(const FiniteJoint& joint, const std::string& column_label);

/// P(column | row i), i.e. conditioning on a row event.
FiniteDistribution condition_on_row(const FiniteJoint& joint, std::size_t row);

/// Posterior proportional to prior * likelihood, accumulated in log domain.
///
/// A hypothesis with prior 0 stays at 0 for every likelihood vector. Throws
/// ErrorKind::Domain on a length mismatch or negative likelihood and
/// ErrorKind::TotalEvidenceZero when every product vanishes.
FiniteDistribution bayes_update(const FiniteDistribution& prior, std::span<const double> likelihoods);

/// Same as bayes_update with log-likelihoods (-inf allowed for impossible evidence).
FiniteDistribution bayes_update_log(const FiniteDistribution& prior, std::span<const double> log_likelihoods);

struct RuleResiduals {
  double product_residual = 0.0;
  double sum_residual = 0.0;
  double bayes_residual = 0.0;

  double max() const noexcept;
};

/// Largest violation of the product rule, the sum rule and Bayes's identity
/// over every cell of the joint whose conditionals are defined.
RuleResiduals rule_residuals(const FiniteJoint& joint);

}  // namespace induction
