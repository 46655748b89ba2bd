#include "induction/plausibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string_view>

#include "induction/error.hpp"

namespace induction {
namespace {

std::vector<std::string> default_labels(std::string_view prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return labels;
}

std::vector<std::string> checked_labels(std::vector<std::string> labels, std::string_view prefix, std::size_t n) {
  if (labels.empty()) return default_labels(prefix, n);
  if (labels.size() != n) fail(ErrorKind::Domain, "label count does not match the number of entries");
  return labels;
}

// Compensated summation; totals feed 1e-12 normalization checks.
double neumaier_sum(std::span<const double> xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<double> probs, std::vector<std::string> labels) {
  if (probs.empty()) fail(ErrorKind::Domain, "distribution: needs at least one proposition");
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::Domain, "distribution: probabilities must lie in [0, 1]");
  }
  const double total = neumaier_sum(probs);
  if (std::fabs(total - 1.0) > kNormalizationTol) {
    fail(ErrorKind::Domain, "distribution: probabilities must sum to 1");
  }
  for (double& p : probs) p /= total;
  labels_ = checked_labels(std::move(labels), "H", probs.size());
  probs_ = std::move(probs);
}

FiniteDistribution FiniteDistribution::from_weights(std::span<const double> weights, std::vector<std::string> labels) {
  if (weights.empty()) fail(ErrorKind::Domain, "distribution: needs at least one proposition");
  for (double w : weights) {
    if (!(std::isfinite(w) && w >= 0.0)) fail(ErrorKind::Domain, "distribution: weights must be finite and >= 0");
  }
  const double total = neumaier_sum(weights);
  if (!(total > 0.0)) fail(ErrorKind::TotalEvidenceZero, "distribution: all weights are zero");
  FiniteDistribution d;
  d.probs_.reserve(weights.size());
  for (double w : weights) d.probs_.push_back(w / total);
  d.labels_ = checked_labels(std::move(labels), "H", weights.size());
  return d;
}

FiniteDistribution FiniteDistribution::uniform(std::size_t size) {
  if (size == 0) fail(ErrorKind::Domain, "distribution: needs at least one proposition");
  const std::vector<double> ones(size, 1.0);
  return from_weights(ones);
}

FiniteJoint::FiniteJoint(std::vector<std::vector<double>> table, std::vector<std::string> row_labels,
                         std::vector<std::string> col_labels) {
  if (table.empty() || table.front().empty()) fail(ErrorKind::Domain, "joint: table must be nonempty");
  rows_ = table.size();
  cols_ = table.front().size();
  cells_.reserve(rows_ * cols_);
  for (const auto& row : table) {
    if (row.size() != cols_) fail(ErrorKind::Domain, "joint: table must be rectangular");
    for (double v : row) {
      if (!(std::isfinite(v) && v >= 0.0)) fail(ErrorKind::Domain, "joint: entries must be finite and >= 0");
      cells_.push_back(v);
    }
  }
  const double total = neumaier_sum(cells_);
  if (std::fabs(total - 1.0) > kNormalizationTol) fail(ErrorKind::Domain, "joint: entries must sum to 1");
  for (double& v : cells_) v /= total;
  row_labels_ = checked_labels(std::move(row_labels), "A", rows_);
  col_labels_ = checked_labels(std::move(col_labels), "B", cols_);
}

FiniteDistribution FiniteJoint::row_marginal() const {
  std::vector<double> m(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    m[i] = neumaier_sum(std::span<const double>(cells_).subspan(i * cols_, cols_));
  }
  return FiniteDistribution::from_weights(m, row_labels_);
}

FiniteDistribution FiniteJoint::col_marginal() const { return transposed().row_marginal(); }

FiniteJoint FiniteJoint::transposed() const {
  std::vector<std::vector<double>> t(cols_, std::vector<double>(rows_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t[j][i] = (*this)(i, j);
  }
  return FiniteJoint(std::move(t), col_labels_, row_labels_);
}

FiniteDistribution condition(const FiniteJoint& joint, std::size_t column) {
  if (column >= joint.cols()) fail(ErrorKind::Domain, "condition: column index out of range");
  std::vector<double> slice(joint.rows());
  for (std::size_t i = 0; i < joint.rows(); ++i) slice[i] = joint(i, column);
  if (!(neumaier_sum(slice) > 0.0)) {
    fail(ErrorKind::ZeroProbabilityCondition, "condition: conditioning event '" + joint.col_labels()[column] +
                                                  "' has probability 0");
  }
  return FiniteDistribution::from_weights(slice, joint.row_labels());
}

FiniteDistribution condition(const FiniteJoint& joint, const std::string& column_label) {
  const auto& labels = joint.col_labels();
  const auto it = std::find(labels.begin(), labels.end(), column_label);
  if (it == labels.end()) fail(ErrorKind::Domain, "condition: unknown column '" + column_label + "'");
  return condition(joint, static_cast<std::size_t>(it - labels.begin()));
}

FiniteDistribution condition_on_row(const FiniteJoint& joint, std::size_t row) {
  return condition(joint.transposed(), row);
}

FiniteDistribution bayes_update(const FiniteDistribution& prior, std::span<const double> likelihoods) {
  std::vector<double> logs(likelihoods.size());
  for (std::size_t i = 0; i < likelihoods.size(); ++i) {
    const double l = likelihoods[i];
    if (!(std::isfinite(l) && l >= 0.0)) fail(ErrorKind::Domain, "bayes_update: likelihoods must be finite and >= 0");
    logs[i] = std::log(l);
  }
  return bayes_update_log(prior, logs);
}

FiniteDistribution bayes_update_log(const FiniteDistribution& prior, std::span<const double> log_likelihoods) {
  if (log_likelihoods.size() != prior.size()) {
    fail(ErrorKind::Domain, "bayes_update: likelihood count does not match the prior");
  }
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  // Weights prior_i * exp(ll_i - max ll): the best-supported live hypothesis
  // keeps its full prior weight, so the total cannot underflow to zero.
  double max_ll = kNegInf;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    const double ll = log_likelihoods[i];
    if (std::isnan(ll) || ll == std::numeric_limits<double>::infinity()) {
      fail(ErrorKind::Domain, "bayes_update: log-likelihoods must be finite or -inf");
    }
    if (prior[i] > 0.0) max_ll = std::max(max_ll, ll);
  }
  if (max_ll == kNegInf) {
    fail(ErrorKind::TotalEvidenceZero, "bayes_update: evidence is impossible under every hypothesis");
  }
  std::vector<double> weights(prior.size(), 0.0);
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (prior[i] > 0.0 && log_likelihoods[i] != kNegInf) weights[i] = prior[i] * std::exp(log_likelihoods[i] - max_ll);
  }
  return FiniteDistribution::from_weights(weights, prior.labels());
}

double RuleResiduals::max() const noexcept { return std::max({product_residual, sum_residual, bayes_residual}); }

RuleResiduals rule_residuals(const FiniteJoint& joint) {
  const std::size_t rows = joint.rows();
  const std::size_t cols = joint.cols();
  const FiniteDistribution p_row = joint.row_marginal();
  const FiniteDistribution p_col = joint.col_marginal();

  std::vector<std::vector<double>> row_given_col(cols);  // P(A_i | B_j)
  std::vector<std::vector<double>> col_given_row(rows);  // P(B_j | A_i)
  for (std::size_t j = 0; j < cols; ++j) {
    if (p_col[j] > 0.0) {
      const auto d = condition(joint, j);
      row_given_col[j].assign(d.probs().begin(), d.probs().end());
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (p_row[i] > 0.0) {
      const auto d = condition_on_row(joint, i);
      col_given_row[i].assign(d.probs().begin(), d.probs().end());
    }
  }

  RuleResiduals r;
  auto bump = [](double& slot, double v) { slot = std::max(slot, std::fabs(v)); };

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double ab = joint(i, j);
      const bool row_ok = p_row[i] > 0.0;
      const bool col_ok = p_col[j] > 0.0;

      // P(AB|C) = P(A|C) P(B|AC) = P(B|C) P(A|BC)
      if (row_ok) bump(r.product_residual, ab - p_row[i] * col_given_row[i][j]);
      if (col_ok) bump(r.product_residual, ab - p_col[j] * row_given_col[j][i]);

      // P(A+B|C) = P(A|C) + P(B|C) - P(AB|C), with the union summed cell by cell.
      double outside = 0.0;
      for (std::size_t k = 0; k < rows; ++k) {
        if (k == i) continue;
        for (std::size_t l = 0; l < cols; ++l) {
          if (l != j) outside += joint(k, l);
        }
      }
      bump(r.sum_residual, (1.0 - outside) - (p_row[i] + p_col[j] - ab));

      if (row_ok && col_ok) {
        bump(r.bayes_residual, row_given_col[j][i] - col_given_row[i][j] * p_row[i] / p_col[j]);
      }
    }

    // P(A|C) + P(not A|C) = 1
    double not_a = 0.0;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == i) continue;
      for (std::size_t l = 0; l < cols; ++l) not_a += joint(k, l);
    }
    bump(r.sum_residual, p_row[i] + not_a - 1.0);
  }

  // Conditional sum rule over disjoint row events: sum_i P(A_i | B_j) = 1.
  for (std::size_t j = 0; j < cols; ++j) {
    if (row_given_col[j].empty()) continue;
    double total = 0.0;
    for (double v : row_given_col[j]) total += v;
    bump(r.sum_residual, total - 1.0);
  }
  return r;
}

}  // namespace induction
