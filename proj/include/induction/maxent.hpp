#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "induction/evidence.hpp"
#include "induction/plausibility.hpp"

// Maximum-entropy distributions on finite outcome sets, plus entropy and
// Kullback-Leibler accounting. Logarithms are natural throughout.

namespace induction {

/// Expectation constraint sum_i p_i f(x_i) = target.
struct MomentConstraint {
  std::vector<double> f_values;  // f(x_i), one per outcome
  double target = 0.0;
};

struct MaxEntProblem {
  std::vector<double> outcomes;
  std::vector<MomentConstraint> constraints;

  /// Throws ErrorKind::Domain if there are no outcomes or a constraint row has the wrong length.
  void validate() const;

  /// Convenience: a single mean constraint E[x] = mean on the outcome values.
  static MaxEntProblem with_mean(std::vector<double> outcomes, double mean);
};

struct MaxEntSolution {
  std::vector<double> lambdas;
  double log_z = 0.0;
  FiniteDistribution probs;
  double entropy = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
  std::vector<double> dual_trace;  // dual objective after each accepted step, starting at lambda = 0
};

/// Shannon entropy -sum p ln p with 0 ln 0 = 0.
double entropy(const FiniteDistribution& p);

/// sum p ln(p/q); Infinite when some p_i > 0 has q_i = 0. Throws
/// ErrorKind::Domain on a size mismatch. Returns exactly 0 iff p == q.
ExtendedNonneg kl_divergence(const FiniteDistribution& p, const FiniteDistribution& q);

/// -D_KL(posterior || prior); -inf when the posterior is not absolutely
/// continuous with respect to the prior.
double info_gain(const FiniteDistribution& prior, const FiniteDistribution& posterior);

/// Convex dual log Z(lambda) + sum_k lambda_k F_k, with p_i proportional to
/// exp(-sum_k lambda_k f_k(x_i)).
double maxent_dual(const MaxEntProblem& problem, const std::vector<double>& lambdas);

/// Gradient of maxent_dual: F_k - E_p[f_k].
std::vector<double> maxent_dual_gradient(const MaxEntProblem& problem, const std::vector<double>& lambdas);

/// Damped Newton minimization of the dual from lambda = 0.
///
/// Each step halves until the dual decreases; a 1e-10 ridge is added when the
/// covariance Hessian is numerically singular. Stops once
/// max_k |E_p[f_k] - F_k| <= tol. Throws ErrorKind::Infeasible when a target
/// lies on or outside the range of its f row and ErrorKind::NonConvergence
/// (with the best residual) after max_iter steps.
MaxEntSolution solve_maxent(const MaxEntProblem& problem, double tol = 1e-10, std::size_t max_iter = 100);

}  // namespace induction
