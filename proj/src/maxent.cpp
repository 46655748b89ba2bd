#include "induction/maxent.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "induction/error.hpp"
#include "induction/format.hpp"

namespace induction {
namespace {

constexpr double kRidge = 1e-10;
constexpr int kMaxHalvings = 60;

// (1 + d) ln(1 + d) - d >= 0, accurate near d = 0 where the direct form cancels.
double kl_kernel(double d) {
  if (std::fabs(d) < 0.1) {
    double sum = 0.0;
    double power = d;  // d^(k-1)
    for (int k = 2; k < 64; ++k) {
      power *= d;
      const double term = ((k % 2 == 0) ? power : -power) / (static_cast<double>(k) * (k - 1));
      sum += term;
      if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
    }
    return sum;
  }
  return (1.0 + d) * std::log1p(d) - d;
}

struct Gibbs {
  std::vector<double> probs;
  double log_z = 0.0;
};

// p_i = exp(-sum_k lambda_k f_k(x_i)) / Z, evaluated with a max shift.
Gibbs gibbs(const MaxEntProblem& problem, const std::vector<double>& lambdas) {
  const std::size_t n = problem.outcomes.size();
  std::vector<double> score(n, 0.0);
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const auto& f = problem.constraints[k].f_values;
    for (std::size_t i = 0; i < n; ++i) score[i] -= lambdas[k] * f[i];
  }
  const double shift = *std::max_element(score.begin(), score.end());
  double z = 0.0;
  for (double s : score) z += std::exp(s - shift);
  Gibbs g;
  g.log_z = shift + std::log(z);
  g.probs.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.probs[i] = std::exp(score[i] - g.log_z);
  return g;
}

double expectation(const std::vector<double>& p, const std::vector<double>& f) {
  double e = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) e += p[i] * f[i];
  return e;
}

double dual_at(const MaxEntProblem& problem, const std::vector<double>& lambdas, const Gibbs& g) {
  double d = g.log_z;
  for (std::size_t k = 0; k < lambdas.size(); ++k) d += lambdas[k] * problem.constraints[k].target;
  return d;
}

double max_residual(const MaxEntProblem& problem, const Gibbs& g) {
  double r = 0.0;
  for (const auto& c : problem.constraints) r = std::max(r, std::fabs(expectation(g.probs, c.f_values) - c.target));
  return r;
}

void check_feasible(const MaxEntProblem& problem) {
  for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
    const auto& c = problem.constraints[k];
    const auto [lo, hi] = std::minmax_element(c.f_values.begin(), c.f_values.end());
    const bool constant_row = *lo == *hi;
    const bool ok = constant_row ? std::fabs(c.target - *lo) <= 1e-12 * std::max(1.0, std::fabs(*lo))
                                 : (*lo < c.target && c.target < *hi);
    if (!ok) {
      fail(ErrorKind::Infeasible, "maxent: target " + format_double(c.target) + " of constraint " +
                                      std::to_string(k) + " is not strictly inside [" + format_double(*lo) + ", " +
                                      format_double(*hi) + "]");
    }
  }
}

}  // namespace

void MaxEntProblem::validate() const {
  if (outcomes.empty()) fail(ErrorKind::Domain, "maxent: at least one outcome is required");
  for (double x : outcomes) {
    if (!std::isfinite(x)) fail(ErrorKind::Domain, "maxent: outcome values must be finite");
  }
  for (const auto& c : constraints) {
    if (c.f_values.size() != outcomes.size()) {
      fail(ErrorKind::Domain, "maxent: every f_values row needs one entry per outcome");
    }
    if (!std::isfinite(c.target)) fail(ErrorKind::Domain, "maxent: targets must be finite");
    for (double v : c.f_values) {
      if (!std::isfinite(v)) fail(ErrorKind::Domain, "maxent: f_values must be finite");
    }
  }
}

MaxEntProblem MaxEntProblem::with_mean(std::vector<double> outcomes, double mean) {
  MaxEntProblem p;
  p.constraints.push_back(MomentConstraint{outcomes, mean});
  p.outcomes = std::move(outcomes);
  return p;
}

double entropy(const FiniteDistribution& p) {
  double h = 0.0;
  for (double pi : p.probs()) {
    if (pi > 0.0) h -= pi * std::log(pi);
  }
  return std::max(h, 0.0);
}

ExtendedNonneg kl_divergence(const FiniteDistribution& p, const FiniteDistribution& q) {
  if (p.size() != q.size()) fail(ErrorKind::Domain, "kl_divergence: distributions differ in size");
  // sum_i q_i g((p_i - q_i) / q_i) equals sum_i p_i ln(p_i / q_i) for normalized
  // p and q, and every term is nonnegative.
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    const double qi = q[i];
    if (qi == 0.0) {
      if (pi > 0.0) return ExtendedNonneg::infinite();
      continue;
    }
    if (pi == 0.0) {
      d += qi;
      continue;
    }
    d += qi * std::max(0.0, kl_kernel((pi - qi) / qi));
  }
  return ExtendedNonneg::finite(d);
}

double info_gain(const FiniteDistribution& prior, const FiniteDistribution& posterior) {
  const ExtendedNonneg kl = kl_divergence(posterior, prior);
  if (kl.is_zero()) return 0.0;
  return -kl.to_double();
}

double maxent_dual(const MaxEntProblem& problem, const std::vector<double>& lambdas) {
  problem.validate();
  if (lambdas.size() != problem.constraints.size()) fail(ErrorKind::Domain, "maxent: one lambda per constraint");
  return dual_at(problem, lambdas, gibbs(problem, lambdas));
}

std::vector<double> maxent_dual_gradient(const MaxEntProblem& problem, const std::vector<double>& lambdas) {
  problem.validate();
  if (lambdas.size() != problem.constraints.size()) fail(ErrorKind::Domain, "maxent: one lambda per constraint");
  const Gibbs g = gibbs(problem, lambdas);
  std::vector<double> grad;
  grad.reserve(lambdas.size());
  for (const auto& c : problem.constraints) grad.push_back(c.target - expectation(g.probs, c.f_values));
  return grad;
}

MaxEntSolution solve_maxent(const MaxEntProblem& problem, double tol, std::size_t max_iter) {
  problem.validate();
  if (!(tol > 0.0)) fail(ErrorKind::Domain, "maxent: tolerance must be > 0");
  check_feasible(problem);

  const std::size_t m = problem.constraints.size();
  const std::size_t n = problem.outcomes.size();
  std::vector<double> lambdas(m, 0.0);
  Gibbs g = gibbs(problem, lambdas);
  double dual = dual_at(problem, lambdas, g);
  double residual = max_residual(problem, g);
  std::vector<double> trace{dual};
  std::size_t iter = 0;

  while (residual > tol) {
    if (iter == max_iter) {
      fail(ErrorKind::NonConvergence, "maxent: no convergence after " + std::to_string(max_iter) +
                                          " iterations (best residual " + format_double(residual) + ")");
    }
    ++iter;

    Eigen::VectorXd grad(m);
    Eigen::VectorXd mean(m);
    for (std::size_t k = 0; k < m; ++k) {
      mean[k] = expectation(g.probs, problem.constraints[k].f_values);
      grad[k] = problem.constraints[k].target - mean[k];
    }
    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t i = 0; i < n; ++i) {
      Eigen::VectorXd centered(m);
      for (std::size_t k = 0; k < m; ++k) centered[k] = problem.constraints[k].f_values[i] - mean[k];
      hess.noalias() += g.probs[i] * centered * centered.transpose();
    }

    Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
    const auto diag = ldlt.vectorD();
    const double scale = std::max(diag.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() || diag.minCoeff() <= 1e-14 * scale) {
      hess.diagonal().array() += kRidge;
      ldlt.compute(hess);
    }
    const Eigen::VectorXd step = -ldlt.solve(grad);

    // Backtrack until the dual decreases. Near the optimum the decrease drops
    // below the dual's rounding floor, so a step that leaves the dual unchanged
    // to working precision is taken when it shrinks the residual.
    bool accepted = false;
    double t = 1.0;
    for (int h = 0; h <= kMaxHalvings; ++h, t *= 0.5) {
      std::vector<double> trial(lambdas);
      for (std::size_t k = 0; k < m; ++k) trial[k] += t * step[k];
      Gibbs gt = gibbs(problem, trial);
      const double dt = dual_at(problem, trial, gt);
      if (!std::isfinite(dt)) continue;
      const double rt = max_residual(problem, gt);
      const bool decreased = dt < dual;
      const bool flat = dt <= dual + 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(dual) && rt < residual;
      if (decreased || flat) {
        lambdas = std::move(trial);
        g = std::move(gt);
        dual = dt;
        residual = rt;
        trace.push_back(dual);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      fail(ErrorKind::NonConvergence,
           "maxent: line search stalled (best residual " + format_double(residual) + ")");
    }
  }

  FiniteDistribution probs = FiniteDistribution::from_weights(g.probs);
  const double h = entropy(probs);
  return MaxEntSolution{std::move(lambdas), g.log_z, std::move(probs), h, iter, residual, std::move(trace)};
}

}  // namespace induction
