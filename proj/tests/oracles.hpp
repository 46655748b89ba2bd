#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// library's special functions, so agreement is an independent check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

// Composite trapezoid rule with `nodes` equally spaced points on [a, b].
inline double trapezoid(const std::function<double(double)>& f, double a, double b, std::int64_t nodes) {
  const double h = (b - a) / static_cast<double>(nodes - 1);
  double sum = 0.5 * (f(a) + f(b));
  for (std::int64_t i = 1; i < nodes - 1; ++i) sum += f(a + h * static_cast<double>(i));
  return sum * h;
}

// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, std::int64_t panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double sum = f(a) + f(b);
  for (std::int64_t i = 1; i < panels; ++i) sum += f(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Gauss-Legendre, 20 points per panel; exact for polynomials up to degree 39 per panel.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels) {
  static const double x[10] = {0.076526521133497338, 0.2277858511416451, 0.37370608871541955, 0.51086700195082713, 0.63605368072651502, 0.7463319064601508, 0.83911697182221878, 0.91223442825132584, 0.96397192727791381, 0.99312859918509488};
  static const double w[10] = {0.15275338713072578, 0.14917298647260366, 0.14209610931838187, 0.13168863844917653, 0.11819453196151825, 0.10193011981724026, 0.083276741576704671, 0.062672048334109443, 0.040601429800386217, 0.017614007139153273};
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + h * (p + 0.5);
    const double half = 0.5 * h;
    for (int k = 0; k < 10; ++k) sum += w[k] * (f(mid - half * x[k]) + f(mid + half * x[k]));
  }
  return sum * 0.5 * h;
}

// Beta(a, b) density from tgamma; fine for the moderate shapes the tests use.
inline double beta_pdf(double x, double a, double b) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double norm = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b));
  return norm * std::pow(x, a - 1.0) * std::pow(1.0 - x, b - 1.0);
}

inline double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline double binomial_pmf(int n, int t, double p) {
  double c = 1.0;
  for (int i = 1; i <= t; ++i) c = c * (n - t + i) / i;
  return c * std::pow(p, t) * std::pow(1.0 - p, n - t);
}

// Random probability vector of the given size (flat Dirichlet via exponentials).
inline std::vector<double> random_simplex(std::mt19937_64& gen, std::size_t size, double zero_prob = 0.0) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(size);
  for (auto& x : v) x = (u(gen) < zero_prob) ? 0.0 : expo(gen);
  if (std::accumulate(v.begin(), v.end(), 0.0) == 0.0) v[0] = 1.0;
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x /= total;
  return v;
}

// Brute-force dual minimization for a single mean constraint over outcome
// values: grid search over lambda in [lo, hi] at the given step.
struct GridResult {
  double lambda;
  std::vector<double> probs;
};

inline std::vector<double> gibbs_probs(const std::vector<double>& xs, double lambda) {
  std::vector<double> p(xs.size());
  double z = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) z += (p[i] = std::exp(-lambda * xs[i]));
  for (auto& v : p) v /= z;
  return p;
}

inline double mean_dual(const std::vector<double>& xs, double target, double lambda) {
  double z = 0.0;
  for (double x : xs) z += std::exp(-lambda * x);
  return std::log(z) + lambda * target;
}

inline GridResult grid_search_mean(const std::vector<double>& xs, double target, double lo, double hi, double step) {
  double best = lo;
  double best_val = mean_dual(xs, target, lo);
  const auto count = static_cast<std::int64_t>(std::llround((hi - lo) / step));
  for (std::int64_t i = 1; i <= count; ++i) {
    const double l = lo + step * static_cast<double>(i);
    const double v = mean_dual(xs, target, l);
    if (v < best_val) {
      best_val = v;
      best = l;
    }
  }
  return GridResult{best, gibbs_probs(xs, best)};
}

}  // namespace oracle
