#include "induction/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "induction/error.hpp"

namespace induction {
namespace {

constexpr double kTiny = 1e-300;
constexpr double kCfEps = 1e-16;
constexpr int kCfMaxIter = 100000;
constexpr int kQuantileMaxIter = 200;
constexpr double kQuantileTol = 1e-10;

void require_shapes(double a, double b, const char* who) {
  if (!(std::isfinite(a) && a > 0.0) || !(std::isfinite(b) && b > 0.0)) {
    fail(ErrorKind::Domain, std::string(who) + ": shape parameters must be finite and > 0");
  }
}

void require_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorKind::Domain, std::string(who) + ": argument must lie in [0, 1]");
  }
}

// Continued fraction for I_x(a, b) (modified Lentz); converges fast for x < a/(a+b).
double beta_continued_fraction(double x, double a, double b) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kCfMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kCfEps) return h;
  }
  fail(ErrorKind::ConvergenceFailure, "reg_inc_beta: continued fraction did not converge");
}

// I_x(a, b) for 0 < x < 1 evaluated directly by the continued fraction.
double inc_beta_lower(double x, double a, double b) {
  const double log_front = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  return std::exp(log_front) * beta_continued_fraction(x, a, b) / a;
}

}  // namespace

RealInterval make_interval(double lo, double hi, bool probability) {
  if (!(lo <= hi)) fail(ErrorKind::Domain, "interval: lo must not exceed hi");
  if (probability && !(lo >= 0.0 && hi <= 1.0)) {
    fail(ErrorKind::Domain, "interval: probability bounds must lie in [0, 1]");
  }
  return RealInterval{lo, hi};
}

double log_gamma(double x) {
  if (!(std::isfinite(x) && x > 0.0)) {
    fail(ErrorKind::Domain, "log_gamma: argument must be finite and > 0");
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);  // reentrant; std::lgamma writes the global signgam
#else
  return std::lgamma(x);
#endif
}

double log_beta(double a, double b) {
  require_shapes(a, b, "log_beta");
  if (a == 1.0) return -std::log(b);
  if (b == 1.0) return -std::log(a);
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double log_beta_pdf(double x, double a, double b) {
  require_shapes(a, b, "log_beta_pdf");
  require_probability(x, "log_beta_pdf");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double log_kernel = 0.0;
  if (a != 1.0) {
    if (x == 0.0) return a > 1.0 ? -kInf : kInf;
    log_kernel += (a - 1.0) * std::log(x);
  }
  if (b != 1.0) {
    if (x == 1.0) return b > 1.0 ? -kInf : kInf;
    log_kernel += (b - 1.0) * std::log1p(-x);
  }
  return log_kernel - log_beta(a, b);
}

double reg_inc_beta(double x, double a, double b) {
  require_shapes(a, b, "reg_inc_beta");
  require_probability(x, "reg_inc_beta");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  double result;
  if (x > a / (a + b)) {
    result = 1.0 - inc_beta_lower(1.0 - x, b, a);
  } else {
    result = inc_beta_lower(x, a, b);
  }
  return std::clamp(result, 0.0, 1.0);
}

double inv_reg_inc_beta(double q, double a, double b) {
  require_shapes(a, b, "inv_reg_inc_beta");
  require_probability(q, "inv_reg_inc_beta");
  if (q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;

  double lo = 0.0;
  double hi = 1.0;
  double x = std::clamp(a / (a + b), 1e-12, 1.0 - 1e-12);
  double best_x = x;
  double best_err = std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < kQuantileMaxIter; ++iter) {
    const double f = reg_inc_beta(x, a, b) - q;
    if (std::fabs(f) < best_err) {
      best_err = std::fabs(f);
      best_x = x;
    }
    if (f == 0.0) break;
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(hi, 1e-300)) break;

    const double step = f / std::exp(log_beta_pdf(x, a, b));
    double next = x - step;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= std::numeric_limits<double>::epsilon() * x && best_err <= kQuantileTol) break;
    x = next;
  }

  if (!(best_err <= kQuantileTol)) {
    fail(ErrorKind::ConvergenceFailure,
         "inv_reg_inc_beta: tolerance not reached (q=" + std::to_string(q) + ", a=" + std::to_string(a) +
             ", b=" + std::to_string(b) + ")");
  }
  return best_x;
}

}  // namespace induction
