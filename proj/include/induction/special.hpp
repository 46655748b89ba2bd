#pragma once

// Special functions behind every Beta-distribution computation. All routines
// are pure and thread-safe.

namespace induction {

struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  double width() const noexcept { return hi - lo; }
};

// Throws ErrorKind::Domain unless lo <= hi (and, when `probability`, both lie in [0,1]).
RealInterval make_interval(double lo, double hi, bool probability = true);

/// ln Gamma(x) for finite x > 0.
double log_gamma(double x);

/// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b), exact when either
/// shape equals 1.
double log_beta(double a, double b);

/// Log density of Beta(a, b) at x in [0, 1]; -inf where the density vanishes.
double log_beta_pdf(double x, double a, double b);

/// Regularized incomplete beta function I_x(a, b), i.e. the Beta(a, b) CDF.
///
/// Evaluated with the modified Lentz continued fraction, switching to
/// 1 - I_{1-x}(b, a) when x > a / (a + b). I_0 = 0 and I_1 = 1 exactly.
double reg_inc_beta(double x, double a, double b);

/// Quantile of Beta(a, b): the x with I_x(a, b) = q.
///
/// Bracketed bisection refined by Newton steps, capped at 200 iterations.
/// q = 0 and q = 1 map to 0 and 1 exactly. Throws
/// ErrorKind::ConvergenceFailure if |I_x(a, b) - q| > 1e-10 at the cap.
double inv_reg_inc_beta(double q, double a, double b);

}  // namespace induction
