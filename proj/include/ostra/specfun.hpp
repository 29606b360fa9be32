#pragma once

// Real-valued special functions used by the coefficient layer: Gamma,
// log-Gamma, Beta, and the Gauss hypergeometric function 2F1 restricted to
// z in [0, 1).  Everything is plain 64-bit floating point; the 2F1 power
// series uses compensated summation and an optional Euler transformation to
// keep the term count down near z -> 1.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "ostra/errors.hpp"

namespace ostra {
namespace detail {

// Lanczos approximation, g = 7, 9 terms.  Relative accuracy is a few ulp
// over the positive real axis, comfortably below 1e-13.
inline constexpr double lanczos_coeff[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

inline constexpr double sqrt_two_pi = 2.5066282746310005024157652848110;
inline constexpr double log_sqrt_two_pi = 0.91893853320467274178032973640562;

// Partial-fraction series A_g(x); valid for x >= 0.5.
inline double lanczos_series(double x) {
  double acc = lanczos_coeff[0];
  for (int i = 1; i < 9; ++i) acc += lanczos_coeff[i] / (x - 1.0 + i);
  return acc;
}

inline void check_positive_finite(double x, const char* who) {
  if (!std::isfinite(x) || !(x > 0.0))
    throw domain_error(std::string(who) + ": requires a finite positive argument, got " +
                       std::to_string(x));
}

}  // namespace detail

// Natural log of Gamma(x) for x > 0.
inline double log_gamma(double x) {
  detail::check_positive_finite(x, "log_gamma");
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double t = x + 6.5;
  return detail::log_sqrt_two_pi + (x - 0.5) * std::log(t) - t +
         std::log(detail::lanczos_series(x));
}

// Gamma(x) for x > 0.  Throws overflow_error once the result leaves the
// double range (x beyond roughly 171.6).
inline double gamma_fn(double x) {
  detail::check_positive_finite(x, "gamma_fn");
  if (x > 175.0) throw overflow_error("gamma_fn: result overflows double precision");
  if (x < 0.5) return gamma_fn(x + 1.0) / x;
  // Split t^(x-1/2) e^(-t) into two half-sized factors so each intermediate
  // stays inside the double range right up to the true overflow threshold.
  const double t = x + 6.5;
  const double half_pow = std::pow(t, 0.5 * (x - 0.5)) * std::exp(-0.5 * t);
  const double result = detail::sqrt_two_pi * detail::lanczos_series(x) * half_pow * half_pow;
  if (!std::isfinite(result)) throw overflow_error("gamma_fn: result overflows double precision");
  return result;
}

// Euler Beta function, evaluated through log-Gamma so large arguments do not
// overflow on the way through.
inline double beta_fn(double x, double y) {
  detail::check_positive_finite(x, "beta_fn");
  detail::check_positive_finite(y, "beta_fn");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

// Argument bundle for 2F1(a, b; c; z).
struct HypArgs {
  double a;
  double b;
  double c;
  double z;
};

inline void validate(const HypArgs& h) {
  if (!std::isfinite(h.a) || !std::isfinite(h.b) || !std::isfinite(h.c) || !std::isfinite(h.z))
    throw domain_error("hyp2f1: arguments must be finite");
  if (!(h.c > 0.0)) throw domain_error("hyp2f1: requires c > 0");
  if (!(h.z >= 0.0 && h.z < 1.0))
    throw domain_error("hyp2f1: requires 0 <= z < 1, got z = " + std::to_string(h.z));
}

namespace detail {

struct Hyp2f1Series {
  double value;
  long terms;
  bool converged;
};

// Direct Gauss series with a term recurrence and Kahan-compensated
// accumulation.  Stops once two consecutive terms drop below a quarter ulp
// of the running sum.
inline Hyp2f1Series hyp2f1_series(double a, double b, double c, double z,
                                  long max_terms = 1000000) {
  constexpr double quarter_eps = 0.25 * std::numeric_limits<double>::epsilon();
  double sum = 1.0;
  double comp = 0.0;
  double term = 1.0;
  int small_streak = 0;
  for (long k = 0; k < max_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (!std::isfinite(sum))
      throw overflow_error("hyp2f1: series overflowed double precision");
    if (term == 0.0) return {sum, k + 1, true};  // polynomial case terminated
    if (std::abs(term) <= quarter_eps * std::abs(sum)) {
      if (++small_streak >= 2) return {sum, k + 1, true};
    } else {
      small_streak = 0;
    }
  }
  return {sum, max_terms, false};
}

}  // namespace detail

// Gauss hypergeometric function on z in [0, 1).  When the raw series tail
// grows like (1-z)^(c-a-b) with c-a-b < a+b-c and z > 1/2, the Euler
// transformation 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z) converges
// faster; it is applied only when both transformed upper parameters stay
// positive, which keeps that series one-signed and free of cancellation.
inline double hyp2f1(const HypArgs& h, long max_terms = 1000000) {
  validate(h);
  if (h.z == 0.0) return 1.0;
  const double excess = h.c - h.a - h.b;
  const bool transform = h.z > 0.5 && excess < h.a + h.b - h.c &&
                         h.c - h.a > 0.0 && h.c - h.b > 0.0;
  if (transform) {
    const auto s = detail::hyp2f1_series(h.c - h.a, h.c - h.b, h.c, h.z, max_terms);
    if (!s.converged)
      throw convergence_error("hyp2f1: transformed series hit the term cap before converging");
    return std::pow(1.0 - h.z, excess) * s.value;
  }
  const auto s = detail::hyp2f1_series(h.a, h.b, h.c, h.z, max_terms);
  if (!s.converged)
    throw convergence_error("hyp2f1: series hit the term cap before converging");
  return s.value;
}

inline double hyp2f1(double a, double b, double c, double z, long max_terms = 1000000) {
  return hyp2f1(HypArgs{a, b, c, z}, max_terms);
}

}  // namespace ostra
