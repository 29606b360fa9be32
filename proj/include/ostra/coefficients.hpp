#pragma once

// The lambda coefficient family: weighted moments of the map
// t -> 1 / (t*theta + (1-t)*x)^(2*vartheta) over t in [0, 1], in closed
// hypergeometric form, plus direct-quadrature oracles for cross-checking.
//
//   moment_ts     = Int_0^1 t^(rho+s)          / (t*theta + (1-t)*x)^(2*vartheta) dt
//   moment_t_1mt  = Int_0^1 t^rho (1-t)^s      / (t*theta + (1-t)*x)^(2*vartheta) dt
//
// Closed forms follow from the Euler integral representation of 2F1 with
// argument z = 1 - theta/x (left orientation, theta <= x) or z = 1 - x/theta
// (right orientation, x <= theta); theta == x degenerates to z = 0 where the
// hypergeometric factor is exactly 1.

#include <cmath>
#include <string>

#include "ostra/errors.hpp"
#include "ostra/quadrature.hpp"
#include "ostra/specfun.hpp"

namespace ostra {

// Argument bundle for the lambda family.  theta is the endpoint the moment
// weights toward (an interval endpoint a or b), x the evaluation point.
struct LambdaInputs {
  double theta;
  double x;
  double s;
  double vartheta;
  double rho;
};

namespace detail {

inline void check_lambda_args(double theta, double x, double s, double vartheta,
                              double rho, const char* who) {
  if (!std::isfinite(theta) || !std::isfinite(x) || !std::isfinite(s) ||
      !std::isfinite(vartheta) || !std::isfinite(rho))
    throw domain_error(std::string(who) + ": arguments must be finite");
  if (!(theta > 0.0)) throw domain_error(std::string(who) + ": requires theta > 0");
  if (!(x > 0.0)) throw domain_error(std::string(who) + ": requires x > 0");
  if (!(s >= 0.0)) throw domain_error(std::string(who) + ": requires s >= 0");
  if (!(vartheta > 0.0)) throw domain_error(std::string(who) + ": requires vartheta > 0");
  if (!(rho >= 0.0)) throw domain_error(std::string(who) + ": requires rho >= 0");
}

}  // namespace detail

// The randomized-test bundles constrain s to the harmonic s-convexity range.
inline void validate_left(const LambdaInputs& in) {
  detail::check_lambda_args(in.theta, in.x, in.s, in.vartheta, in.rho, "LambdaInputs");
  if (!(in.s > 0.0 && in.s <= 1.0))
    throw domain_error("LambdaInputs: requires s in (0, 1]");
  if (!(in.theta <= in.x))
    throw domain_error("LambdaInputs: left orientation requires theta <= x");
}

inline void validate_right(const LambdaInputs& in) {
  detail::check_lambda_args(in.theta, in.x, in.s, in.vartheta, in.rho, "LambdaInputs");
  if (!(in.s > 0.0 && in.s <= 1.0))
    throw domain_error("LambdaInputs: requires s in (0, 1]");
  if (!(in.x <= in.theta))
    throw domain_error("LambdaInputs: right orientation requires x <= theta");
}

// Quadrature oracle for the t^(rho+s) moment.  Works in either orientation.
inline double moment_ts(double theta, double x, double s, double vartheta, double rho,
                        double rel_tol = 1e-10, double abs_tol = 1e-12) {
  detail::check_lambda_args(theta, x, s, vartheta, rho, "moment_ts");
  const double power = 2.0 * vartheta;
  const double exponent = rho + s;
  auto f = [=](double t) {
    return std::pow(t, exponent) / std::pow(t * theta + (1.0 - t) * x, power);
  };
  return integrate(f, 0.0, 1.0, rel_tol, abs_tol).value;
}

// Quadrature oracle for the t^rho (1-t)^s moment.
inline double moment_t_1mt(double theta, double x, double s, double vartheta, double rho,
                           double rel_tol = 1e-10, double abs_tol = 1e-12) {
  detail::check_lambda_args(theta, x, s, vartheta, rho, "moment_t_1mt");
  const double power = 2.0 * vartheta;
  auto f = [=](double t) {
    return std::pow(t, rho) * std::pow(1.0 - t, s) /
           std::pow(t * theta + (1.0 - t) * x, power);
  };
  return integrate(f, 0.0, 1.0, rel_tol, abs_tol).value;
}

// lambda1(a, x, s, vartheta, rho)
//   = Int_0^1 t^(rho+s) / (t*a + (1-t)*x)^(2*vartheta) dt
//   = B(rho+s+1, 1) x^(-2*vartheta) 2F1(2*vartheta, rho+s+1; rho+s+2; 1 - a/x).
inline double lambda1(double a, double x, double s, double vartheta, double rho) {
  detail::check_lambda_args(a, x, s, vartheta, rho, "lambda1");
  if (!(a <= x)) throw domain_error("lambda1: requires a <= x");
  const double z = 1.0 - a / x;
  return beta_fn(rho + s + 1.0, 1.0) / std::pow(x, 2.0 * vartheta) *
         hyp2f1(2.0 * vartheta, rho + s + 1.0, rho + s + 2.0, z);
}

// lambda2(a, x, s, vartheta, rho)
//   = Int_0^1 t^rho (1-t)^s / (t*a + (1-t)*x)^(2*vartheta) dt
//   = B(rho+1, s+1) x^(-2*vartheta) 2F1(2*vartheta, rho+1; rho+s+2; 1 - a/x).
inline double lambda2(double a, double x, double s, double vartheta, double rho) {
  detail::check_lambda_args(a, x, s, vartheta, rho, "lambda2");
  if (!(a <= x)) throw domain_error("lambda2: requires a <= x");
  const double z = 1.0 - a / x;
  return beta_fn(rho + 1.0, s + 1.0) / std::pow(x, 2.0 * vartheta) *
         hyp2f1(2.0 * vartheta, rho + 1.0, rho + s + 2.0, z);
}

// lambda3(b, x, s, vartheta, rho)
//   = Int_0^1 t^(rho+s) / (t*b + (1-t)*x)^(2*vartheta) dt
//   = B(1, rho+s+1) b^(-2*vartheta) 2F1(2*vartheta, 1; rho+s+2; 1 - x/b).
inline double lambda3(double b, double x, double s, double vartheta, double rho) {
  detail::check_lambda_args(b, x, s, vartheta, rho, "lambda3");
  if (!(x <= b)) throw domain_error("lambda3: requires x <= b");
  const double z = 1.0 - x / b;
  return beta_fn(1.0, rho + s + 1.0) / std::pow(b, 2.0 * vartheta) *
         hyp2f1(2.0 * vartheta, 1.0, rho + s + 2.0, z);
}

// lambda4(b, x, s, vartheta, rho)
//   = Int_0^1 t^rho (1-t)^s / (t*b + (1-t)*x)^(2*vartheta) dt
//   = B(s+1, rho+1) b^(-2*vartheta) 2F1(2*vartheta, s+1; rho+s+2; 1 - x/b).
inline double lambda4(double b, double x, double s, double vartheta, double rho) {
  detail::check_lambda_args(b, x, s, vartheta, rho, "lambda4");
  if (!(x <= b)) throw domain_error("lambda4: requires x <= b");
  const double z = 1.0 - x / b;
  return beta_fn(s + 1.0, rho + 1.0) / std::pow(b, 2.0 * vartheta) *
         hyp2f1(2.0 * vartheta, s + 1.0, rho + s + 2.0, z);
}

// lambda5(a, x, alpha)
//   = (alpha+1) Int_0^1 t^alpha / (t*a + (1-t)*x)^2 dt
//   = x^(-2) 2F1(2, alpha+1; alpha+2; 1 - a/x).
inline double lambda5(double a, double x, double alpha) {
  if (!std::isfinite(a) || !std::isfinite(x) || !std::isfinite(alpha))
    throw domain_error("lambda5: arguments must be finite");
  if (!(a > 0.0 && x > 0.0)) throw domain_error("lambda5: requires a > 0 and x > 0");
  if (!(a <= x)) throw domain_error("lambda5: requires a <= x");
  if (!(alpha > 0.0)) throw domain_error("lambda5: requires alpha > 0");
  const double z = 1.0 - a / x;
  return hyp2f1(2.0, alpha + 1.0, alpha + 2.0, z) / (x * x);
}

// lambda6(b, x, alpha)
//   = (alpha+1) Int_0^1 t^alpha / (t*b + (1-t)*x)^2 dt
//   = b^(-2) 2F1(2, 1; alpha+2; 1 - x/b).
inline double lambda6(double b, double x, double alpha) {
  if (!std::isfinite(b) || !std::isfinite(x) || !std::isfinite(alpha))
    throw domain_error("lambda6: arguments must be finite");
  if (!(b > 0.0 && x > 0.0)) throw domain_error("lambda6: requires b > 0 and x > 0");
  if (!(x <= b)) throw domain_error("lambda6: requires x <= b");
  if (!(alpha > 0.0)) throw domain_error("lambda6: requires alpha > 0");
  const double z = 1.0 - x / b;
  return hyp2f1(2.0, 1.0, alpha + 2.0, z) / (b * b);
}

// Elementary closed form of Int_0^1 t / (t*theta + (1-t)*x)^2 dt, valid for
// any positive theta != x (either orientation).  At alpha = 1 the weighted
// moments above collapse onto this:
//   lambda5(a, x, 1) = 2 * lambda5_log(a, x),
//   lambda6(b, x, 1) = 2 * lambda5_log(b, x).
inline double lambda5_log(double theta, double x) {
  if (!std::isfinite(theta) || !std::isfinite(x))
    throw domain_error("lambda5_log: arguments must be finite");
  if (!(theta > 0.0 && x > 0.0))
    throw domain_error("lambda5_log: requires positive arguments");
  const double r = (x - theta) / theta;
  if (std::abs(r) < 1e-4) {
    // The closed form below cancels badly as x -> theta; switch to the series
    // [r - log(1+r)] / (theta*r)^2 = (1/theta^2) (1/2 - r/3 + r^2/4 - ...).
    return (1.0 / (theta * theta)) *
           (0.5 + r * (-1.0 / 3.0 + r * (0.25 + r * (-0.2 + r / 6.0))));
  }
  const double diff = x - theta;
  return (1.0 / theta - (std::log(x) - std::log(theta)) / diff) / diff;
}

}  // namespace ostra
