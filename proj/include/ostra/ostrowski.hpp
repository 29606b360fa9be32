#pragma once

// Ostrowski-type deviation functional for fractional integrals of
// compositions with g(u) = 1/u, the matching kernel-form identity, five
// closed-form upper bounds valid when |f'|^q is harmonically s-convex, their
// uniform-derivative corollaries, and a fractional Hermite-Hadamard check.
//
// Throughout, 0 < a <= x <= b, alpha > 0, s in (0, 1], q >= 1, and h denotes
// the composition h(u) = f(1/u) integrated over subintervals of [1/b, 1/a].

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ostra/coefficients.hpp"
#include "ostra/errors.hpp"
#include "ostra/quadrature.hpp"
#include "ostra/specfun.hpp"

namespace ostra {

// Evaluation interval [a, b] in (0, inf) together with the point x in [a, b].
struct Interval {
  double a;
  double b;
  double x;
  Interval(double a_, double b_, double x_) : a(a_), b(b_), x(x_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x))
      throw domain_error("Interval: endpoints must be finite");
    if (!(0.0 < a)) throw domain_error("Interval: requires 0 < a");
    if (!(a < b)) throw domain_error("Interval: requires a < b (degenerate interval)");
    if (!(a <= x && x <= b)) throw domain_error("Interval: requires a <= x <= b");
  }
};

// Shape parameters: fractional order alpha, convexity index s, power-mean
// exponent q.  p is the Holder conjugate q/(q-1), defined only when q > 1
// (NaN at q == 1; use has_conjugate() before touching it).
struct Params {
  double alpha;
  double s;
  double q;
  double p;
  Params(double alpha_, double s_, double q_) : alpha(alpha_), s(s_), q(q_) {
    if (!std::isfinite(alpha) || !std::isfinite(s) || !std::isfinite(q))
      throw domain_error("Params: arguments must be finite");
    if (!(alpha > 0.0)) throw domain_error("Params: requires alpha > 0");
    if (!(s > 0.0 && s <= 1.0)) throw domain_error("Params: requires s in (0, 1]");
    if (!(q >= 1.0)) throw domain_error("Params: requires q >= 1");
    p = q > 1.0 ? q / (q - 1.0) : std::numeric_limits<double>::quiet_NaN();
  }
  bool has_conjugate() const { return q > 1.0; }
};

// |f'| sampled at the three distinguished points.
struct DerivMagnitudes {
  double at_a;
  double at_b;
  double at_x;
};

namespace detail {

inline void check_derivs(const DerivMagnitudes& d, const char* who) {
  if (!std::isfinite(d.at_a) || !std::isfinite(d.at_b) || !std::isfinite(d.at_x))
    throw domain_error(std::string(who) + ": derivative magnitudes must be finite");
  if (!(d.at_a >= 0.0 && d.at_b >= 0.0 && d.at_x >= 0.0))
    throw domain_error(std::string(who) + ": derivative magnitudes must be nonnegative");
}

// The two side prefactors (x-a)^(alpha+1) / (a*x)^(alpha-1) and its mirror.
inline double a_side_prefactor(const Interval& iv, double alpha) {
  return std::pow(iv.x - iv.a, alpha + 1.0) / std::pow(iv.a * iv.x, alpha - 1.0);
}
inline double b_side_prefactor(const Interval& iv, double alpha) {
  return std::pow(iv.b - iv.x, alpha + 1.0) / std::pow(iv.b * iv.x, alpha - 1.0);
}

}  // namespace detail

// The deviation functional
//
//   s_f = [((x-a)/(a x))^alpha + ((b-x)/(b x))^alpha] f(x)
//         - Gamma(alpha+1) [ J^alpha_{(1/x)-} h (1/b) + J^alpha_{(1/x)+} h (1/a) ],
//
// evaluated through the fractional operators (one independent numeric path).
// A side whose window collapses (x == a or x == b) contributes exactly zero.
template <class F>
double s_f(F&& f, const Interval& iv, double alpha, double rel_tol = 1e-11,
           double abs_tol = 1e-13) {
  const FractionalOrder order(alpha);
  const double a = iv.a, b = iv.b, x = iv.x;
  auto h = [&f](double u) { return f(1.0 / u); };
  double frac = 0.0;
  if (x < b) frac += rl_right(h, 1.0 / x, order, 1.0 / b, rel_tol, abs_tol);
  if (x > a) frac += rl_left(h, 1.0 / x, order, 1.0 / a, rel_tol, abs_tol);
  const double weight =
      std::pow((x - a) / (a * x), alpha) + std::pow((b - x) / (b * x), alpha);
  return weight * f(x) - gamma_fn(alpha + 1.0) * frac;
}

// The same quantity through the kernel identity
//
//   s_f = (x-a)^(alpha+1)/(a x)^(alpha-1) Int_0^1 t^alpha/(t a+(1-t)x)^2 f'(a x/(t a+(1-t)x)) dt
//       - (b-x)^(alpha+1)/(b x)^(alpha-1) Int_0^1 t^alpha/(t b+(1-t)x)^2 f'(b x/(t b+(1-t)x)) dt,
//
// which only sees f' (the second, independent numeric path).
template <class FPrime>
double s_f_rhs(FPrime&& fprime, const Interval& iv, double alpha,
               double rel_tol = 1e-11, double abs_tol = 1e-13) {
  const FractionalOrder order(alpha);
  (void)order;
  const double a = iv.a, b = iv.b, x = iv.x;
  double total = 0.0;
  if (x > a) {
    auto kern = [&](double t) {
      const double den = t * a + (1.0 - t) * x;
      return std::pow(t, alpha) / (den * den) * fprime(a * x / den);
    };
    total += detail::a_side_prefactor(iv, alpha) *
             integrate(kern, 0.0, 1.0, rel_tol, abs_tol).value;
  }
  if (x < b) {
    auto kern = [&](double t) {
      const double den = t * b + (1.0 - t) * x;
      return std::pow(t, alpha) / (den * den) * fprime(b * x / den);
    };
    total -= detail::b_side_prefactor(iv, alpha) *
             integrate(kern, 0.0, 1.0, rel_tol, abs_tol).value;
  }
  return total;
}

// Relative disagreement between the two paths, scaled by max(1, |s_f|).
template <class F, class FPrime>
double identity_residual(F&& f, FPrime&& fprime, const Interval& iv, double alpha,
                         double rel_tol = 1e-11, double abs_tol = 1e-13) {
  const double lhs = s_f(f, iv, alpha, rel_tol, abs_tol);
  const double rhs = s_f_rhs(fprime, iv, alpha, rel_tol, abs_tol);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

// ---------------------------------------------------------------------------
// The five upper bounds on |s_f|.  Each takes the derivative magnitudes
// directly, so callers can probe hypothetical derivative data without a
// function object.  Sides with a vanished prefactor are skipped outright
// (their lambda coefficients are never evaluated).
// ---------------------------------------------------------------------------

// Power-mean bound with the full weight t^(alpha q) inside the lambdas.
inline double bound_thm22(const DerivMagnitudes& d, const Interval& iv, const Params& pr) {
  detail::check_derivs(d, "bound_thm22");
  const double q = pr.q, s = pr.s, alpha = pr.alpha;
  const double dxq = std::pow(d.at_x, q);
  double total = 0.0;
  if (iv.x > iv.a)
    total += detail::a_side_prefactor(iv, alpha) *
             std::pow(lambda1(iv.a, iv.x, s, q, alpha * q) * dxq +
                          lambda2(iv.a, iv.x, s, q, alpha * q) * std::pow(d.at_a, q),
                      1.0 / q);
  if (iv.x < iv.b)
    total += detail::b_side_prefactor(iv, alpha) *
             std::pow(lambda3(iv.b, iv.x, s, q, alpha * q) * dxq +
                          lambda4(iv.b, iv.x, s, q, alpha * q) * std::pow(d.at_b, q),
                      1.0 / q);
  return total;
}

// Power-mean bound splitting off (1/(alpha+1))^(1-1/q).
inline double bound_thm23(const DerivMagnitudes& d, const Interval& iv, const Params& pr) {
  detail::check_derivs(d, "bound_thm23");
  const double q = pr.q, s = pr.s, alpha = pr.alpha;
  const double dxq = std::pow(d.at_x, q);
  double total = 0.0;
  if (iv.x > iv.a)
    total += detail::a_side_prefactor(iv, alpha) *
             std::pow(lambda1(iv.a, iv.x, s, q, alpha) * dxq +
                          lambda2(iv.a, iv.x, s, q, alpha) * std::pow(d.at_a, q),
                      1.0 / q);
  if (iv.x < iv.b)
    total += detail::b_side_prefactor(iv, alpha) *
             std::pow(lambda3(iv.b, iv.x, s, q, alpha) * dxq +
                          lambda4(iv.b, iv.x, s, q, alpha) * std::pow(d.at_b, q),
                      1.0 / q);
  return std::pow(1.0 / (alpha + 1.0), 1.0 - 1.0 / q) * total;
}

// Power-mean bound keeping the side weights lambda5/lambda6 outside.
inline double bound_thm24(const DerivMagnitudes& d, const Interval& iv, const Params& pr) {
  detail::check_derivs(d, "bound_thm24");
  const double q = pr.q, s = pr.s, alpha = pr.alpha;
  const double dxq = std::pow(d.at_x, q);
  const double holder_pow = 1.0 - 1.0 / q;
  double total = 0.0;
  if (iv.x > iv.a)
    total += detail::a_side_prefactor(iv, alpha) *
             std::pow(lambda5(iv.a, iv.x, alpha) / (alpha + 1.0), holder_pow) *
             std::pow(lambda1(iv.a, iv.x, s, 1.0, alpha) * dxq +
                          lambda2(iv.a, iv.x, s, 1.0, alpha) * std::pow(d.at_a, q),
                      1.0 / q);
  if (iv.x < iv.b)
    total += detail::b_side_prefactor(iv, alpha) *
             std::pow(lambda6(iv.b, iv.x, alpha) / (alpha + 1.0), holder_pow) *
             std::pow(lambda3(iv.b, iv.x, s, 1.0, alpha) * dxq +
                          lambda4(iv.b, iv.x, s, 1.0, alpha) * std::pow(d.at_b, q),
                      1.0 / q);
  return total;
}

// Holder bound with the kernel weight integrated on its own; requires q > 1.
inline double bound_thm25(const DerivMagnitudes& d, const Interval& iv, const Params& pr) {
  detail::check_derivs(d, "bound_thm25");
  if (!pr.has_conjugate()) throw domain_error("bound_thm25: requires q > 1");
  const double q = pr.q, s = pr.s, alpha = pr.alpha, p = pr.p;
  const double dxq = std::pow(d.at_x, q);
  double total = 0.0;
  if (iv.x > iv.a)
    total += detail::a_side_prefactor(iv, alpha) *
             std::pow(lambda1(iv.a, iv.x, s, q, 0.0) * dxq +
                          lambda2(iv.a, iv.x, s, q, 0.0) * std::pow(d.at_a, q),
                      1.0 / q);
  if (iv.x < iv.b)
    total += detail::b_side_prefactor(iv, alpha) *
             std::pow(lambda3(iv.b, iv.x, s, q, 0.0) * dxq +
                          lambda4(iv.b, iv.x, s, q, 0.0) * std::pow(d.at_b, q),
                      1.0 / q);
  return std::pow(1.0 / (alpha * p + 1.0), 1.0 / p) * total;
}

// Holder bound pushing the whole kernel into the lambda factor; requires q > 1.
inline double bound_thm26(const DerivMagnitudes& d, const Interval& iv, const Params& pr) {
  detail::check_derivs(d, "bound_thm26");
  if (!pr.has_conjugate()) throw domain_error("bound_thm26: requires q > 1");
  const double q = pr.q, s = pr.s, alpha = pr.alpha, p = pr.p;
  const double dxq = std::pow(d.at_x, q);
  double total = 0.0;
  if (iv.x > iv.a)
    total += detail::a_side_prefactor(iv, alpha) *
             std::pow(lambda1(iv.a, iv.x, 0.0, p, alpha * p), 1.0 / p) *
             std::pow((dxq + std::pow(d.at_a, q)) / (s + 1.0), 1.0 / q);
  if (iv.x < iv.b)
    total += detail::b_side_prefactor(iv, alpha) *
             std::pow(lambda3(iv.b, iv.x, 0.0, p, alpha * p), 1.0 / p) *
             std::pow((dxq + std::pow(d.at_b, q)) / (s + 1.0), 1.0 / q);
  return total;
}

enum class TheoremId { thm22, thm23, thm24, thm25, thm26 };

inline std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::thm22: return "b22";
    case TheoremId::thm23: return "b23";
    case TheoremId::thm24: return "b24";
    case TheoremId::thm25: return "b25";
    case TheoremId::thm26: return "b26";
  }
  throw domain_error("TheoremId: unknown value");
}

inline TheoremId theorem_from_string(std::string_view id) {
  if (id == "b22" || id == "thm22") return TheoremId::thm22;
  if (id == "b23" || id == "thm23") return TheoremId::thm23;
  if (id == "b24" || id == "thm24") return TheoremId::thm24;
  if (id == "b25" || id == "thm25") return TheoremId::thm25;
  if (id == "b26" || id == "thm26") return TheoremId::thm26;
  throw domain_error("theorem_from_string: unknown bound id '" + std::string(id) + "'");
}

// Uniform-derivative corollary: the selected bound with all three derivative
// magnitudes set to M.
inline double corollary_bound(TheoremId id, double M, const Interval& iv, const Params& pr) {
  if (!std::isfinite(M) || !(M >= 0.0))
    throw domain_error("corollary_bound: requires M >= 0");
  const DerivMagnitudes d{M, M, M};
  switch (id) {
    case TheoremId::thm22: return bound_thm22(d, iv, pr);
    case TheoremId::thm23: return bound_thm23(d, iv, pr);
    case TheoremId::thm24: return bound_thm24(d, iv, pr);
    case TheoremId::thm25: return bound_thm25(d, iv, pr);
    case TheoremId::thm26: return bound_thm26(d, iv, pr);
  }
  throw domain_error("corollary_bound: unknown theorem id");
}

// Fractional Hermite-Hadamard chain for a harmonically convex f:
//
//   f(2ab/(a+b)) <= Gamma(alpha+1)/2 (ab/(b-a))^alpha
//                   [ J^alpha_{(1/a)-} h (1/b) + J^alpha_{(1/b)+} h (1/a) ]
//                <= (f(a) + f(b)) / 2.
struct HHTriple {
  double left;
  double middle;
  double right;
};

template <class F>
HHTriple hh_fractional_check(F&& f, double a, double b, double alpha,
                             double rel_tol = 1e-11, double abs_tol = 1e-13) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(0.0 < a) || !(a < b))
    throw domain_error("hh_fractional_check: requires 0 < a < b");
  const FractionalOrder order(alpha);
  auto h = [&f](double u) { return f(1.0 / u); };
  const double middle =
      0.5 * gamma_fn(alpha + 1.0) * std::pow(a * b / (b - a), alpha) *
      (rl_right(h, 1.0 / a, order, 1.0 / b, rel_tol, abs_tol) +
       rl_left(h, 1.0 / b, order, 1.0 / a, rel_tol, abs_tol));
  return {f(2.0 * a * b / (a + b)), middle, 0.5 * (f(a) + f(b))};
}

// Everything at one evaluation point.  b25/b26 are absent when q == 1 (the
// Holder bounds need q > 1).  A bound is flagged as violated when
// abs_sf > bound + 1e-12 * max(1, bound).
struct BoundReport {
  double abs_sf;
  double b22;
  double b23;
  double b24;
  std::optional<double> b25;
  std::optional<double> b26;
  std::string tightest;
  std::vector<std::string> violations;
};

namespace detail {

inline BoundReport build_report(double abs_sf, double b22, double b23, double b24,
                                std::optional<double> b25, std::optional<double> b26) {
  BoundReport rep{abs_sf, b22, b23, b24, b25, b26, {}, {}};
  std::vector<std::pair<std::string, double>> present{
      {"b22", b22}, {"b23", b23}, {"b24", b24}};
  if (b25) present.emplace_back("b25", *b25);
  if (b26) present.emplace_back("b26", *b26);
  rep.tightest = present.front().first;
  double best = present.front().second;
  for (const auto& [id, v] : present) {
    if (v < best) {
      best = v;
      rep.tightest = id;
    }
  }
  for (const auto& [id, v] : present)
    if (abs_sf > v + 1e-12 * std::max(1.0, v)) rep.violations.push_back(id);
  return rep;
}

}  // namespace detail

template <class F, class FPrime>
BoundReport evaluate_all_bounds(F&& f, FPrime&& fprime, const Interval& iv,
                                const Params& pr, double rel_tol = 1e-11,
                                double abs_tol = 1e-13) {
  const DerivMagnitudes d{std::abs(fprime(iv.a)), std::abs(fprime(iv.b)),
                          std::abs(fprime(iv.x))};
  const double abs_sf = std::abs(s_f(f, iv, pr.alpha, rel_tol, abs_tol));
  const double b22 = bound_thm22(d, iv, pr);
  const double b23 = bound_thm23(d, iv, pr);
  const double b24 = bound_thm24(d, iv, pr);
  std::optional<double> b25, b26;
  if (pr.has_conjugate()) {
    b25 = bound_thm25(d, iv, pr);
    b26 = bound_thm26(d, iv, pr);
  }
  return detail::build_report(abs_sf, b22, b23, b24, b25, b26);
}

}  // namespace ostra
