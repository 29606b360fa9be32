#pragma once

// Adaptive Gauss-Kronrod (G7, K15) quadrature plus the two Riemann-Liouville
// fractional integral operators.  The weakly singular RL kernels are removed
// analytically with the power substitution t = y -/+ (y - c) w^(1/alpha), so
// the quadrature only ever sees a bounded integrand on (0, 1).

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ostra/errors.hpp"
#include "ostra/specfun.hpp"

namespace ostra {

struct QuadResult {
  double value;
  double error_estimate;
  long evaluations;
};

// Positive fractional order alpha > 0, validated at construction.
struct FractionalOrder {
  double alpha;
  explicit FractionalOrder(double a) : alpha(a) {
    if (!std::isfinite(a) || !(a > 0.0))
      throw domain_error("FractionalOrder: requires alpha > 0, got " + std::to_string(a));
  }
};

namespace detail {

// 15-point Kronrod nodes (positive half), 15-point Kronrod weights and
// 7-point Gauss weights, QUADPACK dqk15 values.
inline constexpr double gk_xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk_wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi;
  double value;
  double err;
  int depth;
};

inline void require_finite_sample(double v, double at) {
  if (!std::isfinite(v))
    throw nonfinite_sample_error("integrate: integrand returned a non-finite value at x = " +
                                 std::to_string(at));
}

template <class F>
Panel gk15_panel(const F& f, double lo, double hi, int depth, long& evals) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fv1[7];
  double fv2[7];
  const double fc = f(mid);
  require_finite_sample(fc, mid);

  double resg = gk_wg[3] * fc;
  double resk = gk_wgk[7] * fc;
  double resabs = gk_wgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * gk_xgk[j];
    fv1[j] = f(mid - dx);
    fv2[j] = f(mid + dx);
    require_finite_sample(fv1[j], mid - dx);
    require_finite_sample(fv2[j], mid + dx);
    const double fsum = fv1[j] + fv2[j];
    resk += gk_wgk[j] * fsum;
    resabs += gk_wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j & 1) resg += gk_wg[j / 2] * fsum;
  }
  evals += 15;

  const double reskh = 0.5 * resk;
  double resasc = gk_wgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += gk_wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50)
    err = std::max(eps50 * resabs, err);
  return {lo, hi, value, err, depth};
}

inline bool panel_before(const Panel& a, const Panel& b) {
  // std::push_heap orders by "less"; we want the largest error on top, with a
  // positional tie-break so refinement order is deterministic.
  if (a.err != b.err) return a.err < b.err;
  return a.lo > b.lo;
}

}  // namespace detail

// Adaptive GK15 with worst-panel-first global refinement.  Stops when the
// summed error estimate satisfies max(abs_tol, rel_tol * |value|).
template <class F>
QuadResult integrate(F&& f, double lo, double hi, double rel_tol = 1e-10,
                     double abs_tol = 1e-12) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw domain_error("integrate: endpoints must be finite");
  if (!(lo <= hi)) throw domain_error("integrate: requires lo <= hi");
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw domain_error("integrate: tolerances must be positive");
  if (lo == hi) return {0.0, 0.0, 0};

  constexpr int max_depth = 60;
  constexpr std::size_t max_panels = 100000;

  long evals = 0;
  std::vector<detail::Panel> heap;
  heap.push_back(detail::gk15_panel(f, lo, hi, 0, evals));
  double total_value = heap.front().value;
  double total_err = heap.front().err;

  std::size_t splits = 0;
  while (total_err > std::max(abs_tol, rel_tol * std::abs(total_value))) {
    std::pop_heap(heap.begin(), heap.end(), detail::panel_before);
    const detail::Panel worst = heap.back();
    heap.pop_back();
    if (worst.depth >= max_depth)
      throw depth_exceeded_error("integrate: subdivision depth cap (60) exceeded near x = " +
                                 std::to_string(worst.lo));
    if (heap.size() + 2 > max_panels)
      throw depth_exceeded_error("integrate: panel budget exhausted");
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi))
      throw depth_exceeded_error("integrate: interval too small to split at x = " +
                                 std::to_string(worst.lo));
    const detail::Panel left = detail::gk15_panel(f, worst.lo, mid, worst.depth + 1, evals);
    const detail::Panel right = detail::gk15_panel(f, mid, worst.hi, worst.depth + 1, evals);
    total_value += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), detail::panel_before);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), detail::panel_before);

    // The incremental totals accumulate cancellation noise; refresh them from
    // the panel list now and then, and always keep the error nonnegative.
    if ((++splits & 0x1ff) == 0) {
      total_value = 0.0;
      total_err = 0.0;
      for (const auto& p : heap) {
        total_value += p.value;
        total_err += p.err;
      }
    }
    total_err = std::max(total_err, 0.0);
  }

  // Final compensated resummation over the surviving panels.
  double value = 0.0, comp = 0.0, err = 0.0;
  for (const auto& p : heap) {
    const double y = p.value - comp;
    const double t = value + y;
    comp = (t - value) - y;
    value = t;
    err += p.err;
  }
  return {value, err, evals};
}

// Left-sided Riemann-Liouville integral of order alpha evaluated at y > c:
//
//   J^alpha_{c+} h (y) = (1 / Gamma(alpha)) Int_c^y (y - t)^(alpha-1) h(t) dt.
//
// The substitution t = y - (y - c) w^(1/alpha) absorbs the kernel:
//
//   J^alpha_{c+} h (y) = ((y - c)^alpha / Gamma(alpha + 1))
//                        Int_0^1 h(y - (y - c) w^(1/alpha)) dw.
//
// The sample point is formed as c + (y - c) * (1 - w^(1/alpha)) with
// 1 - w^(1/alpha) = -expm1(log(w) / alpha), which stays accurate when the
// subdivision pushes w toward 1 and t toward c.
template <class F>
double rl_left(F&& h, double c, FractionalOrder order, double y,
               double rel_tol = 1e-10, double abs_tol = 1e-12) {
  if (!std::isfinite(c) || !std::isfinite(y))
    throw domain_error("rl_left: arguments must be finite");
  if (!(y > c)) throw domain_error("rl_left: requires y > c");
  const double alpha = order.alpha;
  const double len = y - c;
  const double inv_alpha = 1.0 / alpha;
  auto g = [&](double w) {
    const double one_minus = -std::expm1(inv_alpha * std::log(w));
    return h(c + len * one_minus);
  };
  const QuadResult q = integrate(g, 0.0, 1.0, rel_tol, abs_tol);
  return q.value * std::pow(len, alpha) / gamma_fn(alpha + 1.0);
}

// Right-sided Riemann-Liouville integral of order alpha evaluated at y < c:
//
//   J^alpha_{c-} h (y) = (1 / Gamma(alpha)) Int_y^c (t - y)^(alpha-1) h(t) dt
//                      = ((c - y)^alpha / Gamma(alpha + 1))
//                        Int_0^1 h(y + (c - y) w^(1/alpha)) dw.
template <class F>
double rl_right(F&& h, double c, FractionalOrder order, double y,
                double rel_tol = 1e-10, double abs_tol = 1e-12) {
  if (!std::isfinite(c) || !std::isfinite(y))
    throw domain_error("rl_right: arguments must be finite");
  if (!(y < c)) throw domain_error("rl_right: requires y < c");
  const double alpha = order.alpha;
  const double len = c - y;
  const double inv_alpha = 1.0 / alpha;
  auto g = [&](double w) {
    const double one_minus = -std::expm1(inv_alpha * std::log(w));
    return h(c - len * one_minus);
  };
  const QuadResult q = integrate(g, 0.0, 1.0, rel_tol, abs_tol);
  return q.value * std::pow(len, alpha) / gamma_fn(alpha + 1.0);
}

}  // namespace ostra
