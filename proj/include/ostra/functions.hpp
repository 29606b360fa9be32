#pragma once

// A small catalog of test functions on (0, inf) with exact derivatives, a
// deterministic grid certifier for harmonic s-convexity, and a handful of
// deliberately defective fixtures used to drive failure paths.
//
// g is harmonically s-convex on [a, b] (s in (0, 1]) when
//
//   g(x*y / (t*x + (1-t)*y)) <= t^s g(y) + (1-t)^s g(x)
//
// for all x, y in [a, b] and t in [0, 1].

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ostra/errors.hpp"

namespace ostra {

// What the certifier should look at for a given catalog entry: the power of
// the derivative magnitude |f'|^q (the usual hypothesis), or the function
// itself.
enum class CertifyTarget { deriv_power, raw_function };

struct TestFunction {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> fprime;
  // Short justification when the property holds for structural reasons, or
  // the literal tag "certify numerically".
  std::string analytic_certificate;
  // f itself is harmonically convex (qualifies for Hermite-Hadamard runs).
  bool harmonically_convex = false;
  // Deliberately defective entry, excluded from catalog().
  bool fixture = false;
  CertifyTarget certify = CertifyTarget::deriv_power;
};

struct ConvexityWitness {
  double x;
  double y;
  double t;
  double violation;
};

struct ConvexityVerdict {
  bool passed;
  std::optional<ConvexityWitness> witness;
};

// Deterministic dense-grid check of harmonic s-convexity of g on [a, b].
// Scans an n x n x n grid of (x, y, t) triples and reports the worst
// violation; the pass tolerance is 1e-10 * max(1, max |g| seen) so the
// verdict is insensitive to the overall scale of g.
template <class G>
ConvexityVerdict is_harmonically_s_convex(G&& g, double a, double b, double s,
                                          int grid_density = 64) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(0.0 < a) || !(a < b))
    throw domain_error("is_harmonically_s_convex: requires 0 < a < b");
  if (!(s > 0.0 && s <= 1.0))
    throw domain_error("is_harmonically_s_convex: requires s in (0, 1]");
  if (grid_density < 16)
    throw domain_error("is_harmonically_s_convex: grid_density must be at least 16");

  const int n = grid_density;
  std::vector<double> node(n), gnode(n), ts(n), omts(n);
  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    node[i] = a + (b - a) * i / (n - 1.0);
    gnode[i] = g(node[i]);
    if (!std::isfinite(gnode[i]))
      throw nonfinite_sample_error(
          "is_harmonically_s_convex: g returned a non-finite value at " +
          std::to_string(node[i]));
    scale = std::max(scale, std::abs(gnode[i]));
  }
  for (int k = 0; k < n; ++k) {
    const double t = k / (n - 1.0);
    ts[k] = std::pow(t, s);
    omts[k] = std::pow(1.0 - t, s);
  }

  double worst = -std::numeric_limits<double>::infinity();
  ConvexityWitness at{a, a, 0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double x = node[i];
        const double y = node[j];
        const double t = k / (n - 1.0);
        const double mix = x * y / (t * x + (1.0 - t) * y);
        const double lhs = g(mix);
        if (!std::isfinite(lhs))
          throw nonfinite_sample_error(
              "is_harmonically_s_convex: g returned a non-finite value at " +
              std::to_string(mix));
        scale = std::max(scale, std::abs(lhs));
        const double violation = lhs - (ts[k] * gnode[j] + omts[k] * gnode[i]);
        if (violation > worst) {
          worst = violation;
          at = {x, y, t, violation};
        }
      }
    }
  }

  const double tol = 1e-10 * scale;
  if (worst > tol) return {false, at};
  return {true, std::nullopt};
}

// The genuine corpus.  Every entry's |f'|^q is harmonically s-convex on any
// [a, b] in (0, inf) for all s in (0, 1] and q >= 1, which is what the bound
// evaluations assume.
inline std::vector<TestFunction> catalog() {
  std::vector<TestFunction> fns;
  fns.push_back({"identity",
                 [](double u) { return u; },
                 [](double) { return 1.0; },
                 "|f'|^q == 1 and t^s + (1-t)^s >= 1 on [0,1] for s in (0,1]",
                 true, false, CertifyTarget::deriv_power});
  fns.push_back({"quadratic",
                 [](double u) { return 0.5 * u * u; },
                 [](double u) { return u; },
                 "certify numerically",
                 true, false, CertifyTarget::deriv_power});
  fns.push_back({"neg_log",
                 [](double u) { return -std::log(u); },
                 [](double u) { return -1.0 / u; },
                 "|f'|^q = u^{-q}: v -> v^q is convex increasing, so the harmonic mix maps "
                 "inside the chord; f itself is harmonically concave, not convex",
                 false, false, CertifyTarget::deriv_power});
  fns.push_back({"reciprocal",
                 [](double u) { return 1.0 / u; },
                 [](double u) { return -1.0 / (u * u); },
                 "f is harmonically affine (equality in Hermite-Hadamard); |f'|^q = u^{-2q} "
                 "is harmonically convex",
                 true, false, CertifyTarget::deriv_power});
  fns.push_back({"exp",
                 [](double u) { return std::exp(u); },
                 [](double u) { return std::exp(u); },
                 "certify numerically",
                 true, false, CertifyTarget::deriv_power});
  return fns;
}

// Deliberately defective entries for exercising failure paths.  Excluded
// from catalog(); resolvable by name through find_function().
inline std::vector<TestFunction> fixtures() {
  std::vector<TestFunction> fns;
  fns.push_back({"neg_identity",
                 [](double u) { return -u; },
                 [](double) { return -1.0; },
                 "raw certification target g(x) = -x fails harmonic s-convexity by design",
                 false, true, CertifyTarget::raw_function});
  fns.push_back({"skewed_derivative",
                 [](double u) { return u * u; },
                 [](double u) { return 2.05 * u; },
                 "reported derivative is 2.5% off; the two-path identity check must flag it",
                 false, true, CertifyTarget::deriv_power});
  fns.push_back({"pole_at_two",
                 [](double u) { return 1.0 / (u - 2.0); },
                 [](double u) { return -1.0 / ((u - 2.0) * (u - 2.0)); },
                 "pole inside (0, inf); drives quadrature failure paths",
                 false, true, CertifyTarget::deriv_power});
  fns.push_back({"gauss_bump",
                 [](double u) {
                   return std::sqrt(std::numbers::pi / 200.0) *
                          std::erf(std::sqrt(50.0) * (u - 1.2));
                 },
                 [](double u) { return std::exp(-50.0 * (u - 1.2) * (u - 1.2)); },
                 "|f'|^q is a hump, not harmonically s-convex; the bounds can genuinely fail",
                 false, true, CertifyTarget::deriv_power});
  return fns;
}

// Look a function up by name across catalog() and fixtures().
inline std::optional<TestFunction> find_function(std::string_view name) {
  for (auto& tf : catalog())
    if (tf.name == name) return tf;
  for (auto& tf : fixtures())
    if (tf.name == name) return tf;
  return std::nullopt;
}

// The callable the certifier should inspect for this entry at exponent q.
inline std::function<double(double)> certify_target(const TestFunction& tf, double q) {
  if (!(q >= 1.0) || !std::isfinite(q))
    throw domain_error("certify_target: requires q >= 1");
  if (tf.certify == CertifyTarget::raw_function) return tf.f;
  return [fp = tf.fprime, q](double u) { return std::pow(std::abs(fp(u)), q); };
}

}  // namespace ostra
