#pragma once

// Command-line front end: six subcommands over the library with a pinned
// exit-code contract and byte-deterministic CSV/JSON output.
//
//   specfun   evaluate gamma / beta / 2f1 at a point
//   frint     evaluate a fractional integral of a catalog function
//   identity  two-path agreement sweep for the deviation functional
//   bounds    all bound variants at one evaluation point
//   sweep     bound grid sweep to CSV/JSON
//   certify   harmonic s-convexity certificate for a catalog function
//
// Exit codes: 0 success; 1 failed inequality or certification check;
// 2 domain error; 3 quadrature/convergence failure; 4 certificate gate
// (bounds on an uncertified target without --force); 64 usage or config
// error; 74 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ostra/coefficients.hpp"
#include "ostra/errors.hpp"
#include "ostra/functions.hpp"
#include "ostra/ostrowski.hpp"
#include "ostra/quadrature.hpp"
#include "ostra/specfun.hpp"

namespace ostra::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed_check = 1;
inline constexpr int exit_domain = 2;
inline constexpr int exit_quadrature = 3;
inline constexpr int exit_certificate = 4;
inline constexpr int exit_usage = 64;
inline constexpr int exit_io = 74;

// Bad arguments or configuration (exit 64).
class usage_error : public error {
 public:
  using error::error;
};

// Output file problems (exit 74).
class io_error : public error {
 public:
  using error::error;
};

struct SweepGrid {
  std::vector<double> alphas{0.5, 1.0, 2.0};
  std::vector<double> ss{0.25, 0.5, 1.0};
  std::vector<double> qs{1.0, 2.0};
  std::vector<std::pair<double, double>> intervals{{1.0, 2.0}, {2.0, 5.0}};
  int x_count = 3;
};

struct RunConfig {
  std::string function_name;  // empty means the command's default
  SweepGrid grid;
  bool explicit_grid = false;  // config listed alphas/intervals explicitly
  double rel_tol = 1e-8;       // pass gate for identity; quadrature runs tighter
  double abs_tol = 1e-12;
  std::string out;     // empty means stdout
  std::string format = "csv";  // csv | json
  std::uint64_t seed = 12345;
  int cases = 60;  // random cases per function for the identity command
  bool force = false;
  int grid_density = 64;
};

namespace detail {

// %.*g formatting: 17 significant digits round-trips doubles exactly, 15 is
// the human-facing default.
inline std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Deterministic uniform doubles: identical across platforms for a fixed seed
// (mt19937_64 output mapped through the 53-bit ladder, no distribution
// objects involved).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

inline void apply_config_json(const nlohmann::json& j, RunConfig& cfg) {
  if (!j.is_object()) throw usage_error("config: top-level JSON value must be an object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      if (key == "function") {
        cfg.function_name = it->get<std::string>();
      } else if (key == "alphas") {
        cfg.grid.alphas = it->get<std::vector<double>>();
        cfg.explicit_grid = true;
      } else if (key == "ss") {
        cfg.grid.ss = it->get<std::vector<double>>();
      } else if (key == "qs") {
        cfg.grid.qs = it->get<std::vector<double>>();
      } else if (key == "intervals") {
        const auto pairs = it->get<std::vector<std::vector<double>>>();
        cfg.grid.intervals.clear();
        for (const auto& p : pairs) {
          if (p.size() != 2) throw usage_error("config: each interval must be [a, b]");
          cfg.grid.intervals.emplace_back(p[0], p[1]);
        }
        cfg.explicit_grid = true;
      } else if (key == "x_count") {
        cfg.grid.x_count = it->get<int>();
      } else if (key == "rel_tol") {
        cfg.rel_tol = it->get<double>();
      } else if (key == "abs_tol") {
        cfg.abs_tol = it->get<double>();
      } else if (key == "seed") {
        cfg.seed = it->get<std::uint64_t>();
      } else if (key == "cases") {
        cfg.cases = it->get<int>();
      } else if (key == "out") {
        cfg.out = it->get<std::string>();
      } else if (key == "format") {
        cfg.format = it->get<std::string>();
      } else if (key == "force") {
        cfg.force = it->get<bool>();
      } else if (key == "grid_density") {
        cfg.grid_density = it->get<int>();
      } else {
        throw usage_error("config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("config: ") + e.what());
  }
}

inline void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw usage_error("config: cannot read '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("config: parse error: ") + e.what());
  }
  apply_config_json(j, cfg);
}

inline void validate_config(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json")
    throw usage_error("config: format must be 'csv' or 'json'");
  if (cfg.grid.alphas.empty() || cfg.grid.ss.empty() || cfg.grid.qs.empty() ||
      cfg.grid.intervals.empty())
    throw usage_error("config: grid axis lists must be non-empty");
  if (cfg.grid.x_count < 1) throw usage_error("config: x_count must be at least 1");
  if (cfg.cases < 1) throw usage_error("config: cases must be at least 1");
  for (double a : cfg.grid.alphas)
    if (!(a > 0.0) || !std::isfinite(a)) throw usage_error("config: alphas must be positive");
  for (double s : cfg.grid.ss)
    if (!(s > 0.0 && s <= 1.0)) throw usage_error("config: ss must lie in (0, 1]");
  for (double q : cfg.grid.qs)
    if (!(q >= 1.0) || !std::isfinite(q)) throw usage_error("config: qs must be >= 1");
  for (const auto& [a, b] : cfg.grid.intervals)
    if (!(0.0 < a && a < b) || !std::isfinite(b))
      throw usage_error("config: intervals must satisfy 0 < a < b");
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
    throw usage_error("config: tolerances must be positive");
}

// Writes to the named file (binary mode, so bytes are stable) or to the
// fallback stream when no path is given.
struct Sink {
  std::ofstream file;
  std::ostream* os;
  Sink(const std::string& path, std::ostream& fallback) : os(&fallback) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) throw io_error("cannot open output file '" + path + "'");
      os = &file;
    }
  }
  std::ostream& stream() { return *os; }
  void finish(const std::string& path) {
    if (os == &file) {
      file.flush();
      if (!file) throw io_error("failed writing output file '" + path + "'");
    }
  }
};

inline TestFunction resolve_function(const std::string& name) {
  auto tf = find_function(name);
  if (!tf) throw usage_error("unknown function '" + name + "'");
  return *tf;
}

inline std::vector<double> x_points(double a, double b, int n) {
  std::vector<double> xs;
  if (n <= 1) {
    xs.push_back(0.5 * (a + b));
    return xs;
  }
  xs.reserve(n);
  for (int i = 0; i < n; ++i)
    xs.push_back(std::clamp(a + (b - a) * i / (n - 1.0), a, b));
  return xs;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepRow {
  double alpha, s, q, a, b, x;
  BoundReport report;
};

inline std::vector<SweepRow> run_sweep(const RunConfig& cfg, const TestFunction& tf) {
  SweepGrid g = cfg.grid;
  // Axis lists are traversed in ascending order so rows come out in
  // lexicographic order over (alpha, s, q, a, b, x).
  std::sort(g.alphas.begin(), g.alphas.end());
  std::sort(g.ss.begin(), g.ss.end());
  std::sort(g.qs.begin(), g.qs.end());
  std::sort(g.intervals.begin(), g.intervals.end());

  std::vector<SweepRow> rows;
  for (double alpha : g.alphas)
    for (double s : g.ss)
      for (double q : g.qs) {
        const Params pr(alpha, s, q);
        for (const auto& [a, b] : g.intervals)
          for (double x : x_points(a, b, g.x_count)) {
            const Interval iv(a, b, x);
            rows.push_back({alpha, s, q, a, b, x,
                            evaluate_all_bounds(tf.f, tf.fprime, iv, pr)});
          }
      }
  return rows;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "alpha,s,q,a,b,x,abs_sf,b22,b23,b24,b25,b26,tightest,violation\n";
  for (const auto& r : rows) {
    os << fmt(r.alpha, 17) << ',' << fmt(r.s, 17) << ',' << fmt(r.q, 17) << ','
       << fmt(r.a, 17) << ',' << fmt(r.b, 17) << ',' << fmt(r.x, 17) << ','
       << fmt(r.report.abs_sf, 17) << ',' << fmt(r.report.b22, 17) << ','
       << fmt(r.report.b23, 17) << ',' << fmt(r.report.b24, 17) << ','
       << (r.report.b25 ? fmt(*r.report.b25, 17) : std::string()) << ','
       << (r.report.b26 ? fmt(*r.report.b26, 17) : std::string()) << ','
       << r.report.tightest << ',' << (r.report.violations.empty() ? '0' : '1')
       << '\n';
  }
}

inline nlohmann::json sweep_row_json(const SweepRow& r) {
  nlohmann::json j{{"alpha", r.alpha}, {"s", r.s},       {"q", r.q},
                   {"a", r.a},         {"b", r.b},       {"x", r.x},
                   {"abs_sf", r.report.abs_sf},          {"b22", r.report.b22},
                   {"b23", r.report.b23},                {"b24", r.report.b24},
                   {"tightest", r.report.tightest},
                   {"violation", r.report.violations.empty() ? 0 : 1}};
  j["b25"] = r.report.b25 ? nlohmann::json(*r.report.b25) : nlohmann::json(nullptr);
  j["b26"] = r.report.b26 ? nlohmann::json(*r.report.b26) : nlohmann::json(nullptr);
  return j;
}

inline void write_sweep_json(std::ostream& os, const RunConfig& cfg,
                             const std::string& function_name,
                             const std::vector<SweepRow>& rows) {
  nlohmann::json j;
  j["function"] = function_name;
  j["seed"] = cfg.seed;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back(sweep_row_json(r));
  os << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// identity
// ---------------------------------------------------------------------------

struct IdentityRow {
  std::string function;
  double alpha, a, b, x;
  double lhs, rhs, residual;
};

inline IdentityRow identity_case(const TestFunction& tf, double alpha, double a,
                                 double b, double x) {
  const Interval iv(a, b, x);
  const double lhs = s_f(tf.f, iv, alpha);
  const double rhs = s_f_rhs(tf.fprime, iv, alpha);
  const double residual = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
  return {tf.name, alpha, a, b, x, lhs, rhs, residual};
}

inline std::vector<IdentityRow> run_identity(const RunConfig& cfg,
                                             const std::vector<TestFunction>& fns) {
  std::vector<IdentityRow> rows;
  if (cfg.explicit_grid) {
    for (const auto& tf : fns)
      for (double alpha : cfg.grid.alphas)
        for (const auto& [a, b] : cfg.grid.intervals)
          for (double x : x_points(a, b, cfg.grid.x_count))
            rows.push_back(identity_case(tf, alpha, a, b, x));
    return rows;
  }
  Rng rng(cfg.seed);
  for (const auto& tf : fns) {
    for (int i = 0; i < cfg.cases; ++i) {
      const double alpha = rng.uniform(0.1, 3.0);
      const double a = rng.uniform(0.25, 4.0);
      const double width = rng.uniform(0.5, std::min(6.0, 10.0 - a));
      const double b = a + width;
      const double x = a + width * rng.uniform(0.08, 0.92);
      rows.push_back(identity_case(tf, alpha, a, b, x));
    }
  }
  return rows;
}

inline void write_identity_csv(std::ostream& os, const RunConfig& cfg,
                               const std::vector<IdentityRow>& rows) {
  if (!cfg.explicit_grid) os << "# seed=" << cfg.seed << '\n';
  os << "function,alpha,a,b,x,s_f,s_f_rhs,residual\n";
  for (const auto& r : rows) {
    os << r.function << ',' << fmt(r.alpha, 17) << ',' << fmt(r.a, 17) << ','
       << fmt(r.b, 17) << ',' << fmt(r.x, 17) << ',' << fmt(r.lhs, 17) << ','
       << fmt(r.rhs, 17) << ',' << fmt(r.residual, 17) << '\n';
  }
}

inline void write_identity_json(std::ostream& os, const RunConfig& cfg,
                                const std::vector<IdentityRow>& rows,
                                double max_residual) {
  nlohmann::json j;
  j["seed"] = cfg.seed;
  j["max_residual"] = max_residual;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows)
    j["rows"].push_back({{"function", r.function},
                         {"alpha", r.alpha},
                         {"a", r.a},
                         {"b", r.b},
                         {"x", r.x},
                         {"s_f", r.lhs},
                         {"s_f_rhs", r.rhs},
                         {"residual", r.residual}});
  os << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// subcommand drivers
// ---------------------------------------------------------------------------

inline int cmd_specfun(const std::string& kind, const std::vector<double>& vals,
                       std::ostream& out) {
  double result = 0.0;
  if (kind == "gamma") {
    if (vals.size() != 1) throw usage_error("specfun gamma expects exactly 1 argument");
    result = gamma_fn(vals[0]);
  } else if (kind == "beta") {
    if (vals.size() != 2) throw usage_error("specfun beta expects exactly 2 arguments");
    result = beta_fn(vals[0], vals[1]);
  } else if (kind == "2f1") {
    if (vals.size() != 4) throw usage_error("specfun 2f1 expects exactly 4 arguments");
    result = hyp2f1(vals[0], vals[1], vals[2], vals[3]);
  } else {
    throw usage_error("specfun: unknown kind '" + kind + "' (expected gamma|beta|2f1)");
  }
  out << fmt(result, 15) << '\n';
  return exit_ok;
}

inline int cmd_frint(const std::string& side, const std::string& fn_name, double c,
                     double alpha, double y, const RunConfig& cfg, bool tols_given,
                     std::ostream& out) {
  const TestFunction tf = resolve_function(fn_name);
  const double rel = tols_given ? cfg.rel_tol : 1e-10;
  const double abs = tols_given ? cfg.abs_tol : 1e-12;
  double v = 0.0;
  if (side == "left")
    v = rl_left(tf.f, c, FractionalOrder(alpha), y, rel, abs);
  else if (side == "right")
    v = rl_right(tf.f, c, FractionalOrder(alpha), y, rel, abs);
  else
    throw usage_error("frint: side must be 'left' or 'right'");
  out << fmt(v, 15) << '\n';
  return exit_ok;
}

inline int cmd_identity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<TestFunction> fns;
  if (cfg.function_name.empty())
    fns = catalog();
  else
    fns.push_back(resolve_function(cfg.function_name));

  const auto rows = run_identity(cfg, fns);
  double max_residual = 0.0;
  const IdentityRow* worst = nullptr;
  for (const auto& r : rows)
    if (r.residual >= max_residual) {
      max_residual = r.residual;
      worst = &r;
    }

  Sink sink(cfg.out, out);
  if (cfg.format == "csv")
    write_identity_csv(sink.stream(), cfg, rows);
  else
    write_identity_json(sink.stream(), cfg, rows, max_residual);
  sink.finish(cfg.out);

  if (!cfg.out.empty())
    out << "identity: " << rows.size() << " cases, max residual " << fmt(max_residual, 15)
        << " (gate " << fmt(cfg.rel_tol, 15) << ")\n";
  if (max_residual > cfg.rel_tol) {
    err << "identity check failed: max residual " << fmt(max_residual, 15) << " > "
        << fmt(cfg.rel_tol, 15);
    if (worst)
      err << " at function=" << worst->function << " alpha=" << fmt(worst->alpha, 15)
          << " a=" << fmt(worst->a, 15) << " b=" << fmt(worst->b, 15)
          << " x=" << fmt(worst->x, 15);
    err << '\n';
    return exit_failed_check;
  }
  return exit_ok;
}

inline int cmd_bounds(const std::string& fn_name, double alpha, double s, double q,
                      double a, double b, double x, const RunConfig& cfg,
                      std::ostream& out, std::ostream& err) {
  const TestFunction tf = resolve_function(fn_name);
  const Params pr(alpha, s, q);
  const Interval iv(a, b, x);

  if (!cfg.force) {
    const auto verdict =
        is_harmonically_s_convex(certify_target(tf, q), a, b, s, cfg.grid_density);
    if (!verdict.passed) {
      err << "certificate failure: ";
      if (tf.certify == CertifyTarget::raw_function)
        err << tf.name;
      else
        err << "|" << tf.name << "'|^q (q=" << fmt(q, 15) << ")";
      err << " is not harmonically s-convex on [" << fmt(a, 15) << ", " << fmt(b, 15)
          << "] at s=" << fmt(s, 15);
      if (verdict.witness)
        err << "; witness x=" << fmt(verdict.witness->x, 15)
            << " y=" << fmt(verdict.witness->y, 15)
            << " t=" << fmt(verdict.witness->t, 15)
            << " violation=" << fmt(verdict.witness->violation, 15);
      err << "\nre-run with --force to evaluate the bounds anyway\n";
      return exit_certificate;
    }
  }

  const auto rep = evaluate_all_bounds(tf.f, tf.fprime, iv, pr);
  out << "abs_sf   = " << fmt(rep.abs_sf, 15) << '\n';
  out << "b22      = " << fmt(rep.b22, 15) << '\n';
  out << "b23      = " << fmt(rep.b23, 15) << '\n';
  out << "b24      = " << fmt(rep.b24, 15) << '\n';
  out << "b25      = " << (rep.b25 ? fmt(*rep.b25, 15) : std::string("n/a (q = 1)")) << '\n';
  out << "b26      = " << (rep.b26 ? fmt(*rep.b26, 15) : std::string("n/a (q = 1)")) << '\n';
  out << "tightest = " << rep.tightest << '\n';
  if (rep.violations.empty()) {
    out << "violations: none\n";
  } else {
    out << "violations:";
    for (const auto& id : rep.violations) out << ' ' << id;
    out << '\n';
  }

  if (!cfg.out.empty()) {
    Sink sink(cfg.out, out);
    const SweepRow row{alpha, s, q, a, b, x, rep};
    if (cfg.format == "csv")
      write_sweep_csv(sink.stream(), {row});
    else
      sink.stream() << sweep_row_json(row).dump(2) << '\n';
    sink.finish(cfg.out);
  }
  return rep.violations.empty() ? exit_ok : exit_failed_check;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const std::string fn_name =
      cfg.function_name.empty() ? std::string("quadratic") : cfg.function_name;
  const TestFunction tf = resolve_function(fn_name);
  // Open the sink before computing so I/O problems surface immediately.
  Sink sink(cfg.out, out);
  const auto rows = run_sweep(cfg, tf);
  if (cfg.format == "csv")
    write_sweep_csv(sink.stream(), rows);
  else
    write_sweep_json(sink.stream(), cfg, fn_name, rows);
  sink.finish(cfg.out);
  if (!cfg.out.empty()) out << "sweep: wrote " << rows.size() << " rows to " << cfg.out << '\n';
  return exit_ok;
}

inline int cmd_certify(const std::string& fn_name, double a, double b, double s,
                       double q, const RunConfig& cfg, std::ostream& out) {
  const TestFunction tf = resolve_function(fn_name);
  if (!(q >= 1.0)) throw domain_error("certify: requires q >= 1");
  const auto verdict =
      is_harmonically_s_convex(certify_target(tf, q), a, b, s, cfg.grid_density);
  const std::string target =
      tf.certify == CertifyTarget::raw_function
          ? tf.name
          : "|" + tf.name + "'|^q (q=" + fmt(q, 15) + ")";
  if (verdict.passed) {
    out << "PASSED: " << target << " is harmonically s-convex on [" << fmt(a, 15) << ", "
        << fmt(b, 15) << "] at s=" << fmt(s, 15) << " (grid density " << cfg.grid_density
        << ")\n";
    return exit_ok;
  }
  out << "FAILED: " << target << " is not harmonically s-convex on [" << fmt(a, 15)
      << ", " << fmt(b, 15) << "] at s=" << fmt(s, 15) << '\n';
  if (verdict.witness)
    out << "witness: x=" << fmt(verdict.witness->x, 15)
        << " y=" << fmt(verdict.witness->y, 15) << " t=" << fmt(verdict.witness->t, 15)
        << " violation=" << fmt(verdict.witness->violation, 15) << '\n';
  return exit_failed_check;
}

}  // namespace detail

// Parse the argument vector (program name excluded) and run one subcommand.
// All output goes to the supplied streams, which keeps the whole front end
// testable in-process.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fractional Ostrowski inequality workbench"};
  app.name("ostra");
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string config_path, out_path, format, function_name;
  double rel_tol = 0.0, abs_tol = 0.0;
  std::uint64_t seed = 0;
  bool force = false;
  int grid_density = 0;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "output format: csv|json");
  app.add_option("--function", function_name, "catalog function name");
  app.add_option("--rel-tol", rel_tol, "relative tolerance");
  app.add_option("--abs-tol", abs_tol, "absolute tolerance");
  app.add_option("--seed", seed, "random seed");
  app.add_flag("--force", force, "skip the convexity certificate gate");
  app.add_option("--grid-density", grid_density, "certifier grid density (>= 16)");

  auto* sc_specfun = app.add_subcommand("specfun", "evaluate gamma|beta|2f1 at a point");
  std::string sf_kind;
  std::vector<double> sf_vals;
  sc_specfun->add_option("kind", sf_kind, "gamma|beta|2f1")->required();
  sc_specfun->add_option("values", sf_vals, "numeric arguments");

  auto* sc_frint = app.add_subcommand("frint", "evaluate a fractional integral");
  std::string fr_side, fr_fn;
  double fr_c = 0.0, fr_alpha = 0.0, fr_y = 0.0;
  sc_frint->add_option("side", fr_side, "left|right")->required();
  sc_frint->add_option("function", fr_fn, "catalog function")->required();
  sc_frint->add_option("c", fr_c, "base point")->required();
  sc_frint->add_option("alpha", fr_alpha, "fractional order")->required();
  sc_frint->add_option("y", fr_y, "evaluation point")->required();

  auto* sc_identity = app.add_subcommand("identity", "two-path agreement sweep");

  auto* sc_bounds = app.add_subcommand("bounds", "all bounds at one point");
  std::string bd_fn;
  double bd_alpha = 0.0, bd_s = 0.0, bd_q = 0.0, bd_a = 0.0, bd_b = 0.0, bd_x = 0.0;
  sc_bounds->add_option("function", bd_fn)->required();
  sc_bounds->add_option("alpha", bd_alpha)->required();
  sc_bounds->add_option("s", bd_s)->required();
  sc_bounds->add_option("q", bd_q)->required();
  sc_bounds->add_option("a", bd_a)->required();
  sc_bounds->add_option("b", bd_b)->required();
  sc_bounds->add_option("x", bd_x)->required();

  auto* sc_sweep = app.add_subcommand("sweep", "bound grid sweep to CSV/JSON");

  auto* sc_certify = app.add_subcommand("certify", "harmonic s-convexity certificate");
  std::string cf_fn;
  double cf_a = 0.0, cf_b = 0.0, cf_s = 0.0, cf_q = 0.0;
  sc_certify->add_option("function", cf_fn)->required();
  sc_certify->add_option("a", cf_a)->required();
  sc_certify->add_option("b", cf_b)->required();
  sc_certify->add_option("s", cf_s)->required();
  sc_certify->add_option("q", cf_q)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    RunConfig cfg;
    if (app.count("--config")) detail::load_config_file(config_path, cfg);
    if (app.count("--function")) cfg.function_name = function_name;
    if (app.count("--rel-tol")) cfg.rel_tol = rel_tol;
    if (app.count("--abs-tol")) cfg.abs_tol = abs_tol;
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--out")) cfg.out = out_path;
    if (app.count("--format")) cfg.format = format;
    if (app.count("--force")) cfg.force = force;
    if (app.count("--grid-density")) cfg.grid_density = grid_density;
    detail::validate_config(cfg);
    if (cfg.grid_density < 16)
      throw usage_error("grid density must be at least 16");

    const bool tols_given = app.count("--rel-tol") || app.count("--abs-tol");
    if (sc_specfun->parsed()) return detail::cmd_specfun(sf_kind, sf_vals, out);
    if (sc_frint->parsed())
      return detail::cmd_frint(fr_side, fr_fn, fr_c, fr_alpha, fr_y, cfg, tols_given, out);
    if (sc_identity->parsed()) return detail::cmd_identity(cfg, out, err);
    if (sc_bounds->parsed())
      return detail::cmd_bounds(bd_fn, bd_alpha, bd_s, bd_q, bd_a, bd_b, bd_x, cfg, out, err);
    if (sc_sweep->parsed()) return detail::cmd_sweep(cfg, out);
    if (sc_certify->parsed())
      return detail::cmd_certify(cf_fn, cf_a, cf_b, cf_s, cf_q, cfg, out);
    err << "usage error: no subcommand selected\n";
    return exit_usage;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const io_error& e) {
    err << "io error: " << e.what() << '\n';
    return exit_io;
  } catch (const domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_domain;
  } catch (const overflow_error& e) {
    err << "overflow: " << e.what() << '\n';
    return exit_domain;
  } catch (const quadrature_error& e) {
    err << "quadrature failure: " << e.what() << '\n';
    return exit_quadrature;
  } catch (const convergence_error& e) {
    err << "convergence failure: " << e.what() << '\n';
    return exit_quadrature;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 70;
  }
}

}  // namespace ostra::cli
