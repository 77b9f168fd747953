#pragma once

// Command-line front end: momentum sweep -> rates -> decay curves -> CSV.

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdrate/evolution.hpp"
#include "fdrate/rate.hpp"

namespace fdrate::cli {

enum ExitStatus : int { exit_ok = 0, exit_usage = 1, exit_physics = 2, exit_io = 3 };

/// Closed form and trace oracle must agree to this before anything is written.
inline constexpr double oracle_agreement_tolerance = 1e-6;

struct RunConfig {
  double mass_mev = 0.51;
  std::vector<double> momenta_mev{0.0, 0.001, 0.01};
  double omega_ev = 12.8;
  double t_max_s = 6e-5;
  std::size_t samples = default_curve_samples;
  std::size_t quadrature_order = default_quadrature_order;
  RadicalMode mode = RadicalMode::exact;
  std::string output_path = "fdrate_curves.csv";
  bool emit_plot_script = false;
  bool emit_rate_table = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

namespace detail {

inline double parse_double(const std::string& flag, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v))
    throw UsageError(flag + ": not a finite number: '" + text + "'");
  return v;
}

inline std::vector<double> parse_list(const std::string& flag, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(flag, item));
  if (!text.empty() && text.back() == ',') throw UsageError(flag + ": trailing comma");
  return out;
}

}  // namespace detail

inline void validate(const RunConfig& cfg) {
  if (!(cfg.mass_mev > 0)) throw UsageError("--mass-mev: must be positive");
  if (!(cfg.omega_ev > 0)) throw UsageError("--omega-ev: must be positive");
  if (!(cfg.t_max_s > 0)) throw UsageError("--tmax-s: must be positive");
  if (cfg.samples < 2) throw UsageError("--samples: need at least 2");
  if (cfg.quadrature_order < min_quadrature_order)
    throw UsageError("--quad-order: must be at least " + std::to_string(min_quadrature_order));
  if (cfg.momenta_mev.empty()) throw UsageError("--momenta-mev: list is empty");
  for (std::size_t i = 0; i < cfg.momenta_mev.size(); ++i) {
    if (!(cfg.momenta_mev[i] >= 0)) throw UsageError("--momenta-mev: momenta must be non-negative");
    if (i > 0 && !(cfg.momenta_mev[i] > cfg.momenta_mev[i - 1]))
      throw UsageError("--momenta-mev: must be strictly ascending without duplicates");
  }
  if (cfg.output_path.empty()) throw UsageError("--out: empty path");
}

/// argv excludes the program name.
inline RunConfig parse_args(const std::vector<std::string>& argv) {
  RunConfig cfg;
  CLI::App app{"Photon-emission decay rate and density-matrix evolution of a Dirac particle", "fdrate"};

  std::string mass, momenta, omega, tmax, mode = "exact";
  long long samples = static_cast<long long>(cfg.samples);
  long long order = static_cast<long long>(cfg.quadrature_order);

  app.add_option("--mass-mev", mass, "Particle mass in MeV (default 0.51)");
  app.add_option("--momenta-mev", momenta, "Comma-separated momenta |p| in MeV (default 0,0.001,0.01)");
  app.add_option("--omega-ev", omega, "Photon energy in eV (default 12.8)");
  app.add_option("--tmax-s", tmax, "End of the time grid in seconds (default 6e-5)");
  app.add_option("--samples", samples, "Number of time samples (default 200)");
  app.add_option("--quad-order", order, "Gauss-Legendre order (default 64)");
  app.add_option("--mode", mode, "Recoil radical: exact or approx (default exact)");
  app.add_option("--out", cfg.output_path, "Output CSV path");
  app.add_flag("--plot-script", cfg.emit_plot_script, "Also write a gnuplot script next to the CSV");
  app.add_flag("--rate-table", cfg.emit_rate_table, "Also write a per-momentum rate table");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (app.count("--mass-mev")) cfg.mass_mev = detail::parse_double("--mass-mev", mass);
  if (app.count("--omega-ev")) cfg.omega_ev = detail::parse_double("--omega-ev", omega);
  if (app.count("--tmax-s")) cfg.t_max_s = detail::parse_double("--tmax-s", tmax);
  if (app.count("--momenta-mev")) cfg.momenta_mev = detail::parse_list("--momenta-mev", momenta);
  if (samples < 2) throw UsageError("--samples: need at least 2");
  if (order < static_cast<long long>(min_quadrature_order))
    throw UsageError("--quad-order: must be at least " + std::to_string(min_quadrature_order));
  cfg.samples = static_cast<std::size_t>(samples);
  cfg.quadrature_order = static_cast<std::size_t>(order);
  if (mode == "exact") {
    cfg.mode = RadicalMode::exact;
  } else if (mode == "approx") {
    cfg.mode = RadicalMode::approx;
  } else {
    throw UsageError("--mode: expected 'exact' or 'approx', got '" + mode + "'");
  }

  validate(cfg);
  return cfg;
}

/// Everything computed for one momentum.
struct PointResult {
  double momentum_mev = 0.0;
  RateBreakdown<quad> closed;
  OracleRate<quad> oracle;
  DecayCurve curve;

  double oracle_rel_diff() const {
    using std::abs;
    return to_double(abs(oracle.gamma_mev - closed.gamma_mev) / closed.gamma_mev);
  }
};

inline PointResult evaluate_point(const RunConfig& cfg, double momentum_mev) {
  PointResult r;
  r.momentum_mev = momentum_mev;
  const EmissionPoint point{cfg.mass_mev, momentum_mev, cfg.omega_ev};
  const auto rule = gauss_legendre<quad>(cfg.quadrature_order);
  r.closed = decay_rate_closed<quad>(point, cfg.mode, rule);
  r.oracle = decay_rate_trace_oracle<quad>(point, rule);
  r.curve = build_curve(r.closed.gamma(), cfg.t_max_s, cfg.samples);
  return r;
}

/// Points run concurrently; results come back in momentum order.
inline std::vector<PointResult> evaluate_all(const RunConfig& cfg) {
  std::vector<std::future<PointResult>> jobs;
  jobs.reserve(cfg.momenta_mev.size());
  for (double p : cfg.momenta_mev) jobs.push_back(std::async(std::launch::async, evaluate_point, std::cref(cfg), p));
  std::vector<PointResult> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

/// Empty when every physics check passed, otherwise one line per failure.
inline std::vector<std::string> physics_failures(const std::vector<PointResult>& results) {
  std::vector<std::string> failures;
  for (const auto& r : results) {
    const std::string tag = "|p|=" + format_g17(r.momentum_mev) + " MeV: ";
    if (!(r.closed.gamma_mev > 0)) failures.push_back(tag + "non-positive gamma " + format_g17(r.closed.gamma()));
    if (!r.closed.converged)
      failures.push_back(tag + "closed form not converged (rel change " +
                         format_g17(to_double(r.closed.convergence_rel_change)) + ")");
    if (!r.oracle.converged)
      failures.push_back(tag + "trace oracle not converged (rel change " +
                         format_g17(to_double(r.oracle.convergence_rel_change)) + ")");
    if (!(r.oracle_rel_diff() <= oracle_agreement_tolerance))
      failures.push_back(tag + "closed gamma " + format_g17(r.closed.gamma()) + " MeV disagrees with oracle gamma " +
                         format_g17(r.oracle.gamma()) + " MeV (rel diff " + format_g17(r.oracle_rel_diff()) + ")");
  }
  return failures;
}

inline std::string column_name(double momentum_mev) { return "rho_p" + format_sci(momentum_mev); }

inline std::string render_csv(const RunConfig& cfg, const std::vector<PointResult>& results) {
  const UnitBridge units;
  std::ostringstream os;
  os << "# fdrate decay curves\n";
  os << "# mass_mev=" << format_g17(cfg.mass_mev) << "\n";
  os << "# momenta_mev=";
  for (std::size_t i = 0; i < cfg.momenta_mev.size(); ++i) os << (i ? "," : "") << format_g17(cfg.momenta_mev[i]);
  os << "\n";
  os << "# omega_ev=" << format_g17(cfg.omega_ev) << "\n";
  os << "# t_max_s=" << format_g17(cfg.t_max_s) << "\n";
  os << "# samples=" << cfg.samples << "\n";
  os << "# quad_order=" << cfg.quadrature_order << "\n";
  os << "# mode=" << to_string(cfg.mode) << "\n";
  os << "# out=" << cfg.output_path << "\n";
  os << "# plot_script=" << (cfg.emit_plot_script ? "true" : "false") << "\n";
  os << "# rate_table=" << (cfg.emit_rate_table ? "true" : "false") << "\n";
  for (const auto& r : results) {
    os << "# gamma momentum_mev=" << format_sci(r.momentum_mev) << " gamma_mev=" << format_g17(r.closed.gamma())
       << " gamma_per_s=" << format_g17(units.gamma_per_second(r.closed.gamma())) << "\n";
  }
  os << "t_seconds";
  for (const auto& r : results) os << "," << column_name(r.momentum_mev);
  os << "\n";
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    os << format_g17(results.front().curve.times_s[i]);
    for (const auto& r : results) os << "," << format_g17(r.curve.rho_diag[i]);
    os << "\n";
  }
  return os.str();
}

inline std::string render_rate_table(const std::vector<PointResult>& results) {
  const UnitBridge units;
  std::ostringstream os;
  os << "momentum_mev,gamma_mev,gamma_per_s,i1,i2,i3,i4,mode\n";
  for (const auto& r : results) {
    const auto& b = r.closed;
    os << format_g17(r.momentum_mev) << "," << format_g17(b.gamma()) << ","
       << format_g17(units.gamma_per_second(b.gamma())) << "," << format_g17(to_double(b.i1)) << ","
       << format_g17(to_double(b.i2)) << "," << format_g17(to_double(b.i3)) << "," << format_g17(to_double(b.i4))
       << "," << to_string(b.mode) << "\n";
  }
  return os.str();
}

/// gnuplot script, one panel per momentum, each zoomed to ~5 e-foldings.
inline std::string render_plot_script(const RunConfig& cfg, const std::vector<PointResult>& results,
                                      const std::string& csv_name, const std::string& png_name) {
  const UnitBridge units;
  std::ostringstream os;
  os << "# gnuplot script generated by fdrate\n";
  os << "set datafile separator ','\n";
  os << "set terminal pngcairo size 800," << 300 * results.size() << "\n";
  os << "set output '" << png_name << "'\n";
  os << "set multiplot layout " << results.size() << ",1\n";
  os << "set xlabel 't (s)'\n";
  os << "set ylabel 'rho_diag'\n";
  os << "set yrange [0:1.05]\n";
  os << "set key autotitle columnhead\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const double window = std::min(cfg.t_max_s, 5.0 * units.e_folding_time_s(r.closed.gamma()));
    os << "set title 'm=" << format_short(cfg.mass_mev) << " MeV, |p|=" << format_short(r.momentum_mev)
       << " MeV, omega=" << format_short(cfg.omega_ev) << " eV'\n";
    os << "set xrange [0:" << format_g17(window) << "]\n";
    os << "plot '" << csv_name << "' using 1:" << i + 2 << " with lines notitle\n";
  }
  os << "unset multiplot\n";
  return os.str();
}

namespace detail {

inline bool write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << contents;
  f.close();
  return static_cast<bool>(f);
}

}  // namespace detail

inline std::filesystem::path rate_table_path(const std::filesystem::path& csv) {
  return csv.parent_path() / (csv.stem().string() + "_rates.csv");
}

inline std::filesystem::path plot_script_path(const std::filesystem::path& csv) {
  return csv.parent_path() / (csv.stem().string() + ".gp");
}

/// Computes all points, checks the physics invariants, writes the files.
/// Nothing is written when a physics check fails.
inline int run(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const UsageError& e) {
    err << "fdrate: " << e.what() << "\n";
    return exit_usage;
  }

  std::vector<PointResult> results;
  try {
    results = evaluate_all(cfg);
  } catch (const std::exception& e) {
    err << "fdrate: evaluation failed: " << e.what() << "\n";
    return exit_physics;
  }

  const auto failures = physics_failures(results);
  if (!failures.empty()) {
    for (const auto& f : failures) err << "fdrate: " << f << "\n";
    return exit_physics;
  }

  const UnitBridge units;
  for (const auto& r : results) {
    log << "|p|=" << format_g17(r.momentum_mev) << " MeV  gamma=" << format_g17(r.closed.gamma())
        << " MeV  oracle=" << format_g17(r.oracle.gamma()) << " MeV  1/e time="
        << format_g17(units.e_folding_time_s(r.closed.gamma())) << " s\n";
  }

  const std::filesystem::path csv_path(cfg.output_path);
  if (!detail::write_file(csv_path, render_csv(cfg, results))) {
    err << "fdrate: cannot write " << csv_path.string() << "\n";
    return exit_io;
  }
  if (cfg.emit_rate_table) {
    const auto path = rate_table_path(csv_path);
    if (!detail::write_file(path, render_rate_table(results))) {
      err << "fdrate: cannot write " << path.string() << "\n";
      return exit_io;
    }
  }
  if (cfg.emit_plot_script) {
    const auto path = plot_script_path(csv_path);
    const auto png = csv_path.stem().string() + ".png";
    if (!detail::write_file(path, render_plot_script(cfg, results, csv_path.filename().string(), png)))
      err << "fdrate: warning: could not write plot script " << path.string() << "\n";
  }
  return exit_ok;
}

/// Full entry point: parse, run, map errors to exit statuses.
inline int main_entry(const std::vector<std::string>& argv, std::ostream& log, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argv);
  } catch (const HelpRequested& h) {
    log << h.what();
    return exit_ok;
  } catch (const UsageError& e) {
    err << "fdrate: " << e.what() << "\n";
    return exit_usage;
  }
  return run(cfg, log, err);
}

}  // namespace fdrate::cli
