#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fdrate/cli.hpp"

using namespace fdrate;
using namespace fdrate::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("fdrate_cli_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<std::vector<double>> data_rows(const std::string& csv, std::string* header = nullptr) {
  std::istringstream in(csv);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;
      if (header) *header = line;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::string usage_message(const std::vector<std::string>& args) {
  try {
    parse_args(args);
  } catch (const UsageError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse_args defaults are the figure parameters", "[cli]") {
  const auto cfg = parse_args({});
  REQUIRE(cfg.mass_mev == 0.51);
  REQUIRE(cfg.momenta_mev == std::vector<double>{0.0, 0.001, 0.01});
  REQUIRE(cfg.omega_ev == 12.8);
  REQUIRE(cfg.t_max_s == 6e-5);
  REQUIRE(cfg.samples == 200);
  REQUIRE(cfg.quadrature_order == 64);
  REQUIRE(cfg.mode == RadicalMode::exact);
  REQUIRE_FALSE(cfg.emit_plot_script);
  REQUIRE_FALSE(cfg.emit_rate_table);
}

TEST_CASE("parse_args reads every flag", "[cli]") {
  const auto cfg = parse_args({"--mass-mev", "0.9", "--momenta-mev", "0.002,0.02", "--omega-ev", "5", "--tmax-s",
                               "1e-3", "--samples", "11", "--quad-order", "32", "--mode", "approx", "--out", "x.csv",
                               "--plot-script", "--rate-table"});
  REQUIRE(cfg.mass_mev == 0.9);
  REQUIRE(cfg.momenta_mev == std::vector<double>{0.002, 0.02});
  REQUIRE(cfg.omega_ev == 5.0);
  REQUIRE(cfg.t_max_s == 1e-3);
  REQUIRE(cfg.samples == 11);
  REQUIRE(cfg.quadrature_order == 32);
  REQUIRE(cfg.mode == RadicalMode::approx);
  REQUIRE(cfg.output_path == "x.csv");
  REQUIRE(cfg.emit_plot_script);
  REQUIRE(cfg.emit_rate_table);
  REQUIRE(parse_args({"--momenta-mev", "0"}).momenta_mev == std::vector<double>{0.0});
}

TEST_CASE("parse_args usage errors name the flag", "[cli]") {
  REQUIRE(usage_message({"--mass-mev", "-1"}).find("--mass-mev") != std::string::npos);
  REQUIRE(usage_message({"--omega-ev", "0"}).find("--omega-ev") != std::string::npos);
  REQUIRE(usage_message({"--mass-mev", "abc"}).find("--mass-mev") != std::string::npos);
  REQUIRE(usage_message({"--bogus", "1"}).find("--bogus") != std::string::npos);
  REQUIRE(usage_message({"--mode", "fast"}).find("--mode") != std::string::npos);
  REQUIRE(usage_message({"--samples", "1"}).find("--samples") != std::string::npos);
  REQUIRE(usage_message({"--quad-order", "4"}).find("--quad-order") != std::string::npos);
  REQUIRE(usage_message({"--momenta-mev", "0.01,0.001"}).find("--momenta-mev") != std::string::npos);
  REQUIRE(usage_message({"--momenta-mev", "0,0"}).find("--momenta-mev") != std::string::npos);
  REQUIRE(usage_message({"--momenta-mev", "-0.1"}).find("--momenta-mev") != std::string::npos);
  REQUIRE(usage_message({"--tmax-s", "0"}).find("--tmax-s") != std::string::npos);

  std::ostringstream log, err;
  REQUIRE(main_entry({"--mass-mev", "-1"}, log, err) == exit_usage);
  const std::string diag = err.str();
  REQUIRE(diag.find("--mass-mev") != std::string::npos);
  REQUIRE(std::count(diag.begin(), diag.end(), '\n') == 1);
}

TEST_CASE("help exits cleanly", "[cli]") {
  std::ostringstream log, err;
  REQUIRE(main_entry({"--help"}, log, err) == exit_ok);
  REQUIRE(log.str().find("--momenta-mev") != std::string::npos);
}

TEST_CASE("default run writes ordered curves", "[cli][run]") {
  TempDir dir;
  RunConfig cfg;
  cfg.output_path = (dir.path / "curves.csv").string();
  cfg.emit_plot_script = true;
  cfg.emit_rate_table = true;
  std::ostringstream log, err;
  REQUIRE(run(cfg, log, err) == exit_ok);
  INFO(err.str());

  const auto csv = slurp(cfg.output_path);
  std::string header;
  const auto rows = data_rows(csv, &header);
  REQUIRE(header == "t_seconds,rho_p0.000000e+00,rho_p1.000000e-03,rho_p1.000000e-02");
  REQUIRE(rows.size() == 200);
  REQUIRE(rows.front() == std::vector<double>{0, 1, 1, 1});
  REQUIRE(rows.back()[0] == 6e-5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t c = 1; c <= 3; ++c) REQUIRE(rows[i][c] <= rows[i - 1][c]);
    REQUIRE(rows[i][2] <= rows[i][1]);
    REQUIRE(rows[i][3] <= rows[i][2]);
    REQUIRE(rows[i][1] < 1.0);
  }
  REQUIRE(csv.find("# mass_mev=0.51000000000000001\n") != std::string::npos);
  REQUIRE(csv.find("# gamma momentum_mev=0.000000e+00 gamma_mev=2.9418057374") != std::string::npos);

  const auto table = slurp(rate_table_path(cfg.output_path));
  REQUIRE(table.rfind("momentum_mev,gamma_mev,gamma_per_s,i1,i2,i3,i4,mode\n", 0) == 0);
  REQUIRE(std::count(table.begin(), table.end(), '\n') == 4);
  REQUIRE(table.find(",exact\n") != std::string::npos);

  const auto plot = slurp(plot_script_path(cfg.output_path));
  REQUIRE(plot.find("'curves.csv'") != std::string::npos);
  REQUIRE(plot.find("multiplot layout 3,1") != std::string::npos);
}

TEST_CASE("run output is byte deterministic", "[cli][run]") {
  TempDir dir;
  RunConfig cfg;
  cfg.momenta_mev = {0.0, 0.005};
  cfg.samples = 25;
  cfg.output_path = (dir.path / "a.csv").string();
  std::ostringstream log, err;
  REQUIRE(run(cfg, log, err) == exit_ok);
  const auto first = slurp(cfg.output_path);
  REQUIRE(run(cfg, log, err) == exit_ok);
  REQUIRE(slurp(cfg.output_path) == first);
}

TEST_CASE("two-sample short run", "[cli][run]") {
  TempDir dir;
  const auto out = (dir.path / "short.csv").string();
  std::ostringstream log, err;
  REQUIRE(main_entry({"--samples", "2", "--tmax-s", "1e-9", "--out", out}, log, err) == exit_ok);
  const auto rows = data_rows(slurp(out));
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[0][1] == 1.0);
  for (std::size_t c = 1; c < rows[1].size(); ++c) REQUIRE(rows[1][c] < 1.0);
}

TEST_CASE("approx mode run", "[cli][run]") {
  TempDir dir;
  const auto out = (dir.path / "approx.csv").string();
  std::ostringstream log, err;
  REQUIRE(main_entry({"--mode", "approx", "--samples", "5", "--out", out, "--rate-table"}, log, err) == exit_ok);
  REQUIRE(slurp(rate_table_path(out)).find(",approx\n") != std::string::npos);
}

TEST_CASE("unwritable output is an I/O failure", "[cli][run]") {
  TempDir dir;
  RunConfig cfg;
  cfg.momenta_mev = {0.0};
  cfg.samples = 3;
  cfg.output_path = (dir.path / "missing" / "dir" / "out.csv").string();
  std::ostringstream log, err;
  REQUIRE(run(cfg, log, err) == exit_io);
  REQUIRE_FALSE(err.str().empty());
}

TEST_CASE("physics failures are reported with both values", "[cli]") {
  RunConfig cfg;
  cfg.momenta_mev = {0.0};
  auto results = evaluate_all(cfg);
  REQUIRE(physics_failures(results).empty());

  results[0].oracle.gamma_mev *= quad(1.01);
  const auto failures = physics_failures(results);
  REQUIRE(failures.size() == 1);
  REQUIRE(failures[0].find("disagrees") != std::string::npos);
  REQUIRE(failures[0].find(format_g17(results[0].closed.gamma())) != std::string::npos);
  REQUIRE(failures[0].find(format_g17(results[0].oracle.gamma())) != std::string::npos);

  results[0].closed.converged = false;
  REQUIRE(physics_failures(results).size() == 2);
}
