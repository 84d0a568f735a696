#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "comprestree/verify.hpp"

namespace ct = comprestree;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else ct::io::write_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compression trees for correlated sensor data gathering"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a network file");
  gen->require_subcommand(1);
  std::string out_path = "-";
  int rows = 10, cols = 10;
  double spacing = 1.0, grid_radius = 1.0;
  std::string corner = "lower_left";
  auto* grid = gen->add_subcommand("grid", "lattice; the bs is a corner node");
  grid->add_option("--rows", rows)->check(CLI::PositiveNumber);
  grid->add_option("--cols", cols)->check(CLI::PositiveNumber);
  grid->add_option("--spacing", spacing)->check(CLI::PositiveNumber);
  grid->add_option("--radius", grid_radius, "link radius")->check(CLI::PositiveNumber);
  grid->add_option("--corner", corner)->check(CLI::IsMember({"lower_left", "lower_right", "upper_left", "upper_right"}));
  grid->add_option("-o,--out", out_path);
  int count = 100;
  double width = 200.0, height = 200.0, radius = 30.0;
  std::uint64_t seed = 1;
  auto* random = gen->add_subcommand("random", "uniform random placement, unit-disk links");
  random->set_help_flag("--help", "print this help");  // frees -h/--h for the height
  random->add_option("--n", count)->check(CLI::PositiveNumber);
  random->add_option("--w", width)->check(CLI::PositiveNumber);
  random->add_option("--h", height)->check(CLI::PositiveNumber);
  random->add_option("--radius", radius)->check(CLI::PositiveNumber);
  random->add_option("--seed", seed);
  random->add_option("-o,--out", out_path);

  // run
  auto* run = app.add_subcommand("run", "run methods over seeds and sweep values");
  std::string config_path, csv_path, json_path;
  double rx_cost = -1.0;
  bool timing = false;
  run->add_option("--config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--csv", csv_path, "CSV output path ('-' for stdout)");
  run->add_option("--json", json_path, "JSON output path");
  run->add_option("--rx-cost", rx_cost, "energy per received bit")->check(CLI::NonNegativeNumber);
  run->add_flag("--timing", timing, "record wall-clock time per method");

  // verify
  auto* verify = app.add_subcommand("verify", "check shipped fixtures against expected costs and oracles");
  std::string fixtures_dir = "fixtures";
  std::size_t max_n = 8;
  verify->add_option("--fixtures", fixtures_dir)->check(CLI::ExistingDirectory);
  verify->add_option("--max-n", max_n, "largest sensor count handed to the exhaustive oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*grid) {
      ct::Corner c = corner == "lower_left"    ? ct::Corner::LowerLeft
                     : corner == "lower_right" ? ct::Corner::LowerRight
                     : corner == "upper_left"  ? ct::Corner::UpperLeft
                                               : ct::Corner::UpperRight;
      emit(out_path, ct::io::to_json(ct::gen_grid(rows, cols, spacing, grid_radius, c)).dump(2) + "\n");
      return kOk;
    }
    if (*random) {
      emit(out_path, ct::io::to_json(ct::gen_random(count, width, height, radius, seed)).dump(2) + "\n");
      return kOk;
    }
    if (*run) {
      ct::ExperimentConfig cfg;
      try {
        cfg = ct::config_from_json(ct::io::read_file(config_path));
      } catch (const ct::Error& e) {
        std::cerr << "config: " << e.what() << "\n";
        return kUsage;
      }
      if (!csv_path.empty()) cfg.csv_path = csv_path;
      if (!json_path.empty()) cfg.json_path = json_path;
      if (rx_cost >= 0.0) cfg.rx_cost = rx_cost;
      cfg.timing = cfg.timing || timing;
      auto rows_out = ct::run_experiment(cfg);
      for (const auto& r : rows_out)
        if (!r.error.empty()) std::cerr << r.method << " seed " << r.seed << ": " << r.error << "\n";
      if (cfg.csv_path.empty() && cfg.json_path.empty()) cfg.csv_path = "-";
      if (!cfg.csv_path.empty()) emit(cfg.csv_path, ct::to_csv(rows_out));
      if (!cfg.json_path.empty()) emit(cfg.json_path, ct::rows_to_json(rows_out).dump(2) + "\n");
      return kOk;
    }
    if (*verify) {
      auto rep = ct::verify_directory(fixtures_dir, max_n);
      for (const auto& l : rep.lines)
        std::cout << (l.ok ? "PASS " : "FAIL ") << l.fixture << ": " << l.name << " (" << l.detail << ")\n";
      std::cout << "worst greedy/opt ratio " << ct::format_number(rep.worst_ratio);
      if (rep.min_slack < ct::kInf) std::cout << ", min bound slack " << ct::format_number(rep.min_slack);
      std::cout << "\n" << rep.failures() << " failure(s)\n";
      return rep.failures() == 0 ? kOk : kVerifyFailed;
    }
  } catch (const ct::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
