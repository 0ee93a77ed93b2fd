// curvchain: run one configured experiment, or the acceptance checks.
//
//   curvchain energy --config configs/minkowski_energy.cfg --out energies.csv --jobs 4
//   curvchain fit --config configs/fit_flat.cfg
//   curvchain check
//
// Exit status: 0 success, 1 numerical or I/O failure (or a failed check),
// 2 configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "curvchain/acceptance.hpp"
#include "curvchain/config.hpp"
#include "curvchain/errors.hpp"
#include "curvchain/experiment.hpp"

namespace {

int run_checks(int jobs) {
  int failed = 0;
  curvchain::acceptance::run_all(jobs, [&](const curvchain::acceptance::Outcome& o) {
    std::cout << curvchain::acceptance::format_line(o) << std::endl;
    if (!o.passed) ++failed;
  });
  std::cout << (failed ? std::to_string(failed) + " check(s) failed" : std::string("all checks passed"))
            << std::endl;
  return failed ? 1 : 0;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw curvchain::config_error("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free fermions on curved optical metrics: sweeps, fits and checks"};
  app.require_subcommand(0, 1);

  int jobs = 1;
  bool check_flag = false;
  app.add_flag("--check", check_flag, "run the acceptance checks");
  app.add_option("--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  const std::map<std::string, curvchain::ExperimentKind> commands = {
      {"spectrum", curvchain::ExperimentKind::Spectrum},
      {"energy", curvchain::ExperimentKind::EnergySweep},
      {"entropy", curvchain::ExperimentKind::EntropyProfile},
      {"potential", curvchain::ExperimentKind::PotentialScan},
      {"force", curvchain::ExperimentKind::ForceSweep},
      {"fit", curvchain::ExperimentKind::Fit}};

  std::string config_path, out_path, variant;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, kind] : commands) {
    auto* sub = app.add_subcommand(name, "run the " + std::string(curvchain::to_string(kind)) + " experiment");
    sub->add_option("--config", config_path, "config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "output path (overrides the config)");
    sub->add_option("--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    if (name == "force") {
      sub->add_option("--variant", variant, "prediction form for the summary")
          ->check(CLI::IsMember({"eq19", "eq20"}));
    }
    subs[name] = sub;
  }
  auto* check = app.add_subcommand("check", "run the acceptance checks");
  check->add_option("--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  if (check_flag || check->parsed()) return run_checks(jobs);

  std::optional<curvchain::ExperimentKind> kind;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) kind = commands.at(name);
  }
  if (!kind) {
    std::cerr << app.help();
    return 2;
  }

  curvchain::ExperimentConfig cfg;
  try {
    cfg = curvchain::parse_config(slurp(config_path), kind);
    if (!out_path.empty()) cfg.output_path = out_path;
    if (variant == "eq19") cfg.variant = curvchain::ForceForm::Smooth;
    if (variant == "eq20") cfg.variant = curvchain::ForceForm::WeakDeformation;
    if (cfg.output_path.empty()) throw curvchain::config_error("output must be set (config key or --out)", 0, 0, "output");
  } catch (const curvchain::config_error& err) {
    std::cerr << config_path << ": " << err.what() << '\n';
    return 2;
  }

  try {
    const auto summary = curvchain::run_experiment(cfg, {jobs});
    for (const auto& f : summary.files) std::cout << "wrote " << f << '\n';
    for (const auto& n : summary.notes) std::cout << n << '\n';
  } catch (const curvchain::config_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
