// tune: lead-lag controller tuning experiments.
//
//   tune --config <path> [--seed N] [--out DIR]
//   tune verify-tables [--plant <path>]
//   tune eig [--plant <path>] [--kc K --t1 T1 --t2 T2]
//
// Exit codes: 0 success, 1 config error, 2 numerical failure,
// 3 verification mismatch.

#include <fmt/format.h>

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "boatune/control.hpp"
#include "boatune/harness.hpp"
#include "boatune/numerics.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kNumericalFailure = 2;
constexpr int kVerificationMismatch = 3;

using boatune::control::StateSpacePlant;

StateSpacePlant plant_from(const std::string& path) {
  return path.empty() ? boatune::control::paper_plant() : boatune::control::load_plant(path);
}

void print_spectrum(const boatune::numerics::Spectrum& spectrum) {
  for (const auto& z : spectrum) {
    fmt::print("  {:>12.6f} {:+12.6f}i   zeta = {:+.6f}\n", z.real(), z.imag(),
               boatune::control::damping_ratio(z));
  }
  fmt::print("zeta_min = {:.6f}\n", boatune::control::min_damping_ratio(spectrum));
}

int run_experiment_command(const std::string& config_path, std::optional<std::uint64_t> seed,
                           const std::string& out) {
  auto config = boatune::harness::load_experiment_config(config_path);
  if (seed) config.seeds = {*seed};
  if (!out.empty()) config.output_dir = out;
  const auto result = boatune::harness::run_experiment(config);
  fmt::print("{}", result.report.to_table());
  fmt::print("\nwrote {} convergence files and report.json/report.txt to {}\n",
             result.runs.size(), config.output_dir.string());
  return kOk;
}

int verify_tables_command(const std::string& plant_path) {
  const auto summary = boatune::harness::verify_paper_tables(plant_from(plant_path));
  fmt::print("{}", summary.to_text());
  const bool ok = summary.all_passed();
  fmt::print("{}\n", ok ? "all table checks passed" : "table verification mismatch");
  return ok ? kOk : kVerificationMismatch;
}

int eig_command(const std::string& plant_path, std::optional<double> kc, std::optional<double> t1,
                std::optional<double> t2) {
  const auto plant = plant_from(plant_path);
  const int given = kc.has_value() + t1.has_value() + t2.has_value();
  if (given == 0) {
    fmt::print("open-loop eigenvalues\n");
    print_spectrum(boatune::numerics::eigenvalues(plant.a));
    return kOk;
  }
  if (given != 3) {
    std::cerr << "eig: --kc, --t1 and --t2 must be given together\n";
    return kConfigError;
  }
  const boatune::control::LeadLagParams params{*kc, *t1, *t2};
  fmt::print("closed-loop eigenvalues for Kc={} T1={} T2={}\n", *kc, *t1, *t2);
  print_spectrum(
      boatune::numerics::eigenvalues(boatune::control::assemble_closed_loop(plant, params)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lead-lag controller tuning with BOA, GA and DE"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  app.add_option("--config", config_path, "Experiment config (JSON)");
  app.add_option("--seed", seed, "Run a single seed instead of the configured list");
  app.add_option("--out", out, "Override the output directory");

  auto* verify = app.add_subcommand("verify-tables", "Recompute the published parameter tables");
  std::string verify_plant;
  verify->add_option("--plant", verify_plant, "Plant JSON (default: built-in plant)");

  auto* eig = app.add_subcommand("eig", "Open- or closed-loop spectrum and zeta_min");
  std::string eig_plant;
  std::optional<double> kc;
  std::optional<double> t1;
  std::optional<double> t2;
  eig->add_option("--plant", eig_plant, "Plant JSON (default: built-in plant)");
  eig->add_option("--kc", kc, "Controller gain");
  eig->add_option("--t1", t1, "Lead time constant [s]");
  eig->add_option("--t2", t2, "Lag time constant [s]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*verify) return verify_tables_command(verify_plant);
    if (*eig) return eig_command(eig_plant, kc, t1, t2);
    if (config_path.empty()) {
      std::cerr << app.help();
      return kConfigError;
    }
    return run_experiment_command(config_path, seed, out);
  } catch (const boatune::harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const boatune::control::InvalidPlant& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const boatune::control::InvalidParams& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}
