#include "boatune/harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace boatune::harness {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out, const std::string& where) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("bad value for '") + key + "' in " + where);
  }
}

void read_count(const json& obj, const char* key, std::size_t& out, const std::string& where) {
  if (!obj.contains(key)) return;
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(std::string("'") + key + "' in " + where + " must be a non-negative integer");
  }
  out = v.get<std::size_t>();
}

std::filesystem::path resolve(const std::filesystem::path& p, const std::filesystem::path& base) {
  return p.is_absolute() || base.empty() ? p : base / p;
}

optim::BoaConfig parse_boa(const json& obj) {
  const std::string where = "algorithms.boa";
  reject_unknown_keys(obj, {"sensory_modality_c", "power_exponent_a", "switch_probability_p",
                            "population_size", "generations"},
                      where);
  optim::BoaConfig c;
  read(obj, "sensory_modality_c", c.sensory_modality_c, where);
  read(obj, "power_exponent_a", c.power_exponent_a, where);
  read(obj, "switch_probability_p", c.switch_probability_p, where);
  read_count(obj, "population_size", c.population_size, where);
  read_count(obj, "generations", c.generations, where);
  return c;
}

optim::GaConfig parse_ga(const json& obj) {
  const std::string where = "algorithms.ga";
  reject_unknown_keys(obj, {"mutation_probability", "crossover_probability",
                            "crossover_coefficient", "population_size", "generations"},
                      where);
  optim::GaConfig c;
  read(obj, "mutation_probability", c.mutation_probability, where);
  read(obj, "crossover_probability", c.crossover_probability, where);
  read(obj, "crossover_coefficient", c.crossover_coefficient, where);
  read_count(obj, "population_size", c.population_size, where);
  read_count(obj, "generations", c.generations, where);
  return c;
}

optim::DeConfig parse_de(const json& obj) {
  const std::string where = "algorithms.de";
  reject_unknown_keys(
      obj, {"crossover_rate", "differential_weight", "population_size", "generations"}, where);
  optim::DeConfig c;
  read(obj, "crossover_rate", c.crossover_rate, where);
  read(obj, "differential_weight", c.differential_weight, where);
  read_count(obj, "population_size", c.population_size, where);
  read_count(obj, "generations", c.generations, where);
  return c;
}

struct Job {
  std::string algorithm;
  std::uint64_t seed;
};

std::vector<Job> jobs_for(const ExperimentConfig& config) {
  std::vector<Job> jobs;
  const std::pair<const char*, bool> enabled[] = {
      {"boa", config.boa.has_value()}, {"ga", config.ga.has_value()}, {"de", config.de.has_value()}};
  for (const auto& [name, on] : enabled) {
    if (!on) continue;
    for (auto seed : config.seeds) jobs.push_back({name, seed});
  }
  return jobs;
}

optim::RunRecord run_job(const Job& job, const ExperimentConfig& config,
                         const control::StateSpacePlant& plant) {
  const optim::Objective objective = [&plant](std::span<const double> x) {
    return control::objective(plant, control::LeadLagParams::from_vector(x));
  };
  if (job.algorithm == "boa") {
    auto c = *config.boa;
    c.seed = job.seed;
    return optim::run_boa(objective, config.bounds, c);
  }
  if (job.algorithm == "ga") {
    auto c = *config.ga;
    c.seed = job.seed;
    return optim::run_ga(objective, config.bounds, c);
  }
  auto c = *config.de;
  c.seed = job.seed;
  return optim::run_de(objective, config.bounds, c);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << contents;
  if (!out) throw ConfigError("failed writing " + path.string());
}

ordered_json complex_json(const numerics::Complex& z) {
  ordered_json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

}  // namespace

RunFailure::RunFailure(std::string algorithm, std::uint64_t seed, const std::string& cause)
    : std::runtime_error(fmt::format("{} run with seed {} failed: {}", algorithm, seed, cause)),
      algorithm_(std::move(algorithm)),
      seed_(seed) {}

void ExperimentConfig::validate() const {
  if (!boa && !ga && !de) throw ConfigError("experiment needs at least one algorithm");
  if (seeds.empty()) throw ConfigError("experiment needs at least one seed");
  if (bounds.dimension() != 3) throw ConfigError("lead-lag bounds must have 3 dimensions");
  if (bounds.lower(2) <= 0.0) throw ConfigError("t2 lower bound must be positive");
  try {
    if (boa) boa->validate();
    if (ga) ga->validate();
    if (de) de->validate();
  } catch (const optim::InvalidConfig& e) {
    throw ConfigError(e.what());
  }
}

ExperimentConfig parse_experiment_config(const std::string& text,
                                         const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config does not parse: ") + e.what());
  }
  reject_unknown_keys(doc, {"plant_file", "bounds", "algorithms", "seeds", "output_dir"},
                      "config");

  ExperimentConfig config;
  std::string plant_file;
  std::string output_dir;
  read(doc, "plant_file", plant_file, "config");
  read(doc, "output_dir", output_dir, "config");
  if (plant_file.empty()) throw ConfigError("config needs 'plant_file'");
  if (output_dir.empty()) throw ConfigError("config needs 'output_dir'");
  config.plant_file = resolve(plant_file, base_dir);
  config.output_dir = resolve(output_dir, base_dir);

  if (doc.contains("bounds")) {
    const auto& b = doc["bounds"];
    reject_unknown_keys(b, {"lower", "upper", "names"}, "bounds");
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<std::string> names = {"kc", "t1", "t2"};
    read(b, "lower", lower, "bounds");
    read(b, "upper", upper, "bounds");
    read(b, "names", names, "bounds");
    try {
      config.bounds = SearchSpace(lower, upper, names);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("bounds: ") + e.what());
    }
  }

  if (!doc.contains("algorithms")) throw ConfigError("config needs 'algorithms'");
  const auto& algs = doc["algorithms"];
  reject_unknown_keys(algs, {"boa", "ga", "de"}, "algorithms");
  if (algs.contains("boa")) config.boa = parse_boa(algs["boa"]);
  if (algs.contains("ga")) config.ga = parse_ga(algs["ga"]);
  if (algs.contains("de")) config.de = parse_de(algs["de"]);

  if (doc.contains("seeds")) {
    const auto& s = doc["seeds"];
    if (!s.is_array()) throw ConfigError("'seeds' must be an array");
    for (const auto& v : s) {
      if (!v.is_number_unsigned()) throw ConfigError("seeds must be unsigned integers");
      config.seeds.push_back(v.get<std::uint64_t>());
    }
  }
  config.validate();
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str(), path.parent_path());
}

ExperimentConfig paper_experiment_config() {
  ExperimentConfig config;
  config.boa = optim::BoaConfig{};
  config.ga = optim::GaConfig{};
  config.de = optim::DeConfig{};
  for (std::uint64_t s = 1; s <= 20; ++s) config.seeds.push_back(s);
  return config;
}

std::vector<optim::RunRecord> run_all(const ExperimentConfig& config,
                                      const control::StateSpacePlant& plant) {
  config.validate();
  const auto jobs = jobs_for(config);
  std::vector<optim::RunRecord> records(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        records[i] = run_job(jobs[i], config, plant);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, jobs.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw RunFailure(jobs[i].algorithm, jobs[i].seed, e.what());
    }
  }
  return records;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

std::size_t generations_to_within(std::span<const double> trace, double fraction) {
  if (trace.empty()) return 0;
  const double final_value = trace.back();
  const double slack = fraction * std::abs(final_value);
  for (std::size_t g = 0; g < trace.size(); ++g) {
    if (std::abs(final_value - trace[g]) <= slack) return g;
  }
  return trace.size() - 1;
}

ComparisonReport summarize(std::span<const optim::RunRecord> runs,
                           const control::StateSpacePlant& plant) {
  ComparisonReport report;
  for (const char* name : {"boa", "ga", "de"}) {
    std::vector<const optim::RunRecord*> mine;
    for (const auto& r : runs) {
      if (r.algorithm == name) mine.push_back(&r);
    }
    if (mine.empty()) continue;

    AlgorithmSummary s;
    s.algorithm = name;
    s.evaluations_per_run = mine.front()->evaluation_count;
    const optim::RunRecord* best = mine.front();
    const optim::RunRecord* worst = mine.front();
    for (const auto* r : mine) {
      s.seeds.push_back(r->seed);
      s.final_objectives.push_back(r->final_best_objective);
      s.generations_to_within_1pct.push_back(
          generations_to_within(r->best_objective_per_generation, 0.01));
      if (r->final_best_objective > best->final_best_objective) best = r;
      if (r->final_best_objective < worst->final_best_objective) worst = r;
    }
    s.best_final = best->final_best_objective;
    s.worst_final = worst->final_best_objective;
    s.median_final = median(s.final_objectives);
    s.best_seed = best->seed;
    s.best_params = control::LeadLagParams::from_vector(best->final_best_position);
    s.best_spectrum = numerics::eigenvalues(control::assemble_closed_loop(plant, s.best_params));
    s.best_zeta_min = control::min_damping_ratio(s.best_spectrum);

    const std::size_t length = mine.front()->best_objective_per_generation.size();
    s.median_trace.reserve(length);
    for (std::size_t g = 0; g < length; ++g) {
      std::vector<double> column;
      for (const auto* r : mine) column.push_back(r->best_objective_per_generation.at(g));
      s.median_trace.push_back(median(std::move(column)));
    }
    report.algorithms.push_back(std::move(s));
  }
  return report;
}

const AlgorithmSummary* ComparisonReport::find(const std::string& algorithm) const {
  for (const auto& a : algorithms) {
    if (a.algorithm == algorithm) return &a;
  }
  return nullptr;
}

std::string ComparisonReport::to_json() const {
  ordered_json doc;
  ordered_json algs = ordered_json::array();
  for (const auto& a : algorithms) {
    ordered_json j;
    j["algorithm"] = a.algorithm;
    j["seeds"] = a.seeds;
    j["final_objectives"] = a.final_objectives;
    j["best_final"] = a.best_final;
    j["median_final"] = a.median_final;
    j["worst_final"] = a.worst_final;
    j["best_seed"] = a.best_seed;
    j["best_params"] = {{"kc", a.best_params.kc}, {"t1", a.best_params.t1},
                        {"t2", a.best_params.t2}};
    ordered_json spectrum = ordered_json::array();
    for (const auto& z : a.best_spectrum) spectrum.push_back(complex_json(z));
    j["best_spectrum"] = spectrum;
    j["best_zeta_min"] = a.best_zeta_min;
    j["evaluations_per_run"] = a.evaluations_per_run;
    j["generations_to_within_1pct"] = a.generations_to_within_1pct;
    j["median_trace"] = a.median_trace;
    algs.push_back(j);
  }
  doc["algorithms"] = algs;
  return doc.dump(2) + "\n";
}

std::string ComparisonReport::to_table() const {
  std::string out;
  out += "Final objective (zeta_min) over seeds\n";
  out += fmt::format("{:<6} {:>10} {:>10} {:>10} {:>6} {:>10}\n", "alg", "best", "median",
                     "worst", "runs", "gens-1%");
  for (const auto& a : algorithms) {
    std::vector<double> gens(a.generations_to_within_1pct.begin(),
                             a.generations_to_within_1pct.end());
    out += fmt::format("{:<6} {:>10.4f} {:>10.4f} {:>10.4f} {:>6} {:>10.1f}\n", a.algorithm,
                       a.best_final, a.median_final, a.worst_final, a.final_objectives.size(),
                       median(gens));
  }

  out += "\nBest controller parameters\n";
  out += fmt::format("{:<6} {:>10} {:>10} {:>10} {:>6}\n", "alg", "Kc", "T1", "T2", "seed");
  for (const auto& a : algorithms) {
    out += fmt::format("{:<6} {:>10.4f} {:>10.4f} {:>10.4f} {:>6}\n", a.algorithm, a.best_params.kc,
                       a.best_params.t1, a.best_params.t2, a.best_seed);
  }

  out += "\nClosed-loop eigenvalues at the best parameters\n";
  for (const auto& a : algorithms) {
    out += fmt::format("{:<6}", a.algorithm);
    for (const auto& z : a.best_spectrum) out += fmt::format("  {:.4f}{:+.4f}i", z.real(), z.imag());
    out += fmt::format("\n{:<6}  zeta_min = {:.4f}\n", "", a.best_zeta_min);
  }
  return out;
}

std::string csv_file_name(const optim::RunRecord& run) {
  return fmt::format("{}_seed{}.csv", run.algorithm, run.seed);
}

std::string convergence_csv(const optim::RunRecord& run) {
  std::string out = "generation,best_objective\n";
  for (std::size_t g = 0; g < run.best_objective_per_generation.size(); ++g) {
    out += fmt::format("{},{:.17g}\n", g, run.best_objective_per_generation[g]);
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  control::StateSpacePlant plant;
  try {
    plant = control::load_plant(config.plant_file);
  } catch (const control::InvalidPlant& e) {
    throw ConfigError(e.what());
  }

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + config.output_dir.string());

  ExperimentResult result;
  result.runs = run_all(config, plant);
  result.report = summarize(result.runs, plant);

  for (const auto& run : result.runs) {
    write_file(config.output_dir / csv_file_name(run), convergence_csv(run));
  }
  write_file(config.output_dir / "report.json", result.report.to_json());
  write_file(config.output_dir / "report.txt", result.report.to_table());
  return result;
}

}  // namespace boatune::harness
