// Copyright 2026 The vqc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: compile (structure search), sweep (gate-count scan),
// oracle (exhaustive minimal-length certification) and render (ASCII
// diagrams).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vqc/errors.hpp"
#include "vqc/oracle.hpp"
#include "vqc/render.hpp"
#include "vqc/search.hpp"
#include "vqc/serialize.hpp"
#include "vqc/version.hpp"

namespace fs = std::filesystem;
using namespace vqc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitOutDir = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutDirError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TargetSpec resolve_target(const std::string& value, std::uint64_t layered_seed) {
  TargetSpec spec;
  spec.layered_seed = layered_seed;
  if (fs::exists(value)) {
    spec.file = value;
  } else {
    spec.name = value;
    target_qubits(spec);  // throws UnknownTargetError for bad names
  }
  return spec;
}

int target_width(const TargetSpec& spec) {
  if (const auto n = target_qubits(spec)) return *n;
  return qubit_count(target_unitary(spec));
}

Alphabet resolve_alphabet(const std::string& value) {
  if (value == "ibm2q") {
    return {GateKind::RX_HALF_PI, GateKind::RZ, GateKind::CNOT};
  }
  if (value == "rzry") {
    return {GateKind::RZ, GateKind::RY, GateKind::CNOT};
  }
  if (value == "rz_only") {
    return {GateKind::RZ};
  }
  if (value == "blocks") {
    return {GateKind::RZ_BLOCK,  GateKind::RY_BLOCK, GateKind::CNOT_ALL,
            GateKind::CNOT_EVEN, GateKind::CNOT_ODD,
            GateKind::CNOT_EVEN_BIDIRECT};
  }
  if (fs::exists(value)) return load_alphabet(value);
  throw ConfigError("unknown alphabet preset or file: " + value);
}

Topology resolve_topology(const std::string& value, int n) {
  if (value == "full") return full_topology(n);
  if (value == "ibmq_ourense") return ibmq_ourense_topology(n);
  if (fs::exists(value)) {
    Topology t = load_topology(value);
    if (t.n != n) {
      throw ConfigError("topology width does not match the target");
    }
    return t;
  }
  throw ConfigError("unknown topology preset or file: " + value);
}

EpsilonSchedule resolve_schedule(const std::string& value, double scale) {
  EpsilonSchedule s;
  if (value == "table1") {
    s = schedule_table1();
  } else if (value == "table3") {
    s = schedule_table3();
  } else if (fs::exists(value)) {
    s = load_schedule(value);
  } else {
    throw ConfigError("unknown schedule preset or file: " + value);
  }
  return scale == 1.0 ? s : scaled_schedule(s, scale);
}

void ensure_out_dir(const std::string& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out)) {
    throw OutDirError("cannot create output directory " + out);
  }
  const std::string probe = out + "/.write_probe";
  std::ofstream test(probe);
  if (!test) {
    throw OutDirError("output directory " + out + " is not writable");
  }
  test.close();
  fs::remove(probe, ec);
}

// Flags shared by compile and sweep. Defaults are the small-problem
// hyperparameters; pass --alpha 0.2 --gamma 1 for the large-problem preset.
struct RunFlags {
  std::string target;
  std::string alphabet = "ibm2q";
  std::string topology = "full";
  int max_gates = 5;
  double alpha = 0.02;
  double gamma = 0.9;
  int batch_size = 128;
  double lambda = 0.0;
  std::string schedule = "table1";
  double schedule_scale = 1.0;
  std::string cost = "auto";
  std::uint64_t seed = 0;
  std::uint64_t target_seed = 1234;
  int q_init_samples = 100;
  bool uniform_shaping = false;
  double step_size = 0.1;
  int max_iterations = 500;
  double opt_tolerance = 1e-8;
  int restarts = 4;
  std::string out = "out";
};

void add_run_flags(CLI::App* cmd, RunFlags& flags, bool positional_target) {
  if (positional_target) {
    cmd->add_option("target", flags.target, "target name or matrix file")
        ->required();
  } else {
    cmd->add_option("--target", flags.target, "target name or matrix file")
        ->required();
  }
  cmd->add_option("--alphabet", flags.alphabet,
                  "ibm2q | rzry | rz_only | blocks | file");
  cmd->add_option("--topology", flags.topology,
                  "full | ibmq_ourense | file");
  cmd->add_option("--max-gates", flags.max_gates, "episode length L");
  cmd->add_option("--alpha", flags.alpha, "learning rate");
  cmd->add_option("--gamma", flags.gamma, "discount factor");
  cmd->add_option("--batch-size", flags.batch_size, "replay minibatch K");
  cmd->add_option("--lambda", flags.lambda, "CNOT penalty weight");
  cmd->add_option("--schedule", flags.schedule, "table1 | table3 | file");
  cmd->add_option("--schedule-scale", flags.schedule_scale,
                  "multiply every stage's episode count");
  cmd->add_option("--cost", flags.cost, "global | local | auto");
  cmd->add_option("--seed", flags.seed, "search seed");
  cmd->add_option("--target-seed", flags.target_seed,
                  "seed for layered targets");
  cmd->add_option("--q-init-samples", flags.q_init_samples,
                  "random circuits used to initialise q0");
  cmd->add_flag("--uniform-shaping", flags.uniform_shaping,
                "terminal step also receives r_T / L");
  cmd->add_option("--step-size", flags.step_size, "gradient descent step");
  cmd->add_option("--max-iterations", flags.max_iterations,
                  "descent iterations per restart");
  cmd->add_option("--opt-tolerance", flags.opt_tolerance,
                  "stop when improvement falls below this");
  cmd->add_option("--restarts", flags.restarts, "descent restarts");
  cmd->add_option("--out", flags.out, "output directory");
}

SearchConfig build_config(const RunFlags& flags) {
  SearchConfig config;
  config.target = resolve_target(flags.target, flags.target_seed);
  const int n = target_width(config.target);
  config.alphabet = resolve_alphabet(flags.alphabet);
  config.topology = resolve_topology(flags.topology, n);
  config.max_gates = flags.max_gates;
  config.alpha = flags.alpha;
  config.gamma = flags.gamma;
  config.batch_size = flags.batch_size;
  config.lambda = flags.lambda;
  config.schedule = resolve_schedule(flags.schedule, flags.schedule_scale);
  if (flags.cost == "global") {
    config.cost_kind = CostKind::GLOBAL;
  } else if (flags.cost == "local") {
    config.cost_kind = CostKind::LOCAL;
  } else if (flags.cost == "auto") {
    config.cost_kind = default_cost_kind(n);
  } else {
    throw ConfigError("unknown cost kind: " + flags.cost);
  }
  config.seed = flags.seed;
  config.q_init_samples = flags.q_init_samples;
  config.uniform_shaping = flags.uniform_shaping;
  config.optimizer.step_size = flags.step_size;
  config.optimizer.max_iterations = flags.max_iterations;
  config.optimizer.tolerance = flags.opt_tolerance;
  config.optimizer.restarts = flags.restarts;
  config.validate();
  return config;
}

int run_compile_config(const SearchConfig& config, const std::string& out) {
  ensure_out_dir(out);
  const auto t0 = std::chrono::steady_clock::now();
  const SearchResult result = run_search(config);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  save_circuit(result.best_circuit, out + "/circuit.json");
  save_replay(result.replay, out + "/replay.jsonl");
  save_qtable(result.q_snapshot, out + "/qtable.json");
  std::ofstream manifest(out + "/manifest.json");
  manifest << manifest_to_json(config, result, wall);

  std::printf("best cost %.6e  reward %.6f  gates %d  cnots %d  (%.1fs)\n",
              result.best_cost, result.best_reward,
              result.best_circuit.size(), cnot_count(result.best_circuit),
              wall);
  return kExitOk;
}

int run_compile(const RunFlags& flags, const std::string& from_manifest) {
  SearchConfig config;
  if (!from_manifest.empty()) {
    std::ifstream in(from_manifest);
    if (!in) throw ConfigError("cannot open manifest " + from_manifest);
    std::ostringstream buf;
    buf << in.rdbuf();
    config = config_from_manifest(buf.str());
    config.validate();
  } else {
    config = build_config(flags);
  }
  return run_compile_config(config, flags.out);
}

int run_sweep(const RunFlags& flags, const std::string& range) {
  const auto colon = range.find(':');
  int lo = 0, hi = 0;
  try {
    if (colon == std::string::npos) {
      lo = hi = std::stoi(range);
    } else {
      lo = std::stoi(range.substr(0, colon));
      hi = std::stoi(range.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw ConfigError("bad gate-count range: " + range);
  }
  if (lo < 1 || hi < lo) {
    throw ConfigError("bad gate-count range: " + range);
  }
  ensure_out_dir(flags.out);

  // Independent child runs with seeds derived from the sweep seed.
  Rng seed_rng(flags.seed);
  std::vector<SweepRow> rows;
  for (int length = lo; length <= hi; ++length) {
    RunFlags point = flags;
    point.max_gates = length;
    point.seed = seed_rng();
    const SearchConfig config = build_config(point);
    const SearchResult result = run_search(config);
    rows.push_back({length, result.best_cost, result.best_reward,
                    cnot_count(result.best_circuit),
                    static_cast<int>(result.episode_log.size())});
    std::printf("L=%d best cost %.6e cnots %d\n", length, result.best_cost,
                cnot_count(result.best_circuit));
    if (length == hi) {
      save_circuit(result.best_circuit, flags.out + "/circuit.json");
      std::ofstream manifest(flags.out + "/manifest.json");
      manifest << manifest_to_json(config, result, 0.0);
    }
  }
  std::ofstream csv(flags.out + "/sweep.csv");
  csv << sweep_to_csv(rows);
  std::ofstream json(flags.out + "/sweep.json");
  json << sweep_to_json(rows);
  return kExitOk;
}

int run_oracle(const std::string& target_name, const std::string& alphabet,
               int max_length, double threshold, int cap_qubits,
               int cap_length, std::uint64_t seed, const std::string& out) {
  const TargetSpec spec = resolve_target(target_name, 1234);
  const Unitary target = target_unitary(spec);
  const int n = qubit_count(target);
  OracleSettings settings;
  settings.max_length = max_length;
  settings.threshold = threshold;
  settings.cap_qubits = cap_qubits;
  settings.cap_length = cap_length;
  settings.seed = seed;
  const OracleResult result =
      exhaustive_minimum(target, resolve_alphabet(alphabet), full_topology(n),
                         CostKind::GLOBAL, settings);
  for (const auto& level : result.levels) {
    std::printf("L=%d structures %ld best cost %.6e\n", level.length,
                level.structures, level.best_cost);
  }
  if (result.minimal_length) {
    std::printf("minimal length %d (witness cost %.6e)\n",
                *result.minimal_length, result.witness_cost);
    if (!out.empty()) {
      ensure_out_dir(out);
      save_circuit(result.witness, out + "/witness.json");
      std::printf("witness written to %s/witness.json\n", out.c_str());
    }
  } else {
    std::printf("no structure of length <= %d reaches cost %g\n", max_length,
                threshold);
  }
  return kExitOk;
}

int run_render(const std::string& path) {
  Circuit c;
  try {
    c = load_circuit(path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  std::fputs(render_circuit(c).c_str(), stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variational quantum compiler driven by double Q-learning"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunFlags compile_flags;
  std::string from_manifest;
  auto* compile = app.add_subcommand("compile", "search a circuit for a target");
  compile->set_config("--config", "", "read options from an ini-style file");
  add_run_flags(compile, compile_flags, /*positional_target=*/false);
  compile->add_option("--from-manifest", from_manifest,
                      "reproduce a previous run from its manifest.json");
  // --from-manifest supplies the target itself
  compile->get_option("--target")->required(false);

  RunFlags sweep_flags;
  std::string range;
  auto* sweep = app.add_subcommand("sweep", "compile across a range of L");
  sweep->set_config("--config", "", "read options from an ini-style file");
  add_run_flags(sweep, sweep_flags, /*positional_target=*/true);
  sweep->add_option("range", range, "gate-count range lo:hi")->required();
  sweep->add_option("--max-gates-range", range, "gate-count range lo:hi");

  std::string oracle_target, oracle_alphabet = "ibm2q", oracle_out;
  int oracle_max = 5, oracle_cap_qubits = 2, oracle_cap_length = 6;
  double oracle_threshold = 1e-3;
  std::uint64_t oracle_seed = 99;
  auto* oracle =
      app.add_subcommand("oracle", "exhaustive minimal-gate-count search");
  oracle->add_option("target", oracle_target, "target name or matrix file")
      ->required();
  oracle->add_option("--alphabet", oracle_alphabet, "alphabet preset or file");
  oracle->add_option("--max", oracle_max, "largest length to enumerate");
  oracle->add_option("--threshold", oracle_threshold, "success threshold");
  oracle->add_option("--cap-qubits", oracle_cap_qubits, "width cap");
  oracle->add_option("--cap-length", oracle_cap_length, "length cap");
  oracle->add_option("--seed", oracle_seed, "optimizer seed");
  oracle->add_option("--out", oracle_out, "directory for the witness");

  std::string render_path;
  auto* render = app.add_subcommand("render", "ASCII diagram of a circuit");
  render->add_option("file", render_path, "circuit.json path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (compile->parsed()) {
      if (from_manifest.empty() && compile_flags.target.empty()) {
        throw ConfigError("either --target or --from-manifest is required");
      }
      return run_compile(compile_flags, from_manifest);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_flags, range);
    }
    if (oracle->parsed()) {
      return run_oracle(oracle_target, oracle_alphabet, oracle_max,
                        oracle_threshold, oracle_cap_qubits, oracle_cap_length,
                        oracle_seed, oracle_out);
    }
    if (render->parsed()) {
      return run_render(render_path);
    }
  } catch (const OutDirError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitOutDir;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}
