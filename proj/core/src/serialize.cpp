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

#include "vqc/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vqc/errors.hpp"
#include "vqc/version.hpp"

namespace vqc {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

json placement_to_json(const GatePlacement& p) {
  return json{{"gate", std::string(gate_name(p.gate))},
              {"qubits", p.qubits},
              {"theta", p.theta}};
}

GatePlacement placement_from_json(const json& j) {
  GatePlacement p;
  p.gate = gate_from_name(j.at("gate").get<std::string>());
  p.qubits = j.at("qubits").get<std::vector<int>>();
  p.theta = j.at("theta").get<std::vector<double>>();
  return p;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string state_key(const AgentState& s) {
  if (s.tag == AgentState::Tag::START) return "S";
  return std::string(gate_name(s.last_gate)) + ":" + join_ints(s.last_qubits) +
         ":" + std::to_string(s.gate_count);
}

std::string action_key(const ActionId& a) {
  return std::string(gate_name(a.gate)) + ":" + join_ints(a.qubits);
}

json state_to_json(const AgentState& s) {
  if (s.tag == AgentState::Tag::START) {
    return json{{"tag", "start"}};
  }
  return json{{"tag", "intermediate"},
              {"gate", std::string(gate_name(s.last_gate))},
              {"qubits", s.last_qubits},
              {"count", s.gate_count}};
}

AgentState state_from_json(const json& j) {
  AgentState s;
  const std::string tag = j.at("tag").get<std::string>();
  if (tag == "start") return s;
  s.tag = AgentState::Tag::INTERMEDIATE;
  s.last_gate = gate_from_name(j.at("gate").get<std::string>());
  s.last_qubits = j.at("qubits").get<std::vector<int>>();
  s.gate_count = j.at("count").get<int>();
  return s;
}

}  // namespace

std::string circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& p : c.gates) gates.push_back(placement_to_json(p));
  return json{{"n", c.n}, {"gates", gates}}.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string& text) {
  const json j = json::parse(text);
  Circuit c;
  c.n = j.at("n").get<int>();
  for (const auto& g : j.at("gates")) {
    c.gates.push_back(placement_from_json(g));
  }
  check_circuit(c);
  return c;
}

void save_circuit(const Circuit& c, const std::string& path) {
  write_file(path, circuit_to_json(c));
}

Circuit load_circuit(const std::string& path) {
  return circuit_from_json(read_file(path));
}

std::string unitary_to_json(const Unitary& u) {
  const int n = qubit_count(u);
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      re_row.push_back(u(r, c).real());
      im_row.push_back(u(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"n", n}, {"re", re}, {"im", im}}.dump() + "\n";
}

Unitary unitary_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int n = j.at("n").get<int>();
  const Eigen::Index d = Eigen::Index(1) << n;
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != d ||
      static_cast<Eigen::Index>(im.size()) != d) {
    throw DimensionError("matrix rows do not match 2^n");
  }
  Unitary u(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    if (static_cast<Eigen::Index>(re[r].size()) != d ||
        static_cast<Eigen::Index>(im[r].size()) != d) {
      throw DimensionError("matrix columns do not match 2^n");
    }
    for (Eigen::Index c = 0; c < d; ++c) {
      u(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
    }
  }
  if (!is_unitary(u)) {
    throw NotUnitaryError("matrix file content is not unitary");
  }
  return u;
}

void save_unitary(const Unitary& u, const std::string& path) {
  write_file(path, unitary_to_json(u));
}

Unitary load_unitary(const std::string& path) {
  return unitary_from_json(read_file(path));
}

Topology topology_from_json(const std::string& text) {
  const json j = json::parse(text);
  Topology t;
  t.n = j.at("n").get<int>();
  for (const auto& pair : j.at("pairs")) {
    const int c = pair.at(0).get<int>();
    const int tg = pair.at(1).get<int>();
    if (c < 0 || c >= t.n || tg < 0 || tg >= t.n || c == tg) {
      throw QubitIndexError("invalid topology pair");
    }
    t.allowed_pairs.insert({c, tg});
  }
  return t;
}

Topology load_topology(const std::string& path) {
  return topology_from_json(read_file(path));
}

Alphabet alphabet_from_json(const std::string& text) {
  const json j = json::parse(text);
  Alphabet a;
  for (const auto& name : j) {
    a.push_back(gate_from_name(name.get<std::string>()));
  }
  if (a.empty()) throw Error("alphabet is empty");
  return a;
}

Alphabet load_alphabet(const std::string& path) {
  return alphabet_from_json(read_file(path));
}

EpsilonSchedule schedule_from_json(const std::string& text) {
  const json j = json::parse(text);
  EpsilonSchedule s;
  for (const auto& stage : j) {
    s.stages.push_back(
        {stage.at(0).get<double>(), stage.at(1).get<int>()});
  }
  return s;
}

EpsilonSchedule load_schedule(const std::string& path) {
  return schedule_from_json(read_file(path));
}

std::string qtable_to_json(const QTablePair& q) {
  json out = json::object();
  // Keys present in either table; the other side reads as q0.
  const auto emit = [&](const QTablePair::Key& key) {
    const std::string name =
        state_key(key.first) + "|" + action_key(key.second);
    if (!out.contains(name)) {
      out[name] = {q.q1(key.first, key.second), q.q2(key.first, key.second)};
    }
  };
  for (const auto& [key, value] : q.table1()) emit(key);
  for (const auto& [key, value] : q.table2()) emit(key);
  return out.dump(2) + "\n";
}

void save_qtable(const QTablePair& q, const std::string& path) {
  write_file(path, qtable_to_json(q));
}

std::string replay_to_jsonl(const std::vector<ReplayEntry>& replay) {
  std::string out;
  for (const auto& entry : replay) {
    json steps = json::array();
    for (const auto& [state, action] : entry.trajectory) {
      steps.push_back(json{{"state", state_to_json(state)},
                           {"action",
                            json{{"gate", std::string(gate_name(action.gate))},
                                 {"qubits", action.qubits}}}});
    }
    out += json{{"trajectory", steps}, {"r_t", entry.terminal_reward}}.dump();
    out += "\n";
  }
  return out;
}

void save_replay(const std::vector<ReplayEntry>& replay,
                 const std::string& path) {
  write_file(path, replay_to_jsonl(replay));
}

std::vector<ReplayEntry> replay_from_jsonl(const std::string& text) {
  std::vector<ReplayEntry> replay;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    ReplayEntry entry;
    entry.terminal_reward = j.at("r_t").get<double>();
    for (const auto& step : j.at("trajectory")) {
      AgentState s = state_from_json(step.at("state"));
      ActionId a{gate_from_name(step.at("action").at("gate").get<std::string>()),
                 step.at("action").at("qubits").get<std::vector<int>>()};
      entry.trajectory.emplace_back(std::move(s), std::move(a));
    }
    replay.push_back(std::move(entry));
  }
  return replay;
}

namespace {

json config_to_json_obj(const SearchConfig& config) {
  json schedule = json::array();
  for (const auto& stage : config.schedule.stages) {
    schedule.push_back({stage.epsilon, stage.episodes});
  }
  json alphabet = json::array();
  for (GateKind kind : config.alphabet) {
    alphabet.push_back(std::string(gate_name(kind)));
  }
  json pairs = json::array();
  for (const auto& [c, t] : config.topology.allowed_pairs) {
    pairs.push_back({c, t});
  }
  return json{
      {"target",
       {{"name", config.target.name},
        {"file", config.target.file},
        {"layered_seed", config.target.layered_seed}}},
      {"alphabet", alphabet},
      {"topology", {{"n", config.topology.n}, {"pairs", pairs}}},
      {"max_gates", config.max_gates},
      {"alpha", config.alpha},
      {"gamma", config.gamma},
      {"batch_size", config.batch_size},
      {"lambda", config.lambda},
      {"schedule", schedule},
      {"optimizer",
       {{"step_size", config.optimizer.step_size},
        {"max_iterations", config.optimizer.max_iterations},
        {"tolerance", config.optimizer.tolerance},
        {"restarts", config.optimizer.restarts},
        {"init", config.optimizer.init == AngleInit::ZEROS
                     ? "zeros"
                     : "random_uniform_0_2pi"}}},
      {"cost_kind", config.cost_kind == CostKind::LOCAL ? "local" : "global"},
      {"q_init_samples", config.q_init_samples},
      {"uniform_shaping", config.uniform_shaping},
      {"seed", config.seed}};
}

SearchConfig config_from_json_obj(const json& j) {
  SearchConfig config;
  config.target.name = j.at("target").at("name").get<std::string>();
  config.target.file = j.at("target").at("file").get<std::string>();
  config.target.layered_seed =
      j.at("target").at("layered_seed").get<std::uint64_t>();
  for (const auto& name : j.at("alphabet")) {
    config.alphabet.push_back(gate_from_name(name.get<std::string>()));
  }
  config.topology.n = j.at("topology").at("n").get<int>();
  for (const auto& pair : j.at("topology").at("pairs")) {
    config.topology.allowed_pairs.insert(
        {pair.at(0).get<int>(), pair.at(1).get<int>()});
  }
  config.max_gates = j.at("max_gates").get<int>();
  config.alpha = j.at("alpha").get<double>();
  config.gamma = j.at("gamma").get<double>();
  config.batch_size = j.at("batch_size").get<int>();
  config.lambda = j.at("lambda").get<double>();
  for (const auto& stage : j.at("schedule")) {
    config.schedule.stages.push_back(
        {stage.at(0).get<double>(), stage.at(1).get<int>()});
  }
  const auto& opt = j.at("optimizer");
  config.optimizer.step_size = opt.at("step_size").get<double>();
  config.optimizer.max_iterations = opt.at("max_iterations").get<int>();
  config.optimizer.tolerance = opt.at("tolerance").get<double>();
  config.optimizer.restarts = opt.at("restarts").get<int>();
  config.optimizer.init = opt.at("init").get<std::string>() == "zeros"
                              ? AngleInit::ZEROS
                              : AngleInit::RANDOM_UNIFORM_0_2PI;
  config.cost_kind = j.at("cost_kind").get<std::string>() == "local"
                         ? CostKind::LOCAL
                         : CostKind::GLOBAL;
  config.q_init_samples = j.at("q_init_samples").get<int>();
  config.uniform_shaping = j.at("uniform_shaping").get<bool>();
  config.seed = j.at("seed").get<std::uint64_t>();
  return config;
}

}  // namespace

std::string config_to_json(const SearchConfig& config) {
  return config_to_json_obj(config).dump(2) + "\n";
}

SearchConfig config_from_json(const std::string& text) {
  return config_from_json_obj(json::parse(text));
}

std::string manifest_to_json(const SearchConfig& config,
                             const SearchResult& result, double wall_time_s) {
  const json j =
      json{{"config", config_to_json_obj(config)},
           {"tool_version", kVersion},
           {"wall_time_s", wall_time_s},
           {"result",
            {{"best_cost", result.best_cost},
             {"best_reward", result.best_reward},
             {"n_cnot", cnot_count(result.best_circuit)},
             {"gates", result.best_circuit.size()},
             {"episodes", static_cast<int>(result.episode_log.size())},
             {"q0", result.q0}}}};
  return j.dump(2) + "\n";
}

SearchConfig config_from_manifest(const std::string& text) {
  return config_from_json_obj(json::parse(text).at("config"));
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "L,best_cost,best_reward,n_cnot,episodes\n";
  for (const auto& row : rows) {
    out += std::to_string(row.max_gates) + "," +
           json(row.best_cost).dump() + "," + json(row.best_reward).dump() +
           "," + std::to_string(row.n_cnot) + "," +
           std::to_string(row.episodes) + "\n";
  }
  return out;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    arr.push_back(json{{"L", row.max_gates},
                       {"best_cost", row.best_cost},
                       {"best_reward", row.best_reward},
                       {"n_cnot", row.n_cnot},
                       {"episodes", row.episodes}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace vqc
