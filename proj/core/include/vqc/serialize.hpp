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

#pragma once

#include <string>

#include "vqc/circuit.hpp"
#include "vqc/qlearn.hpp"
#include "vqc/search.hpp"
#include "vqc/topology.hpp"
#include "vqc/unitary.hpp"

namespace vqc {

// File formats (all JSON unless noted):
//   unitary  {"n": int, "re": [[...]], "im": [[...]]}
//   circuit  {"n": int, "gates": [{"gate": str, "qubits": [...],
//             "theta": [...]}]}, gates in application order
//   topology {"n": int, "pairs": [[control, target], ...]}
//   alphabet ["rz", "ry", "cnot", ...]
//   schedule [[epsilon, episodes], ...]
//   qtable   {"state|action": [q1, q2], ...}
//   replay   one JSON object per line: {"trajectory": [...], "r_t": x}
//   manifest {"config": {...}, "tool_version": str, "wall_time_s": x,
//             "result": {...}}

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);
void save_circuit(const Circuit& c, const std::string& path);
Circuit load_circuit(const std::string& path);

std::string unitary_to_json(const Unitary& u);
Unitary unitary_from_json(const std::string& text);  // throws NotUnitaryError
void save_unitary(const Unitary& u, const std::string& path);
Unitary load_unitary(const std::string& path);

Topology topology_from_json(const std::string& text);
Topology load_topology(const std::string& path);

Alphabet alphabet_from_json(const std::string& text);
Alphabet load_alphabet(const std::string& path);

EpsilonSchedule schedule_from_json(const std::string& text);
EpsilonSchedule load_schedule(const std::string& path);

// Key format "state|action" with state START or "gate:q,q:count" and action
// "gate:q,q".
std::string qtable_to_json(const QTablePair& q);
void save_qtable(const QTablePair& q, const std::string& path);

std::string replay_to_jsonl(const std::vector<ReplayEntry>& replay);
void save_replay(const std::vector<ReplayEntry>& replay,
                 const std::string& path);
std::vector<ReplayEntry> replay_from_jsonl(const std::string& text);

std::string config_to_json(const SearchConfig& config);
SearchConfig config_from_json(const std::string& text);

std::string manifest_to_json(const SearchConfig& config,
                             const SearchResult& result, double wall_time_s);
// Extracts the embedded config (for reproduction runs).
SearchConfig config_from_manifest(const std::string& text);

struct SweepRow {
  int max_gates;
  double best_cost;
  double best_reward;
  int n_cnot;
  int episodes;
};

// Header "L,best_cost,best_reward,n_cnot,episodes".
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace vqc
