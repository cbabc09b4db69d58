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

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "vqc/mdp.hpp"
#include "vqc/rng.hpp"

namespace vqc {

// Two value tables keyed by (state, action); unseen keys read as the shared
// default q0. Tables are kept sparse and materialise an entry on first
// write.
class QTablePair {
 public:
  explicit QTablePair(double q0 = 0.0) : q0_(q0) {}

  double q1(const AgentState& s, const ActionId& a) const;
  double q2(const AgentState& s, const ActionId& a) const;
  double sum(const AgentState& s, const ActionId& a) const;

  void set_q1(const AgentState& s, const ActionId& a, double value);
  void set_q2(const AgentState& s, const ActionId& a, double value);

  double q0() const { return q0_; }
  void set_q0(double q0) { q0_ = q0; }

  using Key = std::pair<AgentState, ActionId>;
  using Table = std::map<Key, double>;
  const Table& table1() const { return t1_; }
  const Table& table2() const { return t2_; }

 private:
  double q0_;
  Table t1_;
  Table t2_;
};

// ε-greedy selection: a uniformly random action with probability epsilon,
// otherwise the argmax of Q1 + Q2 with ties broken uniformly at random.
// Throws InvalidStateError on an empty action list.
ActionId select_action(const AgentState& s, const QTablePair& qtables,
                       const std::vector<ActionId>& actions, double epsilon,
                       Rng& rng);

// A finished episode: its L (state, action) pairs plus the termination
// reward. Shaped per-step rewards are recomputed from r_T when replayed.
struct ReplayEntry {
  std::vector<std::pair<AgentState, ActionId>> trajectory;
  double terminal_reward = 0.0;
};

// Termination reward: 1 - C(U,V), minus lambda * n_CNOT / L_circuit when
// the CNOT penalty is enabled (lambda > 0).
double terminal_reward(double cost, const Circuit& circuit, double lambda);

// Per-step rewards under reward shaping: r_T / L on the non-terminal
// transitions. The terminal transition receives the full r_T by default;
// with uniform_shaping it also receives r_T / L (both readings of the
// shaping rule are kept available).
std::vector<double> shaped_rewards(double r_t, int length,
                                   bool uniform_shaping = false);

struct DoubleQParams {
  double alpha = 0.02;
  double gamma = 0.9;
  bool uniform_shaping = false;
};

/**
 * One double-Q pass over a replayed trajectory. A single coin flip decides
 * which table is updated for the whole pass; transitions are visited in
 * order. The bootstrap action is the updated table's argmax over the next
 * state's actions, valued through the other table; the terminal transition
 * bootstraps zero and receives r_T. `actions_of` supplies the action space
 * of a state.
 */
void double_q_update(
    QTablePair& qtables, const ReplayEntry& entry, const DoubleQParams& params,
    const std::function<std::vector<ActionId>(const AgentState&)>& actions_of,
    Rng& rng);

}  // namespace vqc
