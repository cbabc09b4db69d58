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

#include "vqc/qlearn.hpp"

#include "vqc/errors.hpp"

namespace vqc {

namespace {

double lookup(const QTablePair::Table& t, const QTablePair::Key& key,
              double q0) {
  const auto it = t.find(key);
  return it == t.end() ? q0 : it->second;
}

// Uniform choice among exact maxima.
template <typename Score>
std::size_t argmax_random_ties(std::size_t size, const Score& score,
                               Rng& rng) {
  double best = score(0);
  std::vector<std::size_t> ties{0};
  for (std::size_t i = 1; i < size; ++i) {
    const double v = score(i);
    if (v > best) {
      best = v;
      ties.assign(1, i);
    } else if (v == best) {
      ties.push_back(i);
    }
  }
  if (ties.size() == 1) return ties[0];
  return ties[uniform_index(rng, ties.size())];
}

}  // namespace

double QTablePair::q1(const AgentState& s, const ActionId& a) const {
  return lookup(t1_, {s, a}, q0_);
}

double QTablePair::q2(const AgentState& s, const ActionId& a) const {
  return lookup(t2_, {s, a}, q0_);
}

double QTablePair::sum(const AgentState& s, const ActionId& a) const {
  return q1(s, a) + q2(s, a);
}

void QTablePair::set_q1(const AgentState& s, const ActionId& a, double value) {
  t1_[{s, a}] = value;
}

void QTablePair::set_q2(const AgentState& s, const ActionId& a, double value) {
  t2_[{s, a}] = value;
}

ActionId select_action(const AgentState& s, const QTablePair& qtables,
                       const std::vector<ActionId>& actions, double epsilon,
                       Rng& rng) {
  if (actions.empty()) {
    throw InvalidStateError("no actions available");
  }
  if (uniform_real(rng, 0.0, 1.0) < epsilon) {
    return actions[uniform_index(rng, actions.size())];
  }
  const std::size_t pick = argmax_random_ties(
      actions.size(),
      [&](std::size_t i) { return qtables.sum(s, actions[i]); }, rng);
  return actions[pick];
}

double terminal_reward(double cost, const Circuit& circuit, double lambda) {
  double reward = 1.0 - cost;
  if (lambda > 0.0 && !circuit.gates.empty()) {
    reward -= lambda * static_cast<double>(cnot_count(circuit)) /
              static_cast<double>(circuit.gates.size());
  }
  return reward;
}

std::vector<double> shaped_rewards(double r_t, int length,
                                   bool uniform_shaping) {
  std::vector<double> rewards(length, r_t / static_cast<double>(length));
  if (!uniform_shaping && length >= 1) {
    rewards.back() = r_t;
  }
  return rewards;
}

void double_q_update(
    QTablePair& qtables, const ReplayEntry& entry, const DoubleQParams& params,
    const std::function<std::vector<ActionId>(const AgentState&)>& actions_of,
    Rng& rng) {
  const int length = static_cast<int>(entry.trajectory.size());
  if (length == 0) return;
  const std::vector<double> rewards =
      shaped_rewards(entry.terminal_reward, length, params.uniform_shaping);
  // One coin flip decides the updated table for the whole pass.
  const bool update_first = uniform_real(rng, 0.0, 1.0) < 0.5;
  for (int t = 0; t < length; ++t) {
    const auto& [state, action] = entry.trajectory[t];
    double bootstrap = 0.0;
    if (t + 1 < length) {
      const AgentState& next = entry.trajectory[t + 1].first;
      const std::vector<ActionId> actions = actions_of(next);
      if (!actions.empty()) {
        if (update_first) {
          const std::size_t a_star = argmax_random_ties(
              actions.size(),
              [&](std::size_t i) { return qtables.q1(next, actions[i]); },
              rng);
          bootstrap = qtables.q2(next, actions[a_star]);
        } else {
          const std::size_t a_star = argmax_random_ties(
              actions.size(),
              [&](std::size_t i) { return qtables.q2(next, actions[i]); },
              rng);
          bootstrap = qtables.q1(next, actions[a_star]);
        }
      }
    }
    const double target = rewards[t] + params.gamma * bootstrap;
    if (update_first) {
      const double old = qtables.q1(state, action);
      qtables.set_q1(state, action, (1.0 - params.alpha) * old +
                                        params.alpha * target);
    } else {
      const double old = qtables.q2(state, action);
      qtables.set_q2(state, action, (1.0 - params.alpha) * old +
                                        params.alpha * target);
    }
  }
}

}  // namespace vqc
