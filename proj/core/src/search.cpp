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

#include "vqc/search.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "vqc/errors.hpp"

namespace vqc {

int EpsilonSchedule::total_episodes() const {
  int total = 0;
  for (const auto& stage : stages) total += stage.episodes;
  return total;
}

EpsilonSchedule schedule_table1() {
  return {{{1.0, 1500},
           {0.9, 100},
           {0.8, 100},
           {0.7, 100},
           {0.6, 150},
           {0.5, 150},
           {0.4, 150},
           {0.3, 150},
           {0.2, 150},
           {0.1, 150}}};
}

EpsilonSchedule schedule_table3() {
  return {{{1.0, 3000},
           {0.9, 200},
           {0.8, 200},
           {0.7, 200},
           {0.6, 300},
           {0.5, 300},
           {0.4, 300},
           {0.3, 300},
           {0.2, 300},
           {0.1, 300}}};
}

EpsilonSchedule scaled_schedule(const EpsilonSchedule& s, double factor) {
  EpsilonSchedule out;
  for (const auto& stage : s.stages) {
    const int episodes = std::max(
        1, static_cast<int>(std::ceil(stage.episodes * factor)));
    out.stages.push_back({stage.epsilon, episodes});
  }
  return out;
}

Hyperparameters small_n_hyperparameters() { return {0.02, 0.9, 128}; }
Hyperparameters large_n_hyperparameters() { return {0.2, 1.0, 128}; }

void SearchConfig::validate() const {
  if (alpha < 0.0 || alpha > 1.0) throw Error("alpha must be in [0, 1]");
  if (gamma < 0.0 || gamma > 1.0) throw Error("gamma must be in [0, 1]");
  if (batch_size < 1) throw Error("batch_size must be >= 1");
  if (max_gates < 1) throw Error("max_gates must be >= 1");
  if (lambda < 0.0) throw Error("lambda must be >= 0");
  if (schedule.stages.empty()) throw Error("schedule needs at least a stage");
  for (const auto& stage : schedule.stages) {
    if (stage.epsilon < 0.0 || stage.epsilon > 1.0) {
      throw Error("epsilon must be in [0, 1]");
    }
    if (stage.episodes < 0) throw Error("episode counts must be >= 0");
  }
  if (q_init_samples < 1) throw Error("q_init_samples must be >= 1");
  if (optimizer.step_size <= 0.0) throw Error("step_size must be > 0");
  if (optimizer.tolerance <= 0.0) throw Error("tolerance must be > 0");
  if (optimizer.restarts < 1) throw Error("restarts must be >= 1");
  if (optimizer.max_iterations < 1) throw Error("max_iterations must be >= 1");
  if (alphabet.empty()) throw Error("alphabet is empty");
  if (topology.n < 1) throw Error("topology width must be >= 1");
}

namespace {

// Builds one circuit by running the policy for exactly max_gates steps.
struct Episode {
  std::vector<std::pair<AgentState, ActionId>> trajectory;
  Circuit circuit;
};

class ActionCache {
 public:
  ActionCache(const Alphabet& alphabet, const Topology& topology,
              int max_gates)
      : alphabet_(alphabet), topology_(topology), max_gates_(max_gates) {}

  const std::vector<ActionId>& of(const AgentState& s) {
    auto it = cache_.find(s);
    if (it == cache_.end()) {
      it = cache_.emplace(s, action_space(s, alphabet_, topology_, max_gates_))
               .first;
    }
    return it->second;
  }

 private:
  const Alphabet& alphabet_;
  const Topology& topology_;
  int max_gates_;
  std::map<AgentState, std::vector<ActionId>> cache_;
};

Episode rollout(ActionCache& actions, const QTablePair& qtables,
                double epsilon, int n, int max_gates, Rng& rng) {
  Episode ep;
  ep.circuit.n = n;
  AgentState state = AgentState::start();
  for (int l = 0; l < max_gates; ++l) {
    const auto& available = actions.of(state);
    const ActionId action =
        select_action(state, qtables, available, epsilon, rng);
    ep.trajectory.emplace_back(state, action);
    ep.circuit.gates.push_back(action_placement(action, n));
    state = transition(state, action);
  }
  return ep;
}

}  // namespace

double init_q(const SearchConfig& config, const CostEvaluator& evaluator,
              Rng& rng) {
  ActionCache actions(config.alphabet, config.topology, config.max_gates);
  QTablePair empty(0.0);
  const int n = config.topology.n;
  double total = 0.0;
  for (int i = 0; i < config.q_init_samples; ++i) {
    Episode ep = rollout(actions, empty, 1.0, n, config.max_gates, rng);
    const OptimizationOutcome outcome =
        optimize(ep.circuit, evaluator, config.optimizer, rng);
    scatter_theta(ep.circuit, outcome.theta);
    total += terminal_reward(outcome.cost, ep.circuit, config.lambda);
  }
  return total / static_cast<double>(config.q_init_samples);
}

SearchResult run_search(const SearchConfig& config) {
  config.validate();
  const Unitary target = target_unitary(config.target);
  const int n = qubit_count(target);
  if (n != config.topology.n) {
    throw DimensionError("target width " + std::to_string(n) +
                         " does not match topology width " +
                         std::to_string(config.topology.n));
  }
  const CostEvaluator evaluator(target, config.cost_kind);
  Rng rng(config.seed);
  ActionCache actions(config.alphabet, config.topology, config.max_gates);
  const auto actions_of = [&](const AgentState& s) { return actions.of(s); };
  const DoubleQParams q_params{config.alpha, config.gamma,
                               config.uniform_shaping};

  SearchResult result;
  result.q0 = init_q(config, evaluator, rng);
  QTablePair qtables(result.q0);
  result.best_reward = -std::numeric_limits<double>::infinity();

  for (const auto& stage : config.schedule.stages) {
    for (int e = 0; e < stage.episodes; ++e) {
      Episode ep =
          rollout(actions, qtables, stage.epsilon, n, config.max_gates, rng);
      const OptimizationOutcome outcome =
          optimize(ep.circuit, evaluator, config.optimizer, rng);
      scatter_theta(ep.circuit, outcome.theta);
      const double reward =
          terminal_reward(outcome.cost, ep.circuit, config.lambda);

      result.replay.push_back({ep.trajectory, reward});
      result.episode_log.push_back(
          {ep.circuit, outcome.cost, reward, stage.epsilon});
      if (reward > result.best_reward) {
        result.best_reward = reward;
        result.best_cost = outcome.cost;
        result.best_circuit = ep.circuit;
      }

      for (int k = 0; k < config.batch_size; ++k) {
        const std::size_t pick = uniform_index(rng, result.replay.size());
        double_q_update(qtables, result.replay[pick], q_params, actions_of,
                        rng);
      }
    }
  }
  result.q_snapshot = qtables;
  return result;
}

}  // namespace vqc
