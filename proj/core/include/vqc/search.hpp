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

#include <cstdint>
#include <string>
#include <vector>

#include "vqc/cost.hpp"
#include "vqc/mdp.hpp"
#include "vqc/optimizer.hpp"
#include "vqc/qlearn.hpp"
#include "vqc/targets.hpp"
#include "vqc/topology.hpp"

namespace vqc {

// Staged exploration probabilities: each stage runs `episodes` episodes at
// its epsilon.
struct EpsilonSchedule {
  struct Stage {
    double epsilon;
    int episodes;
  };
  std::vector<Stage> stages;

  int total_episodes() const;
};

// epsilon 1.0 -> 0.1 with episode counts 1500,100,100,100,150x6 (the
// two-qubit budget) and 3000,200,200,200,300x6 (the three-qubit budget).
EpsilonSchedule schedule_table1();
EpsilonSchedule schedule_table3();
// Every stage's episode count multiplied by `factor` (rounded up, min 1).
EpsilonSchedule scaled_schedule(const EpsilonSchedule& s, double factor);

struct Hyperparameters {
  double alpha = 0.02;
  double gamma = 0.9;
  int batch_size = 128;
};
Hyperparameters small_n_hyperparameters();  // alpha 0.02, gamma 0.9, K 128
Hyperparameters large_n_hyperparameters();  // alpha 0.2,  gamma 1,   K 128

struct SearchConfig {
  TargetSpec target;
  Alphabet alphabet;
  Topology topology;
  int max_gates = 5;           // L: every episode builds exactly L placements
  double alpha = 0.02;         // learning rate
  double gamma = 0.9;          // discount factor
  int batch_size = 128;        // K: replay samples per episode
  double lambda = 0.0;         // CNOT penalty weight; 0 disables
  EpsilonSchedule schedule;
  OptimizerSettings optimizer;
  CostKind cost_kind = CostKind::GLOBAL;
  int q_init_samples = 100;
  bool uniform_shaping = false;  // terminal step also gets r_T / L
  std::uint64_t seed = 0;

  void validate() const;  // throws Error on out-of-range fields
};

struct EpisodeRecord {
  Circuit circuit;  // with optimized angles
  double cost;
  double reward;
  double epsilon;
};

struct SearchResult {
  Circuit best_circuit;
  double best_cost = 1.0;
  double best_reward = 0.0;  // r*
  double q0 = 0.0;
  std::vector<EpisodeRecord> episode_log;
  std::vector<ReplayEntry> replay;
  QTablePair q_snapshot{0.0};
};

// Default value for fresh Q-table entries: the mean termination reward of
// `q_init_samples` uniformly random L-gate structures, each optimized.
double init_q(const SearchConfig& config, const CostEvaluator& evaluator,
              Rng& rng);

/**
 * The full structure search: per schedule stage, per episode, builds an
 * exactly-L-placement circuit by epsilon-greedy selection, optimizes its
 * angles, computes the terminal reward, stores the episode in replay
 * memory, updates the incumbent, then applies `batch_size` double-Q update
 * passes to replay entries sampled uniformly with replacement.
 * Deterministic for a given seed.
 */
SearchResult run_search(const SearchConfig& config);

}  // namespace vqc
