#pragma once

#include <vector>

#include "xisf/core.hpp"

namespace xisf::oracle {

// Fully enumerable MDP with a per-transition feature atom. States and
// actions are plain indices; adapters elsewhere expose states as one-hot
// StateVecs so agents and oracle share environments.
struct TabularModel {
  int num_states = 0;
  int num_actions = 0;
  int num_atoms = 0;
  double gamma = 0.9;

  // kernel[s][a][s'] = p(s'|s,a); rows sum to 1 (+-1e-12).
  std::vector<std::vector<Vec>> kernel;
  // feature_map[s][a][s'] = atom index of the transition.
  std::vector<std::vector<std::vector<int>>> feature_map;
  // Terminal states absorb with zero continuation value.
  std::vector<bool> terminal;

  void validate() const;

  bool is_terminal(int s) const { return !terminal.empty() && terminal[s]; }

  // p(atom = j | s, a) marginalized over the kernel.
  Vec feature_distribution(int s, int a) const;

  // Expected immediate reward r(s,a) under `per_atom` rewards.
  double expected_reward(int s, int a, const Vec& per_atom) const;
};

// Convenience: reward value per atom from a TaskSpec and an atom set.
Vec rewards_per_atom(const TaskSpec& task, const DiscreteFeatureSet& atoms);

// Random continuing MDP (no terminals) for property and acceptance checks.
TabularModel random_model(RandomStream& rng, int num_states, int num_actions,
                          int num_atoms, double gamma);

}  // namespace xisf::oracle
