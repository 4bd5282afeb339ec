#pragma once

#include "xisf/envs/encoding.hpp"
#include "xisf/oracle/tabular_model.hpp"

namespace xisf::envs {

// One-hot adapter over an enumerable MDP so agents and the DP oracle share
// environments. Feature atoms are the indicator basis over atom indices.
class TabularEnv : public Environment {
 public:
  TabularEnv(oracle::TabularModel model, int start_state);

  int state_dim() const override { return model_.num_states; }
  int action_count() const override { return model_.num_actions; }
  int feature_dim() const override { return model_.num_atoms; }
  const DiscreteFeatureSet* feature_atoms() const override { return &atoms_; }

  void set_task(TaskSpec task) override { task_ = std::move(task); }
  const TaskSpec& task() const override { return task_; }

  StateVec reset(RandomStream& rng) override;
  Transition step(ActionId a, RandomStream& rng) override;

  bool episode_finished() const override { return done_; }

  const oracle::TabularModel& model() const { return model_; }
  int current_state() const { return state_; }

  StateVec one_hot(int state) const;

 private:
  oracle::TabularModel model_;
  int start_state_;
  DiscreteFeatureSet atoms_;
  TaskSpec task_;
  int state_ = 0;
  bool done_ = true;
};

// Deterministic gridworld on width x height cells, 4 actions
// (up, down, left, right) with wall clamping. The feature atom of a
// transition is the quadrant of the arrival cell, giving 4 atoms.
// Continuing (no terminal states).
oracle::TabularModel make_gridworld(int width, int height, double gamma);

// Two-state deterministic chain: action 0 moves 0 -> 1, state 1 absorbs.
// Atom = arrival state.
oracle::TabularModel make_two_state_chain(double gamma);

}  // namespace xisf::envs
