#pragma once

#include <functional>

#include "xisf/agents/policy_library.hpp"

namespace xisf::agents {

// Learning-rate schedule for value updates. Robbins-Monro mode keeps a
// per-(state,action) visit count and uses alpha0 * c / (c + visits); it
// requires one-hot states (tabular runs).
struct RateSchedule {
  enum Kind { kConstant, kRobbinsMonro } kind = kConstant;
  double alpha0 = 1.0;
  double c = 1000.0;
};

struct AgentConfig {
  Hyperparams hp;
  RateSchedule schedule;
  // Convex-mix table updates on one-hot states instead of SGD on the
  // squared loss (the tabular iterate of the update equations).
  bool tabular_updates = false;
};

// Builds a fresh value approximator for the first task.
using ValueFactory =
    std::function<std::unique_ptr<approx::ValueApprox>(RandomStream&)>;

// Builds the reward model handed to a task's library entry.
using RewardModelFactory = std::function<std::unique_ptr<RewardModel>(
    int task_index, const TaskSpec& task, RandomStream&)>;

// A learning agent bound to one environment instance. Single-threaded.
class Agent {
 public:
  virtual ~Agent() = default;

  // Starts task `task_index` (0-based, consecutive). The TaskSpec is the
  // environment's true reward definition; whether the agent sees it is
  // decided by its reward-model factory.
  virtual void begin_task(int task_index, const TaskSpec& task) = 0;

  // Epsilon-greedy action for the current task.
  virtual ActionId act(const StateVec& s, RandomStream& rng) = 0;

  // Learns from the transition produced by the action returned by the
  // preceding act() call.
  virtual void observe(const Transition& tr) = 0;

  // Greedy value estimates the agent is acting on (diagnostics, tests).
  virtual Vec q_values(const StateVec& s) = 0;

  virtual const PolicyLibrary* library() const { return nullptr; }
};

// Epsilon-greedy over precomputed action values.
ActionId epsilon_greedy(const Vec& q, double epsilon, RandomStream& rng);

}  // namespace xisf::agents
