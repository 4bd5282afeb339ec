#pragma once

#include "xisf/agents/gpi.hpp"
#include "xisf/agents/agent.hpp"

namespace xisf::agents {

// Classical successor-feature Q-learning with GPI across the task library.
// Each task entry carries its psi approximator and a linear reward model;
// acting maximizes psi_c(s,a)^T w_i over the GPI-selected policy c.
class SfqlAgent : public Agent {
 public:
  SfqlAgent(AgentConfig config, ValueFactory factory,
            RewardModelFactory reward_factory, RandomStream init_rng);

  void begin_task(int task_index, const TaskSpec& task) override;
  ActionId act(const StateVec& s, RandomStream& rng) override;
  void observe(const Transition& tr) override;
  Vec q_values(const StateVec& s) override;

  const PolicyLibrary* library() const override { return &library_; }
  int last_source_policy() const { return last_c_; }

 private:
  double update_rate(const StateVec& s, int a);
  void psi_update(PolicyEntry& entry, const Transition& tr, int next_action,
                  double gamma_t, double rate);

  AgentConfig config_;
  ValueFactory factory_;
  RewardModelFactory reward_factory_;
  RandomStream init_rng_;
  PolicyLibrary library_;
  int last_c_ = 0;
  std::vector<long> visits_;
  Vec scratch_, next_psi_, target_;
};

}  // namespace xisf::agents
