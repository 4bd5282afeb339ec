#pragma once

#include "xisf/agents/agent.hpp"

namespace xisf::agents {

// Plain Q-learning with one SGD step on the squared TD error per
// transition. Parameters are reinitialized at every task start.
class QlAgent : public Agent {
 public:
  QlAgent(AgentConfig config, ValueFactory factory, RandomStream init_rng);

  void begin_task(int task_index, const TaskSpec& task) override;
  ActionId act(const StateVec& s, RandomStream& rng) override;
  void observe(const Transition& tr) override;
  Vec q_values(const StateVec& s) override;

  const approx::ValueApprox& value() const { return *value_; }

 private:
  double update_rate(const StateVec& s, int a);

  AgentConfig config_;
  ValueFactory factory_;
  RandomStream init_rng_;
  std::unique_ptr<approx::ValueApprox> value_;
  std::vector<long> visits_;
  Vec scratch_, q_, target_;
};

}  // namespace xisf::agents
