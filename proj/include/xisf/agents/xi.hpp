#pragma once

#include "xisf/agents/gpi.hpp"
#include "xisf/agents/agent.hpp"
#include "xisf/approx/softmax_model.hpp"

namespace xisf::agents {

// xi-learning over a discrete feature-atom set: each task entry stores
// xi(s,a,phi) with one output per atom, acting uses GPI across entries
// with the current task's reward model.
//
// Model-free mode uses a one-hot immediate term for the observed atom.
// Model-based mode maintains a shared one-step feature model (softmax
// logits, or a probability table in tabular mode), initialized once at the
// first task, and uses its prediction as the immediate term.
class XiAgent : public Agent {
 public:
  struct Options {
    AgentConfig config;
    ValueFactory value_factory;
    RewardModelFactory reward_factory;
    const DiscreteFeatureSet* atoms = nullptr;
    bool model_based = false;
    // Shape of the shared feature model (model-based mode).
    int state_dim = 0;
    int actions = 0;
    bool tabular_feature_model = false;
    bool feature_model_visit_average = false;  // beta_k = 1 / n(s,a)
  };

  XiAgent(Options opts, RandomStream init_rng);

  void begin_task(int task_index, const TaskSpec& task) override;
  ActionId act(const StateVec& s, RandomStream& rng) override;
  void observe(const Transition& tr) override;
  Vec q_values(const StateVec& s) override;

  const PolicyLibrary* library() const override { return &library_; }
  int last_source_policy() const { return last_c_; }

  const approx::SoftmaxFeatureModel* feature_model() const {
    return softmax_model_.get();
  }
  const approx::TabularFeatureModel* tabular_feature_model() const {
    return tabular_model_.get();
  }

 private:
  double update_rate(const StateVec& s, int a);
  void xi_update(PolicyEntry& entry, const Transition& tr, int next_action,
                 const Vec& immediate, double gamma_t, double rate);

  Options opts_;
  RandomStream init_rng_;
  PolicyLibrary library_;
  int last_c_ = 0;
  std::vector<long> visits_;
  std::unique_ptr<approx::SoftmaxFeatureModel> softmax_model_;
  std::unique_ptr<approx::TabularFeatureModel> tabular_model_;
  Vec scratch_, rewards_i_, rewards_c_, immediate_, next_xi_, target_;
};

}  // namespace xisf::agents
