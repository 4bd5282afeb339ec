#pragma once

#include "xisf/agents/gpi.hpp"
#include "xisf/agents/agent.hpp"

namespace xisf::agents {

// Triangular hat activation of a feature value over the fixed bin grid:
// u_j = max(0, 1 - |X_j - phi_k| / delta). At most two adjacent bins are
// nonzero and they sum to 1 for phi_k in [0, 1].
void cxi_encode(double phi_k, Vec& out, int bins = 11, double delta = 0.1);

// xi-learning for continuous features: each feature dimension k owns an
// independent xi head over U = 11 bin centers X = {0.0, 0.1, ..., 1.0},
// and Q sums reward-at-center times xi over dimensions and bins. Requires
// a per-dimension additive reward decomposition.
class CXiAgent : public Agent {
 public:
  struct Options {
    AgentConfig config;
    // Builds the per-dimension approximator (output_dim == bins).
    ValueFactory dim_value_factory;
    RewardModelFactory reward_factory;
    int feature_dims = 3;
    int bins = 11;
  };

  CXiAgent(Options opts, RandomStream init_rng);

  void begin_task(int task_index, const TaskSpec& task) override;
  ActionId act(const StateVec& s, RandomStream& rng) override;
  void observe(const Transition& tr) override;
  Vec q_values(const StateVec& s) override;

  const PolicyLibrary* library() const override { return &library_; }
  int last_source_policy() const { return last_c_; }

  double bin_center(int u) const { return u * delta_; }

 private:
  double update_rate(const StateVec& s, int a);
  void fill_bin_rewards(const RewardModel& reward, std::vector<Vec>& out);
  void cxi_update(PolicyEntry& entry, const Transition& tr, int next_action,
                  double gamma_t, double rate);

  Options opts_;
  double delta_;
  RandomStream init_rng_;
  PolicyLibrary library_;
  int last_c_ = 0;
  std::vector<long> visits_;
  std::vector<Vec> bins_i_, bins_c_;
  Vec scratch_, encoded_, next_xi_, target_;
};

}  // namespace xisf::agents
