#pragma once

#include "xisf/approx/value_approx.hpp"

namespace xisf::approx {

// Independent linear mapping s^T theta[a][k] per action and output.
// theta layout: [(a*K + k) * state_dim + d]. With one-hot states this is a
// plain table, and tabular_step applies the convex-mix update directly.
class LinearValueMap : public ValueApprox {
 public:
  LinearValueMap(int state_dim, int actions, int outputs, InitScheme init,
                 RandomStream& rng);

  int state_dim() const override { return state_dim_; }
  int action_count() const override { return actions_; }
  int output_dim() const override { return outputs_; }

  void predict(const StateVec& s, int a, Vec& out) const override;
  void predict_all(const StateVec& s, Vec& out) const override;
  void sgd_step(const StateVec& s, int a, const Vec& target,
                double alpha) override;

  // theta[s_idx] <- (1-alpha) theta[s_idx] + alpha target, per output.
  // The tabular iterate; valid when states are one-hot indices.
  void tabular_step(int state_index, int a, const Vec& target, double alpha);

  double value_at(int state_index, int a, int k) const {
    return theta_[(static_cast<std::size_t>(a) * outputs_ + k) * state_dim_ +
                  state_index];
  }

  std::unique_ptr<ValueApprox> clone() const override {
    return std::make_unique<LinearValueMap>(*this);
  }

  Vec params_copy() const override { return theta_; }
  void set_params(const Vec& params) override { theta_ = params; }
  Vec& params() { return theta_; }
  std::string descriptor() const override;

 private:
  int state_dim_, actions_, outputs_;
  Vec theta_;
};

// Finds the index of the single nonzero entry of a one-hot state.
int one_hot_index(const StateVec& s);

}  // namespace xisf::approx
