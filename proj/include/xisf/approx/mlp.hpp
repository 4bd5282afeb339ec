#pragma once

#include <vector>

#include "xisf/approx/value_approx.hpp"

namespace xisf::approx {

// Small fully connected network, ReLU hidden layers, linear output,
// hand-derived backprop. ReLU subgradient at 0 is 0.
class Mlp {
 public:
  Mlp(std::vector<int> layer_sizes, InitScheme init, RandomStream& rng);

  int input_dim() const { return sizes_.front(); }
  int output_dim() const { return sizes_.back(); }

  // Returns the output activations; valid until the next call.
  const Vec& forward(const double* x, int n) const;

  // One gradient step from dL/d(output), reusing the last forward pass.
  // Caller guarantees `forward` was invoked with the same input.
  void apply_output_gradient(const double* x, const Vec& dl_dout,
                             double alpha);

  Vec& params() { return params_; }
  const Vec& params() const { return params_; }
  const std::vector<int>& layer_sizes() const { return sizes_; }

 private:
  std::vector<int> sizes_;
  Vec params_;  // per layer: weights (out*in), then biases (out)
  std::vector<std::size_t> offsets_;
  mutable std::vector<Vec> acts_;  // activations per layer (post-ReLU)
  mutable std::vector<Vec> pre_;   // pre-activations per layer
};

// ValueApprox adapter over an Mlp with A*K outputs, action-major.
class MlpValueApprox : public ValueApprox {
 public:
  MlpValueApprox(std::vector<int> hidden, int state_dim, int actions,
                 int outputs, InitScheme init, RandomStream& rng);

  int state_dim() const override { return state_dim_; }
  int action_count() const override { return actions_; }
  int output_dim() const override { return outputs_; }

  void predict(const StateVec& s, int a, Vec& out) const override;
  void predict_all(const StateVec& s, Vec& out) const override;
  void sgd_step(const StateVec& s, int a, const Vec& target,
                double alpha) override;

  std::unique_ptr<ValueApprox> clone() const override {
    return std::make_unique<MlpValueApprox>(*this);
  }

  Vec params_copy() const override { return net_.params(); }
  void set_params(const Vec& params) override { net_.params() = params; }
  Mlp& net() { return net_; }
  std::string descriptor() const override;

 private:
  int state_dim_, actions_, outputs_;
  Mlp net_;
  mutable Vec dout_;
};

// Scalar reward regressor over features: one hidden layer of 10 ReLU units.
class RewardMlp {
 public:
  RewardMlp(int feature_dim, InitScheme init, RandomStream& rng);

  double value(const FeatureVec& phi) const;
  // One SGD step on (r - net(phi))^2.
  void step(const FeatureVec& phi, double r, double alpha_r);

  Mlp& net() { return net_; }
  const Mlp& net() const { return net_; }

 private:
  Mlp net_;
};

}  // namespace xisf::approx
