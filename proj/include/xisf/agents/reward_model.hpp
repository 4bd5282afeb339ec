#pragma once

#include <memory>

#include "xisf/approx/mlp.hpp"

namespace xisf::agents {

// A task's reward knowledge as the agents consume it: per-atom rewards for
// discrete GPI, per-dimension rewards at bin centers for CXi, and the
// weight vector when the model is linear.
class RewardModel {
 public:
  virtual ~RewardModel() = default;

  // Rewards of each feature atom, in atom order. out sized by callee.
  virtual void atom_rewards(Vec& out) const = 0;

  // Additive per-dimension reward r_k(x).
  virtual double dim_reward(int k, double x) const = 0;

  // Linear weight vector, or nullptr when not linear.
  virtual const Vec* linear_weights() const { return nullptr; }

  // Online update from an observed transition (no-op for fixed models).
  virtual void observe(const FeatureVec& phi, double r) { (void)phi; (void)r; }

  virtual bool trainable() const { return false; }

  virtual std::unique_ptr<RewardModel> clone() const = 0;
  virtual std::string descriptor() const = 0;
};

// The true TaskSpec, given to the agent.
class GivenReward : public RewardModel {
 public:
  GivenReward(TaskSpec task, const DiscreteFeatureSet* atoms);

  void atom_rewards(Vec& out) const override { out = per_atom_; }
  double dim_reward(int k, double x) const override {
    return task_.evaluate_dim(k, x);
  }
  const Vec* linear_weights() const override {
    return task_.is_linear() ? &task_.linear_weights() : nullptr;
  }
  std::unique_ptr<RewardModel> clone() const override {
    return std::make_unique<GivenReward>(*this);
  }
  std::string descriptor() const override { return "given"; }

 private:
  TaskSpec task_;
  Vec per_atom_;
};

// Linear reward weights w~, optionally updated online by squared-error SGD.
class LinearReward : public RewardModel {
 public:
  LinearReward(Vec w, const DiscreteFeatureSet* atoms, bool train,
               double alpha_w);

  void atom_rewards(Vec& out) const override;
  double dim_reward(int k, double x) const override { return w_[k] * x; }
  const Vec* linear_weights() const override { return &w_; }
  void observe(const FeatureVec& phi, double r) override;
  bool trainable() const override { return train_; }
  std::unique_ptr<RewardModel> clone() const override {
    return std::make_unique<LinearReward>(*this);
  }
  std::string descriptor() const override {
    return train_ ? "linear-online" : "linear-fixed";
  }

  const Vec& weights() const { return w_; }

 private:
  Vec w_;
  const DiscreteFeatureSet* atoms_;
  bool train_;
  double alpha_w_;
};

// Nonlinear reward regressor over features (one hidden layer of 10 ReLU
// units), learned online.
class MlpReward : public RewardModel {
 public:
  MlpReward(int feature_dim, const DiscreteFeatureSet* atoms, double alpha_r,
            RandomStream& rng);

  void atom_rewards(Vec& out) const override;
  double dim_reward(int, double) const override {
    throw std::logic_error("MlpReward: no per-dimension decomposition");
  }
  void observe(const FeatureVec& phi, double r) override {
    net_.step(phi, r, alpha_r_);
  }
  bool trainable() const override { return true; }
  std::unique_ptr<RewardModel> clone() const override {
    return std::make_unique<MlpReward>(*this);
  }
  std::string descriptor() const override { return "mlp-online"; }

  approx::RewardMlp& net() { return net_; }

 private:
  approx::RewardMlp net_;
  const DiscreteFeatureSet* atoms_;
  double alpha_r_;
};

}  // namespace xisf::agents
