#pragma once

#include "xisf/learnfeat/transition_log.hpp"

namespace xisf::learnfeat {

// Learned feature map phi~(s, s') = sigmoid(concat(s, s')^T H), range
// (0,1)^h.
struct FeatureMap {
  int input_dim = 0;  // 2 * state_dim
  int h = 0;
  Vec H;  // column-major per output: H[m * input_dim + d]

  FeatureVec apply(const Vec& s, const Vec& s_next) const;
};

struct FeatureLearnConfig {
  int iterations = 50000;  // protocol value: 1,000,000
  int batch_size = 128;
  double learning_rate = 0.003;
  double init_std = 0.05;
  int warmup_tasks = 20;
  // Fraction of zero-reward transitions kept (object env keeps 0.25;
  // racer keeps all).
  double zero_reward_keep = 0.25;
  // Adam moment constants (canonical defaults).
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
};

struct FeatureLearnResult {
  FeatureMap features;
  std::vector<Vec> task_weights;  // per warm-up task, length h
  double final_loss = 0.0;        // running mean of recent batch losses
};

// Jointly optimizes H and per-task reward weights on the logged warm-up
// transitions with mini-batch Adam, minimizing
// (sigmoid(c^T H)^T w_i - r)^2.
FeatureLearnResult learn_features(const TransitionLog& log, int h,
                                  const FeatureLearnConfig& config,
                                  RandomStream& rng);

// Loss/gradient of one batch, exposed for gradient checking. Parameter
// layout: H (input_dim * h) followed by w_i blocks (num_tasks * h). Batch
// entries are record indices into the log.
double feature_batch_loss(const Vec& params, const TransitionLog& log,
                          const std::vector<std::size_t>& batch, int h,
                          int num_tasks);
void feature_batch_grad(const Vec& params, const TransitionLog& log,
                        const std::vector<std::size_t>& batch, int h,
                        int num_tasks, Vec& grad);

}  // namespace xisf::learnfeat
