#include "xisf/learnfeat/feature_learner.hpp"

#include <cmath>
#include <stdexcept>

namespace xisf::learnfeat {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// phi~ for one record given H at `params` (prefix of the parameter vector).
void learned_features(const Vec& params, const LoggedTransition& rec, int h,
                      Vec& out) {
  const int sd = static_cast<int>(rec.s.size());
  const int input_dim = 2 * sd;
  out.resize(h);
  for (int m = 0; m < h; ++m) {
    const double* col = params.data() + static_cast<std::size_t>(m) * input_dim;
    double acc = 0.0;
    for (int d = 0; d < sd; ++d) acc += col[d] * rec.s[d];
    for (int d = 0; d < sd; ++d) acc += col[sd + d] * rec.s_next[d];
    out[m] = sigmoid(acc);
  }
}

}  // namespace

FeatureVec FeatureMap::apply(const Vec& s, const Vec& s_next) const {
  const int sd = static_cast<int>(s.size());
  FeatureVec phi;
  phi.values.resize(h);
  for (int m = 0; m < h; ++m) {
    const double* col = H.data() + static_cast<std::size_t>(m) * input_dim;
    double acc = 0.0;
    for (int d = 0; d < sd; ++d) acc += col[d] * s[d];
    for (int d = 0; d < sd; ++d) acc += col[sd + d] * s_next[d];
    phi.values[m] = sigmoid(acc);
  }
  return phi;
}

double feature_batch_loss(const Vec& params, const TransitionLog& log,
                          const std::vector<std::size_t>& batch, int h,
                          int num_tasks) {
  const int input_dim = 2 * log.state_dim();
  (void)num_tasks;
  Vec phi;
  double loss = 0.0;
  for (std::size_t idx : batch) {
    const auto& rec = log[idx];
    learned_features(params, rec, h, phi);
    const double* w = params.data() +
                      static_cast<std::size_t>(input_dim) * h +
                      static_cast<std::size_t>(rec.task_id) * h;
    double pred = 0.0;
    for (int m = 0; m < h; ++m) pred += phi[m] * w[m];
    const double e = pred - rec.reward;
    loss += e * e;
  }
  return loss / batch.size();
}

void feature_batch_grad(const Vec& params, const TransitionLog& log,
                        const std::vector<std::size_t>& batch, int h,
                        int num_tasks, Vec& grad) {
  const int sd = log.state_dim();
  const int input_dim = 2 * sd;
  (void)num_tasks;
  grad.assign(params.size(), 0.0);
  Vec phi;
  const double scale = 2.0 / batch.size();
  for (std::size_t idx : batch) {
    const auto& rec = log[idx];
    learned_features(params, rec, h, phi);
    const std::size_t w_off = static_cast<std::size_t>(input_dim) * h +
                              static_cast<std::size_t>(rec.task_id) * h;
    const double* w = params.data() + w_off;
    double pred = 0.0;
    for (int m = 0; m < h; ++m) pred += phi[m] * w[m];
    const double e = scale * (pred - rec.reward);
    for (int m = 0; m < h; ++m) {
      grad[w_off + m] += e * phi[m];
      const double gate = e * w[m] * phi[m] * (1.0 - phi[m]);
      if (gate == 0.0) continue;
      double* gcol = grad.data() + static_cast<std::size_t>(m) * input_dim;
      for (int d = 0; d < sd; ++d) gcol[d] += gate * rec.s[d];
      for (int d = 0; d < sd; ++d) gcol[sd + d] += gate * rec.s_next[d];
    }
  }
}

FeatureLearnResult learn_features(const TransitionLog& log, int h,
                                  const FeatureLearnConfig& config,
                                  RandomStream& rng) {
  if (log.max_task_id() + 1 < config.warmup_tasks)
    throw std::invalid_argument("learn_features: log lacks warm-up tasks");
  const int num_tasks = config.warmup_tasks;
  const int input_dim = 2 * log.state_dim();

  // Restrict to warm-up tasks and apply the zero-reward filter.
  RandomStream filter_rng = rng.derive("zero-filter");
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < log.size(); ++i) {
    if (log[i].task_id >= num_tasks) continue;
    if (log[i].reward == 0.0 && !filter_rng.bernoulli(config.zero_reward_keep))
      continue;
    pool.push_back(i);
  }
  if (pool.empty()) throw std::invalid_argument("learn_features: empty pool");

  Vec params(static_cast<std::size_t>(input_dim) * h +
             static_cast<std::size_t>(num_tasks) * h);
  for (double& v : params) v = rng.normal(0.0, config.init_std);

  Vec grad, m1(params.size(), 0.0), m2(params.size(), 0.0);
  std::vector<std::size_t> batch(config.batch_size);
  double running = 0.0;
  long running_n = 0;
  for (int it = 1; it <= config.iterations; ++it) {
    for (auto& b : batch)
      b = pool[static_cast<std::size_t>(rng.uniform_int(
          static_cast<int>(pool.size())))];
    feature_batch_grad(params, log, batch, h, num_tasks, grad);
    const double bc1 = 1.0 - std::pow(config.adam_beta1, it);
    const double bc2 = 1.0 - std::pow(config.adam_beta2, it);
    for (std::size_t i = 0; i < params.size(); ++i) {
      m1[i] = config.adam_beta1 * m1[i] + (1.0 - config.adam_beta1) * grad[i];
      m2[i] = config.adam_beta2 * m2[i] +
              (1.0 - config.adam_beta2) * grad[i] * grad[i];
      params[i] -= config.learning_rate * (m1[i] / bc1) /
                   (std::sqrt(m2[i] / bc2) + config.adam_eps);
    }
    if (it > config.iterations - 200) {
      running += feature_batch_loss(params, log, batch, h, num_tasks);
      ++running_n;
    }
  }

  FeatureLearnResult result;
  result.features.input_dim = input_dim;
  result.features.h = h;
  result.features.H.assign(params.begin(),
                           params.begin() + static_cast<std::size_t>(input_dim) * h);
  result.task_weights.resize(num_tasks);
  for (int i = 0; i < num_tasks; ++i) {
    const double* w = params.data() + static_cast<std::size_t>(input_dim) * h +
                      static_cast<std::size_t>(i) * h;
    result.task_weights[i].assign(w, w + h);
  }
  result.final_loss = running_n ? running / running_n : 0.0;
  return result;
}

}  // namespace xisf::learnfeat
