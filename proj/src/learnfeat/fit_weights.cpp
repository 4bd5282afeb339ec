#include "xisf/learnfeat/fit_weights.hpp"

#include <cmath>

namespace xisf::learnfeat {

namespace {

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

double mean_absolute_error(const TaskSpec& reward,
                           const DiscreteFeatureSet& atoms, const Vec& w) {
  double mae = 0.0;
  for (const FeatureVec& phi : atoms.atoms)
    mae += std::abs(reward.evaluate(phi) - dot(phi.values, w));
  return mae / atoms.size();
}

OfflineFit fit_weights_offline(const TaskSpec& reward,
                               const DiscreteFeatureSet& atoms, int iters,
                               double eta) {
  const int n = atoms.atoms.front().dim();
  Vec w(n, 0.0), grad(n);
  Vec best = w;
  double best_mae = mean_absolute_error(reward, atoms, w);
  for (int k = 0; k < iters; ++k) {
    std::fill(grad.begin(), grad.end(), 0.0);
    for (const FeatureVec& phi : atoms.atoms) {
      const double s = sign(reward.evaluate(phi) - dot(phi.values, w));
      if (s == 0.0) continue;
      for (int d = 0; d < n; ++d) grad[d] += s * phi.values[d];
    }
    const double step = eta / (k + 1.0) / atoms.size();
    for (int d = 0; d < n; ++d) w[d] += step * grad[d];
    const double mae = mean_absolute_error(reward, atoms, w);
    if (mae < best_mae) {
      best_mae = mae;
      best = w;
    }
  }
  return {std::move(best), best_mae};
}

OfflineFit fit_weights_offline_sampled(
    const std::function<void(FeatureVec&, double&)>& sample, int feature_dim,
    int iters, double eta, int points_per_iter) {
  Vec w(feature_dim, 0.0), grad(feature_dim);
  Vec avg(feature_dim, 0.0);
  long avg_count = 0;
  FeatureVec phi;
  double r = 0.0;
  for (int k = 0; k < iters; ++k) {
    std::fill(grad.begin(), grad.end(), 0.0);
    for (int p = 0; p < points_per_iter; ++p) {
      sample(phi, r);
      const double s = sign(r - dot(phi.values, w));
      for (int d = 0; d < feature_dim; ++d) grad[d] += s * phi.values[d];
    }
    const double step = eta / std::sqrt(k + 1.0) / points_per_iter;
    for (int d = 0; d < feature_dim; ++d) w[d] += step * grad[d];
    if (k >= iters / 2) {  // tail average
      ++avg_count;
      for (int d = 0; d < feature_dim; ++d)
        avg[d] += (w[d] - avg[d]) / avg_count;
    }
  }
  double mae = 0.0;
  const int eval_points = 1000;
  for (int p = 0; p < eval_points; ++p) {
    sample(phi, r);
    mae += std::abs(r - dot(phi.values, avg));
  }
  return {std::move(avg), mae / eval_points};
}

void fit_weights_online(Vec& w, const FeatureVec& phi, double r,
                        double alpha_w) {
  const double residual = r - dot(phi.values, w);
  const double step = 2.0 * alpha_w * residual;
  for (std::size_t d = 0; d < w.size(); ++d) w[d] += step * phi.values[d];
}

}  // namespace xisf::learnfeat
