#pragma once

#include <functional>

#include "xisf/core.hpp"

namespace xisf::learnfeat {

struct OfflineFit {
  Vec w;
  double mae = 0.0;  // mean absolute error of w at the end of the fit
};

// L1 fit of r ~= phi^T w over an enumerable atom set by subgradient
// descent, delta_w = eta_k * mean(sign(R(phi) - phi^T w) * phi).
// The step decays as eta / (k+1) and the best iterate by MAE is returned;
// a constant step cannot settle below its own magnitude.
OfflineFit fit_weights_offline(const TaskSpec& reward,
                               const DiscreteFeatureSet& atoms,
                               int iters = 10000, double eta = 1.0);

// Sampled variant for continuous features: each iteration draws
// `points_per_iter` feature/reward pairs from `sample` (e.g. random racer
// positions). Steps decay as eta / sqrt(k+1); the tail-averaged iterate is
// returned with its MAE estimated on a fresh sample.
OfflineFit fit_weights_offline_sampled(
    const std::function<void(FeatureVec&, double&)>& sample, int feature_dim,
    int iters = 10000, double eta = 1.0, int points_per_iter = 50);

// One squared-error SGD step on (r - phi^T w)^2.
void fit_weights_online(Vec& w, const FeatureVec& phi, double r,
                        double alpha_w);

double mean_absolute_error(const TaskSpec& reward,
                           const DiscreteFeatureSet& atoms, const Vec& w);

}  // namespace xisf::learnfeat
