#include "xisf/envs/tasks.hpp"

#include <stdexcept>

#include "xisf/learnfeat/fit_weights.hpp"

namespace xisf::envs {

TaskSpec sample_linear_object_task(RandomStream& rng, ObjectVariant variant) {
  const int n = variant == ObjectVariant::kModified ? 5 : 4;
  LinearWeights lin;
  lin.w.resize(n);
  for (int k = 0; k + 1 < n; ++k) lin.w[k] = rng.uniform(-1.0, 1.0);
  lin.w[n - 1] = 1.0;  // goal weight fixed
  return TaskSpec{lin};
}

TaskSpec sample_general_object_task(
    RandomStream& rng, std::shared_ptr<const DiscreteFeatureSet> atoms,
    double amplitude) {
  TabularRewards tab;
  tab.atoms = std::move(atoms);
  const int m = tab.atoms->size();
  tab.per_atom.assign(m, 0.0);
  tab.per_atom[0] = 0.0;  // collecting nothing
  for (int j = 1; j + 1 < m; ++j)
    tab.per_atom[j] = rng.uniform(-amplitude, amplitude);
  tab.per_atom[m - 1] = 1.0;  // goal
  return TaskSpec{tab};
}

TaskSpec sample_racer_task(RandomStream& rng) {
  PerDimGaussianMix mix;
  mix.dims.resize(3);
  for (auto& comps : mix.dims) {
    const int m = 1 + rng.uniform_int(2);
    comps.resize(m);
    for (auto& c : comps) {
      c.mu = rng.uniform(0.0, 0.7);
      c.sigma = rng.uniform(0.001, 0.01);
    }
  }
  return TaskSpec{mix};
}

TaskSpec sample_task(RewardKind kind, RandomStream& rng,
                     std::shared_ptr<const DiscreteFeatureSet> atoms,
                     ObjectVariant variant) {
  switch (kind) {
    case RewardKind::kLinear:
      return sample_linear_object_task(rng, variant);
    case RewardKind::kGeneral:
      return sample_general_object_task(rng, std::move(atoms));
    case RewardKind::kRacer:
      return sample_racer_task(rng);
  }
  throw std::logic_error("sample_task: bad kind");
}

TaskSpec sample_task_at_nonlinearity(
    double lo, double hi, RandomStream& rng,
    std::shared_ptr<const DiscreteFeatureSet> atoms, int attempt_budget,
    double* fitted_mae) {
  if (!(lo < hi)) throw std::invalid_argument("nonlinearity: lo >= hi");
  // On the object atom set the best-fit MAE is bounded by ~2/3 per unit of
  // object-reward amplitude, so high-error buckets need wider sampling.
  const double amplitude = std::max(1.0, 1.5 * hi + 1.0);
  for (int attempt = 0; attempt < attempt_budget; ++attempt) {
    TaskSpec task = sample_general_object_task(rng, atoms, amplitude);
    const auto fit = learnfeat::fit_weights_offline(task, *atoms);
    if (fit.mae >= lo && fit.mae < hi) {
      if (fitted_mae) *fitted_mae = fit.mae;
      return task;
    }
  }
  throw std::runtime_error("sample_task_at_nonlinearity: budget exhausted");
}

}  // namespace xisf::envs
