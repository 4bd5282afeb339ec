#pragma once

#include <memory>

#include "xisf/envs/object_env.hpp"
#include "xisf/envs/racer_env.hpp"

namespace xisf::envs {

enum class RewardKind { kLinear, kGeneral, kRacer };

// Linear object-env task: object weights ~ U(-1,1), goal weight fixed to 1.
TaskSpec sample_linear_object_task(RandomStream& rng, ObjectVariant variant);

// General object-env task over the atom set: R(no-event) = 0, R(goal) = 1,
// object atoms ~ U(-1,1). `amplitude` widens the object-reward range
// (used by the nonlinearity study; 1.0 reproduces the standard tasks).
TaskSpec sample_general_object_task(
    RandomStream& rng, std::shared_ptr<const DiscreteFeatureSet> atoms,
    double amplitude = 1.0);

// Racer task: per dimension 1 or 2 Gaussian components with
// mu ~ U(0, 0.7), sigma ~ U(0.001, 0.01).
TaskSpec sample_racer_task(RandomStream& rng);

TaskSpec sample_task(RewardKind kind, RandomStream& rng,
                     std::shared_ptr<const DiscreteFeatureSet> atoms,
                     ObjectVariant variant = ObjectVariant::kModified);

// Rejection-samples general object tasks until the mean absolute error of
// the best offline linear fit lands in [lo, hi). Throws after
// `attempt_budget` rejected candidates. Object-reward amplitude scales
// with `hi` so that high-error buckets are reachable.
TaskSpec sample_task_at_nonlinearity(
    double lo, double hi, RandomStream& rng,
    std::shared_ptr<const DiscreteFeatureSet> atoms, int attempt_budget = 20000,
    double* fitted_mae = nullptr);

}  // namespace xisf::envs
