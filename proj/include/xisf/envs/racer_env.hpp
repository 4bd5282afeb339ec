#pragma once

#include <array>

#include "xisf/envs/encoding.hpp"

namespace xisf::envs {

// Car-like agent on the unit torus. Actions: right (turn +pi/7, move 0.06),
// straight (move 0.075), left (turn -pi/7, move 0.06). Gaussian noise
// (sigma 0.005) is added jointly to the final x, y and theta. Features are
// torus distances to 3 fixed markers, normalized by sqrt(0.5). Episodes
// last exactly 200 steps.
class RacerEnv : public Environment {
 public:
  RacerEnv() = default;

  int state_dim() const override {
    return kPositionCells + kOrientationCells;
  }
  int action_count() const override { return 3; }
  int feature_dim() const override { return 3; }

  void set_task(TaskSpec task) override { task_ = std::move(task); }
  const TaskSpec& task() const override { return task_; }

  StateVec reset(RandomStream& rng) override;
  Transition step(ActionId a, RandomStream& rng) override;

  bool episode_finished() const override { return step_count_ >= kEpisodeLength; }

  FeatureVec features_at(double x, double y) const;

  // Test hook.
  void debug_set_pose(double x, double y, double theta) {
    x_ = x; y_ = y; theta_ = theta;
  }
  double agent_x() const { return x_; }
  double agent_y() const { return y_; }
  double agent_theta() const { return theta_; }

  static constexpr int kEpisodeLength = 200;
  static constexpr double kMaxDistance = 0.70710678118654752440;  // sqrt(.5)
  static constexpr std::array<std::array<double, 2>, 3> kMarkers = {
      {{0.25, 0.75}, {0.75, 0.25}, {0.75, 0.6}}};

 private:
  StateVec observe() const;

  TaskSpec task_;
  double x_ = 0.5, y_ = 0.5, theta_ = 0.0;
  int step_count_ = kEpisodeLength;
};

}  // namespace xisf::envs
