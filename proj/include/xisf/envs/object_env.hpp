#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xisf/envs/encoding.hpp"

namespace xisf::envs {

enum class ObjectColor { kOrange, kBlue, kPink };
enum class ObjectShape { kBox, kTriangle, kNone };

struct ObjectRecord {
  double x = 0.0, y = 0.0;
  ObjectColor color = ObjectColor::kOrange;
  ObjectShape shape = ObjectShape::kBox;
};

enum class ObjectVariant {
  kModified,  // 2 properties (color x shape), 5-dim features, 6 atoms
  kOriginal   // 3 colors, 4-dim features, 5 atoms
};

//4-room area on [0,1]^2. Walls of width 0.04 along x=0.5 and y=0.5 with a
// centered door gap of width 0.12 per wall half. Moves are stochastic
// (step length N(0.05, 0.005)); moves into walls or out of bounds leave
// the agent in place. Collecting an object or reaching the goal circle at
// (0.86, 0.86) r=0.1 emits the matching feature atom; the goal terminates
// the episode.
class ObjectCollectionEnv : public Environment {
 public:
  explicit ObjectCollectionEnv(ObjectVariant variant = ObjectVariant::kModified,
                               std::vector<ObjectRecord> objects = {},
                               double rbf_sigma = kDefaultPositionSigma);

  int state_dim() const override { return kPositionCells + kNumObjects + 1; }
  int action_count() const override { return 4; }  // up, down, left, right
  int feature_dim() const override {
    return variant_ == ObjectVariant::kModified ? 5 : 4;
  }
  const DiscreteFeatureSet* feature_atoms() const override { return &atoms_; }

  void set_task(TaskSpec task) override { task_ = std::move(task); }
  const TaskSpec& task() const override { return task_; }

  StateVec reset(RandomStream& rng) override;
  Transition step(ActionId a, RandomStream& rng) override;

  // True when the episode ended, by goal or by the optional step cap.
  bool episode_finished() const override { return episode_done_; }

  // Optional per-episode step cap (off by default). Hitting it ends the
  // episode without a terminal transition.
  void set_episode_cap(std::optional<int> cap) { episode_cap_ = cap; }

  const std::vector<ObjectRecord>& objects() const { return objects_; }
  int collected_count() const;

  // Test hook: place the agent without taking a step.
  void debug_set_position(double x, double y) { x_ = x; y_ = y; }
  double agent_x() const { return x_; }
  double agent_y() const { return y_; }

  static bool in_wall(double x, double y);
  static std::vector<ObjectRecord> default_layout(ObjectVariant variant);
  static std::vector<ObjectRecord> load_layout(const std::string& path);

  static constexpr int kNumObjects = 12;
  static constexpr double kObjectRadius = 0.04;
  static constexpr double kGoalX = 0.86, kGoalY = 0.86, kGoalRadius = 0.1;
  static constexpr double kStartX = 0.05, kStartY = 0.05;

 private:
  StateVec observe() const;
  FeatureVec feature_for(int collected_object, bool reached_goal) const;

  ObjectVariant variant_;
  std::vector<ObjectRecord> objects_;
  double rbf_sigma_;
  DiscreteFeatureSet atoms_;
  TaskSpec task_;

  double x_ = kStartX, y_ = kStartY;
  std::vector<bool> collected_;
  bool episode_done_ = true;
  std::optional<int> episode_cap_;
  int episode_steps_ = 0;
};

}  // namespace xisf::envs
