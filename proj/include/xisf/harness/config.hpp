#pragma once

#include <optional>
#include <string>

#include "xisf/agents/agent.hpp"
#include "xisf/envs/tasks.hpp"
#include "xisf/learnfeat/feature_learner.hpp"

namespace xisf::harness {

enum class EnvKind { kObject, kObjectOriginal, kRacer, kTabular };
enum class AgentKind { kQL, kSFQL, kXi, kMBXi, kCXi };
enum class RewardMode { kGiven, kPrefitLinear, kOnline };

struct FeatureModeConfig {
  bool learned = false;
  int h = 4;
  learnfeat::FeatureLearnConfig learner;
};

struct TabularConfig {
  // Presets: "grid4x4" (default) or "grid<W>x<H>".
  std::string preset = "grid4x4";
  int start_state = 0;
};

struct RunConfig {
  EnvKind env = EnvKind::kObject;
  AgentKind agent = AgentKind::kQL;
  envs::RewardKind reward_kind = envs::RewardKind::kGeneral;
  RewardMode reward_mode = RewardMode::kGiven;
  FeatureModeConfig feature_mode;
  int num_tasks = 30;
  int steps_per_task = 5000;     // object / tabular
  int episodes_per_task = 200;   // racer
  Hyperparams hp;
  std::uint64_t seed = 1;
  std::string output_dir;
  std::optional<int> episode_cap;
  double rbf_sigma = envs::kDefaultPositionSigma;
  TabularConfig tabular;
  // Tabular-mode updates (convex mix + optional Robbins-Monro schedule).
  bool tabular_updates = false;
  agents::RateSchedule schedule;
  std::string object_layout_file;  // optional override
  bool save_policies = false;

  void validate() const;
  std::string agent_name() const;
};

RunConfig load_config_file(const std::string& path);
RunConfig parse_config_json(const std::string& text);

}  // namespace xisf::harness
