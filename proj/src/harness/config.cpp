#include "xisf/harness/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace xisf::harness {

using nlohmann::json;

void RunConfig::validate() const {
  hp.validate();
  if (num_tasks <= 0) throw std::invalid_argument("config: num_tasks <= 0");
  if (env == EnvKind::kRacer) {
    if (episodes_per_task <= 0)
      throw std::invalid_argument("config: episodes_per_task <= 0");
    if (reward_kind != envs::RewardKind::kRacer)
      throw std::invalid_argument("config: racer env needs racer rewards");
    if (agent == AgentKind::kMBXi)
      throw std::invalid_argument(
          "config: MBXi needs a discrete feature set (object or tabular env)");
    if (agent == AgentKind::kXi && !feature_mode.learned)
      throw std::invalid_argument(
          "config: discrete Xi cannot run on continuous racer features; "
          "use CXi");
  } else {
    if (steps_per_task <= 0)
      throw std::invalid_argument("config: steps_per_task <= 0");
  }
  if (env == EnvKind::kObject || env == EnvKind::kObjectOriginal) {
    if (reward_kind == envs::RewardKind::kRacer)
      throw std::invalid_argument("config: object env needs linear|general");
    if (env == EnvKind::kObjectOriginal &&
        reward_kind != envs::RewardKind::kLinear)
      throw std::invalid_argument(
          "config: the original object variant uses linear rewards");
    if (agent == AgentKind::kCXi && !feature_mode.learned &&
        reward_kind != envs::RewardKind::kLinear)
      throw std::invalid_argument(
          "config: CXi on the object env needs per-dimension rewards "
          "(linear tasks or learned features)");
  }
  if (feature_mode.learned && reward_mode != RewardMode::kOnline)
    throw std::invalid_argument(
        "config: learned features imply online reward models");
}

std::string RunConfig::agent_name() const {
  switch (agent) {
    case AgentKind::kQL: return "QL";
    case AgentKind::kSFQL: return "SFQL";
    case AgentKind::kXi: return "Xi";
    case AgentKind::kMBXi: return "MBXi";
    case AgentKind::kCXi: return "CXi";
  }
  return "?";
}

namespace {

EnvKind parse_env(const std::string& s) {
  if (s == "object") return EnvKind::kObject;
  if (s == "object_original") return EnvKind::kObjectOriginal;
  if (s == "racer") return EnvKind::kRacer;
  if (s == "tabular") return EnvKind::kTabular;
  throw std::invalid_argument("config: unknown env " + s);
}

AgentKind parse_agent(const std::string& s) {
  if (s == "QL") return AgentKind::kQL;
  if (s == "SFQL") return AgentKind::kSFQL;
  if (s == "Xi") return AgentKind::kXi;
  if (s == "MBXi") return AgentKind::kMBXi;
  if (s == "CXi") return AgentKind::kCXi;
  throw std::invalid_argument("config: unknown agent " + s);
}

envs::RewardKind parse_reward_kind(const std::string& s) {
  if (s == "linear") return envs::RewardKind::kLinear;
  if (s == "general") return envs::RewardKind::kGeneral;
  if (s == "racer") return envs::RewardKind::kRacer;
  throw std::invalid_argument("config: unknown reward_kind " + s);
}

RewardMode parse_reward_mode(const std::string& s) {
  if (s == "given") return RewardMode::kGiven;
  if (s == "prefit_linear") return RewardMode::kPrefitLinear;
  if (s == "online") return RewardMode::kOnline;
  throw std::invalid_argument("config: unknown reward_mode " + s);
}

}  // namespace

RunConfig parse_config_json(const std::string& text) {
  const json j = json::parse(text);
  RunConfig c;
  if (j.contains("env")) c.env = parse_env(j.at("env"));
  if (j.contains("agent")) c.agent = parse_agent(j.at("agent"));
  if (j.contains("reward_kind"))
    c.reward_kind = parse_reward_kind(j.at("reward_kind"));
  else if (c.env == EnvKind::kRacer)
    c.reward_kind = envs::RewardKind::kRacer;
  else if (c.env == EnvKind::kObjectOriginal)
    c.reward_kind = envs::RewardKind::kLinear;
  if (j.contains("reward_mode"))
    c.reward_mode = parse_reward_mode(j.at("reward_mode"));
  if (j.contains("feature_mode")) {
    const json& f = j.at("feature_mode");
    if (f.is_string() && f == "given") {
      c.feature_mode.learned = false;
    } else {
      c.feature_mode.learned = true;
      c.feature_mode.h = f.value("h", 4);
      c.feature_mode.learner.warmup_tasks = f.value("warmup_tasks", 20);
      c.feature_mode.learner.iterations = f.value("iterations", 50000);
      c.feature_mode.learner.batch_size = f.value("batch_size", 128);
      c.feature_mode.learner.learning_rate = f.value("learning_rate", 0.003);
      c.feature_mode.learner.zero_reward_keep =
          f.value("zero_reward_keep", 0.25);
    }
  }
  c.num_tasks = j.value("num_tasks", c.num_tasks);
  c.steps_per_task = j.value("steps_per_task", c.steps_per_task);
  c.episodes_per_task = j.value("episodes_per_task", c.episodes_per_task);
  if (j.contains("hyperparams")) {
    const json& h = j.at("hyperparams");
    c.hp.gamma = h.value("gamma", c.hp.gamma);
    c.hp.epsilon = h.value("epsilon", c.hp.epsilon);
    c.hp.alpha = h.value("alpha", c.hp.alpha);
    c.hp.alpha_w = h.value("alpha_w", c.hp.alpha_w);
    c.hp.alpha_r = h.value("alpha_r", c.hp.alpha_r);
    c.hp.beta = h.value("beta", c.hp.beta);
  }
  c.seed = j.value("seed", c.seed);
  c.output_dir = j.value("output_dir", c.output_dir);
  if (j.contains("episode_cap")) c.episode_cap = j.at("episode_cap").get<int>();
  c.rbf_sigma = j.value("rbf_sigma", c.rbf_sigma);
  if (j.contains("tabular")) {
    c.tabular.preset = j.at("tabular").value("preset", c.tabular.preset);
    c.tabular.start_state =
        j.at("tabular").value("start_state", c.tabular.start_state);
  }
  c.tabular_updates = j.value("tabular_updates", c.env == EnvKind::kTabular);
  if (j.contains("schedule")) {
    const json& s = j.at("schedule");
    const std::string kind = s.value("kind", "constant");
    if (kind == "robbins_monro") {
      c.schedule.kind = agents::RateSchedule::kRobbinsMonro;
      c.schedule.alpha0 = s.value("alpha0", 1.0);
      c.schedule.c = s.value("c", 1000.0);
    }
  }
  c.object_layout_file = j.value("object_layout_file", std::string());
  c.save_policies = j.value("save_policies", false);
  c.validate();
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("config: cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config_json(ss.str());
}

}  // namespace xisf::harness
