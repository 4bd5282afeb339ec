#include "xisf/harness/run.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "xisf/agents/cxi.hpp"
#include "xisf/agents/ql.hpp"
#include "xisf/agents/sfql.hpp"
#include "xisf/agents/xi.hpp"
#include "xisf/approx/linear_map.hpp"
#include "xisf/approx/mlp.hpp"
#include "xisf/approx/per_dim_stack.hpp"
#include "xisf/envs/tabular.hpp"
#include "xisf/learnfeat/fit_weights.hpp"

namespace xisf::harness {

namespace {

oracle::TabularModel tabular_from_preset(const TabularConfig& cfg,
                                         double gamma) {
  int w = 4, h = 4;
  if (std::sscanf(cfg.preset.c_str(), "grid%dx%d", &w, &h) != 2 &&
      cfg.preset != "grid4x4")
    throw std::invalid_argument("config: unknown tabular preset " +
                                cfg.preset);
  return envs::make_gridworld(w, h, gamma);
}

// Default tabular task over the 4 quadrant atoms.
TaskSpec default_tabular_task(const DiscreteFeatureSet& atoms) {
  TabularRewards tab;
  tab.atoms = std::make_shared<DiscreteFeatureSet>(atoms);
  tab.per_atom = {0.0, 0.3, -0.2, 1.0};
  tab.per_atom.resize(atoms.size(), 0.0);
  return TaskSpec{tab};
}

}  // namespace

std::unique_ptr<Environment> make_environment(const RunConfig& config) {
  switch (config.env) {
    case EnvKind::kObject:
    case EnvKind::kObjectOriginal: {
      const auto variant = config.env == EnvKind::kObject
                               ? envs::ObjectVariant::kModified
                               : envs::ObjectVariant::kOriginal;
      std::vector<envs::ObjectRecord> layout;
      if (!config.object_layout_file.empty())
        layout = envs::ObjectCollectionEnv::load_layout(
            config.object_layout_file);
      auto env = std::make_unique<envs::ObjectCollectionEnv>(
          variant, std::move(layout), config.rbf_sigma);
      env->set_episode_cap(config.episode_cap);
      return env;
    }
    case EnvKind::kRacer:
      return std::make_unique<envs::RacerEnv>();
    case EnvKind::kTabular: {
      auto model = tabular_from_preset(config.tabular, config.hp.gamma);
      return std::make_unique<envs::TabularEnv>(std::move(model),
                                                config.tabular.start_state);
    }
  }
  throw std::logic_error("make_environment: bad env kind");
}

std::vector<TaskSpec> sample_task_sequence(const RunConfig& config,
                                           const Environment& env) {
  RandomStream task_rng(config.seed, "tasks");
  std::vector<TaskSpec> tasks;
  tasks.reserve(config.num_tasks);
  std::shared_ptr<const DiscreteFeatureSet> atoms;
  if (env.feature_atoms())
    atoms = std::make_shared<DiscreteFeatureSet>(*env.feature_atoms());
  for (int i = 0; i < config.num_tasks; ++i) {
    if (config.env == EnvKind::kTabular)
      tasks.push_back(default_tabular_task(*env.feature_atoms()));
    else
      tasks.push_back(envs::sample_task(
          config.reward_kind, task_rng, atoms,
          config.env == EnvKind::kObjectOriginal
              ? envs::ObjectVariant::kOriginal
              : envs::ObjectVariant::kModified));
  }
  return tasks;
}

namespace {

using agents::RewardModelFactory;
using agents::ValueFactory;

ValueFactory make_value_factory(const RunConfig& config,
                                const Environment& env, int outputs) {
  const int state_dim = env.state_dim();
  const int actions = env.action_count();
  if (config.env == EnvKind::kRacer) {
    return [state_dim, actions, outputs](RandomStream& rng) {
      return std::make_unique<approx::MlpValueApprox>(
          std::vector<int>{20, 20}, state_dim, actions, outputs,
          approx::InitScheme::uniform_fan_in(), rng);
    };
  }
  return [state_dim, actions, outputs](RandomStream& rng) {
    return std::make_unique<approx::LinearValueMap>(
        state_dim, actions, outputs, approx::InitScheme::normal(0.01), rng);
  };
}

// Racer psi: one scalar-output subnetwork per feature dimension.
ValueFactory make_psi_factory(const RunConfig& config, const Environment& env,
                              int feature_dim) {
  if (config.env != EnvKind::kRacer)
    return make_value_factory(config, env, feature_dim);
  const int state_dim = env.state_dim();
  const int actions = env.action_count();
  return [state_dim, actions, feature_dim](RandomStream& rng) {
    std::vector<std::unique_ptr<approx::ValueApprox>> nets;
    for (int k = 0; k < feature_dim; ++k)
      nets.push_back(std::make_unique<approx::MlpValueApprox>(
          std::vector<int>{20, 20}, state_dim, actions, 1,
          approx::InitScheme::uniform_fan_in(), rng));
    return std::make_unique<approx::PerDimStack>(std::move(nets));
  };
}

Vec prefit_weights(const Environment& env, const TaskSpec& task,
                   RandomStream& rng) {
  if (env.feature_atoms())
    return learnfeat::fit_weights_offline(task, *env.feature_atoms()).w;
  // Continuous features: fit on randomly sampled racer positions.
  const auto* racer = dynamic_cast<const envs::RacerEnv*>(&env);
  if (!racer) throw std::logic_error("prefit: unsupported environment");
  auto sample = [racer, &task, &rng](FeatureVec& phi, double& r) {
    phi = racer->features_at(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
    r = task.evaluate(phi);
  };
  return learnfeat::fit_weights_offline_sampled(sample, env.feature_dim()).w;
}

Vec small_random_weights(int n, RandomStream& rng) {
  Vec w(n);
  for (double& v : w) v = rng.normal(0.0, 0.01);
  return w;
}

// Reward-model factory per agent kind and mode. `atoms` may be null for
// continuous features. The environment reference outlives the factory.
RewardModelFactory make_reward_factory(const RunConfig& config,
                                       const Environment& env,
                                       const DiscreteFeatureSet* atoms,
                                       int feature_dim) {
  const bool linear_tasks = config.reward_kind == envs::RewardKind::kLinear;
  const double alpha_w = config.hp.alpha_w;
  const double alpha_r = config.hp.alpha_r;
  const AgentKind agent = config.agent;
  const RewardMode mode = config.reward_mode;

  return [&env, atoms, feature_dim, linear_tasks, alpha_w, alpha_r, agent,
          mode](int task_index, const TaskSpec& task,
                RandomStream& rng) -> std::unique_ptr<agents::RewardModel> {
    (void)task_index;
    const bool needs_linear =
        agent == AgentKind::kSFQL || agent == AgentKind::kCXi;
    switch (mode) {
      case RewardMode::kGiven:
        if (!needs_linear || (linear_tasks && task.is_linear()))
          return std::make_unique<agents::GivenReward>(task, atoms);
        // SFQL cannot consume a general reward function directly: a linear
        // model is fitted before the task starts.
        {
          RandomStream prefit_rng = rng.derive("prefit");
          return std::make_unique<agents::LinearReward>(
              prefit_weights(env, task, prefit_rng), atoms, false, alpha_w);
        }
      case RewardMode::kPrefitLinear: {
        RandomStream prefit_rng = rng.derive("prefit");
        return std::make_unique<agents::LinearReward>(
            prefit_weights(env, task, prefit_rng), atoms, false, alpha_w);
      }
      case RewardMode::kOnline:
        if (agent == AgentKind::kXi || agent == AgentKind::kMBXi) {
          if (!linear_tasks)
            return std::make_unique<agents::MlpReward>(feature_dim, atoms,
                                                       alpha_r, rng);
          return std::make_unique<agents::LinearReward>(
              small_random_weights(feature_dim, rng), atoms, true, alpha_r);
        }
        return std::make_unique<agents::LinearReward>(
            small_random_weights(feature_dim, rng), atoms, true, alpha_w);
    }
    throw std::logic_error("reward factory: bad mode");
  };
}

}  // namespace

std::unique_ptr<agents::Agent> make_agent(
    const RunConfig& config, const Environment& env,
    const learnfeat::FeatureMap* learned_features) {
  agents::AgentConfig acfg;
  acfg.hp = config.hp;
  acfg.schedule = config.schedule;
  acfg.tabular_updates = config.tabular_updates;

  RandomStream init_rng(config.seed, "agent-init");

  const DiscreteFeatureSet* atoms = env.feature_atoms();
  int feature_dim = env.feature_dim();
  // Learned features replace the environment's descriptor everywhere.
  if (learned_features) {
    feature_dim = learned_features->h;
    atoms = nullptr;
  }

  switch (config.agent) {
    case AgentKind::kQL:
      return std::make_unique<agents::QlAgent>(
          acfg, make_value_factory(config, env, 1), init_rng);
    case AgentKind::kSFQL:
      return std::make_unique<agents::SfqlAgent>(
          acfg, make_psi_factory(config, env, feature_dim),
          make_reward_factory(config, env, atoms, feature_dim), init_rng);
    case AgentKind::kXi:
    case AgentKind::kMBXi: {
      if (!atoms)
        throw std::invalid_argument("Xi/MBXi need a discrete atom set");
      agents::XiAgent::Options opts;
      opts.config = acfg;
      opts.value_factory = make_value_factory(config, env, atoms->size());
      opts.reward_factory =
          make_reward_factory(config, env, atoms, feature_dim);
      opts.atoms = atoms;
      opts.model_based = config.agent == AgentKind::kMBXi;
      opts.state_dim = env.state_dim();
      opts.actions = env.action_count();
      opts.tabular_feature_model = config.tabular_updates;
      opts.feature_model_visit_average = config.tabular_updates;
      return std::make_unique<agents::XiAgent>(std::move(opts), init_rng);
    }
    case AgentKind::kCXi: {
      agents::CXiAgent::Options opts;
      opts.config = acfg;
      opts.dim_value_factory = make_value_factory(config, env, 11);
      opts.reward_factory =
          make_reward_factory(config, env, atoms, feature_dim);
      opts.feature_dims = feature_dim;
      opts.bins = 11;
      return std::make_unique<agents::CXiAgent>(std::move(opts), init_rng);
    }
  }
  throw std::logic_error("make_agent: bad agent kind");
}

namespace {

// One task's interaction loop; returns total reward and steps taken.
std::pair<double, long> run_task(Environment& env, agents::Agent& agent,
                                 const RunConfig& config,
                                 const learnfeat::FeatureMap* features,
                                 RandomStream& env_rng,
                                 RandomStream& explore_rng,
                                 learnfeat::TransitionLog* log,
                                 int log_task_id) {
  double total = 0.0;
  long steps = 0;
  const bool racer = config.env == EnvKind::kRacer;
  const long budget = racer ? static_cast<long>(config.episodes_per_task) *
                                  envs::RacerEnv::kEpisodeLength
                            : config.steps_per_task;
  StateVec s = env.reset(env_rng);
  for (long t = 0; t < budget; ++t) {
    const ActionId a = agent.act(s, explore_rng);
    Transition tr = env.step(a, env_rng);
    if (features)
      tr.phi = features->apply(tr.s.values, tr.s_next.values);
    agent.observe(tr);
    if (log) log->append(log_task_id, tr);
    total += tr.reward;
    ++steps;
    if (env.episode_finished())
      s = env.reset(env_rng);
    else
      s = std::move(tr.s_next);
  }
  return {total, steps};
}

}  // namespace

RunRecord run(const RunConfig& config) {
  auto env = make_environment(config);
  return run_with_tasks(config, sample_task_sequence(config, *env));
}

RunRecord run_with_tasks(const RunConfig& config,
                         const std::vector<TaskSpec>& tasks) {
  config.validate();
  if (static_cast<int>(tasks.size()) != config.num_tasks)
    throw std::invalid_argument("run: task list size != num_tasks");
  auto env = make_environment(config);

  RunRecord record;
  record.agent = config.agent_name();
  record.seed = config.seed;

  // Learned-feature protocol: a plain QL agent first experiences the
  // warm-up prefix of the same task sequence; its logged transitions train
  // the feature map used by the main agent.
  learnfeat::FeatureMap feature_map;
  const learnfeat::FeatureMap* features = nullptr;
  if (config.feature_mode.learned) {
    RunConfig warm = config;
    warm.agent = AgentKind::kQL;
    warm.feature_mode = FeatureModeConfig{};
    auto warm_env = make_environment(warm);
    auto warm_agent = make_agent(warm, *warm_env, nullptr);
    RandomStream warm_env_rng(config.seed, "warmup-env");
    RandomStream warm_explore_rng(config.seed, "warmup-explore");
    learnfeat::TransitionLog log;
    const int warmup =
        std::min(config.feature_mode.learner.warmup_tasks, config.num_tasks);
    for (int i = 0; i < warmup; ++i) {
      warm_env->set_task(tasks[i]);
      warm_agent->begin_task(i, tasks[i]);
      run_task(*warm_env, *warm_agent, warm, nullptr, warm_env_rng,
               warm_explore_rng, &log, i);
    }
    learnfeat::FeatureLearnConfig lcfg = config.feature_mode.learner;
    lcfg.warmup_tasks = warmup;
    RandomStream learn_rng(config.seed, "feature-learning");
    feature_map =
        learnfeat::learn_features(log, config.feature_mode.h, lcfg, learn_rng)
            .features;
    features = &feature_map;
  }

  auto agent = make_agent(config, *env, features);
  RandomStream env_rng(config.seed, "env");
  RandomStream explore_rng(config.seed, "explore");

  double cumulative = 0.0;
  for (int i = 0; i < config.num_tasks; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    env->set_task(tasks[i]);
    agent->begin_task(i, tasks[i]);
    const auto [total, steps] =
        run_task(*env, *agent, config, features, env_rng, explore_rng,
                 nullptr, i);
    cumulative += total;
    TaskRow row;
    row.seed = config.seed;
    row.task_index = i;
    row.total_task_return = total;
    row.avg_reward_per_step = steps > 0 ? total / steps : 0.0;
    row.cumulative_return = cumulative;
    row.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    record.rows.push_back(row);
  }

  if (config.save_policies && agent->library() &&
      !config.output_dir.empty()) {
    const std::string dir = config.output_dir + "/policies";
    std::filesystem::create_directories(dir);
    agent->library()->save(dir);
  }
  return record;
}

void write_record_csv(const RunRecord& record, std::ostream& os) {
  os << "seed,task_index,avg_reward_per_step,total_task_return,"
        "cumulative_return\n";
  char buf[256];
  for (const TaskRow& r : record.rows) {
    std::snprintf(buf, sizeof(buf), "%llu,%d,%.9g,%.9g,%.9g\n",
                  static_cast<unsigned long long>(r.seed), r.task_index,
                  r.avg_reward_per_step, r.total_task_return,
                  r.cumulative_return);
    os << buf;
  }
}

void write_timing_csv(const RunRecord& record, std::ostream& os) {
  os << "task_index,wall_time_sec\n";
  char buf[128];
  for (const TaskRow& r : record.rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.9g\n", r.task_index,
                  r.wall_time_sec);
    os << buf;
  }
}

RunRecord run_to_dir(const RunConfig& config) {
  if (config.output_dir.empty())
    throw std::invalid_argument("run_to_dir: output_dir not set");
  std::filesystem::create_directories(config.output_dir);
  const RunRecord record = run(config);
  {
    std::ofstream os(config.output_dir + "/record.csv");
    write_record_csv(record, os);
  }
  {
    std::ofstream os(config.output_dir + "/timing.csv");
    write_timing_csv(record, os);
  }
  return record;
}

}  // namespace xisf::harness
