#include "xisf/agents/sfql.hpp"

#include "xisf/approx/linear_map.hpp"

namespace xisf::agents {

SfqlAgent::SfqlAgent(AgentConfig config, ValueFactory factory,
                     RewardModelFactory reward_factory, RandomStream init_rng)
    : config_(config),
      factory_(std::move(factory)),
      reward_factory_(std::move(reward_factory)),
      init_rng_(init_rng) {
  config_.hp.validate();
}

void SfqlAgent::begin_task(int task_index, const TaskSpec& task) {
  PolicyEntry entry;
  if (library_.empty()) {
    entry.value.push_back(factory_(init_rng_));
    const auto& v = *entry.value.front();
    visits_.assign(
        static_cast<std::size_t>(v.state_dim()) * v.action_count(), 0);
  } else {
    entry = library_.back().clone();
  }
  entry.reward = reward_factory_(task_index, task, init_rng_);
  if (!entry.reward->linear_weights())
    throw std::logic_error("SfqlAgent: needs a linear reward model");
  library_.append(std::move(entry));
}

ActionId SfqlAgent::act(const StateVec& s, RandomStream& rng) {
  const Vec& w = *library_.back().reward->linear_weights();
  const GpiChoice choice = gpi_select_psi(library_, w, s, scratch_);
  last_c_ = choice.source;
  if (rng.bernoulli(config_.hp.epsilon))
    return {rng.uniform_int(library_.back().value.front()->action_count())};
  return {choice.action};
}

Vec SfqlAgent::q_values(const StateVec& s) {
  const Vec& w = *library_.back().reward->linear_weights();
  const int actions = library_.back().value.front()->action_count();
  const int n = library_.back().value.front()->output_dim();
  Vec best(actions, -1e300);
  for (int k = 0; k < library_.size(); ++k) {
    scratch_.resize(static_cast<std::size_t>(actions) * n);
    library_.entry(k).value.front()->predict_all(s, scratch_);
    for (int a = 0; a < actions; ++a) {
      double q = 0.0;
      for (int j = 0; j < n; ++j)
        q += scratch_[static_cast<std::size_t>(a) * n + j] * w[j];
      best[a] = std::max(best[a], q);
    }
  }
  return best;
}

double SfqlAgent::update_rate(const StateVec& s, int a) {
  if (config_.schedule.kind == RateSchedule::kConstant)
    return config_.hp.alpha;
  const int idx = approx::one_hot_index(s);
  long& n = visits_[static_cast<std::size_t>(idx) *
                        library_.back().value.front()->action_count() +
                    a];
  ++n;
  return config_.schedule.alpha0 * config_.schedule.c /
         (config_.schedule.c + static_cast<double>(n));
}

void SfqlAgent::psi_update(PolicyEntry& entry, const Transition& tr,
                           int next_action, double gamma_t, double rate) {
  approx::ValueApprox& v = *entry.value.front();
  const int n = v.output_dim();
  target_.resize(n);
  if (gamma_t != 0.0) {
    next_psi_.resize(n);
    v.predict(tr.s_next, next_action, next_psi_);
    for (int j = 0; j < n; ++j)
      target_[j] = tr.phi.values[j] + gamma_t * next_psi_[j];
  } else {
    for (int j = 0; j < n; ++j) target_[j] = tr.phi.values[j];
  }
  if (config_.tabular_updates) {
    auto* table = dynamic_cast<approx::LinearValueMap*>(&v);
    if (!table) throw std::logic_error("SfqlAgent: tabular mode needs tables");
    table->tabular_step(approx::one_hot_index(tr.s), tr.a.index, target_,
                        rate);
  } else {
    v.sgd_step(tr.s, tr.a.index, target_, rate);
  }
}

void SfqlAgent::observe(const Transition& tr) {
  const int i = library_.size() - 1;
  const int c = last_c_;
  PolicyEntry& active = library_.entry(i);

  if (active.reward->trainable())
    active.reward->observe(tr.phi, tr.reward);

  const double gamma_t = tr.terminal ? 0.0 : config_.hp.gamma;
  const double rate = update_rate(tr.s, tr.a.index);

  // GPI-optimal next action for the current task.
  const Vec& w_i = *active.reward->linear_weights();
  const int abar =
      gpi_select_psi(library_, w_i, tr.s_next, scratch_).action;
  psi_update(active, tr, abar, gamma_t, rate);

  if (c != i) {
    PolicyEntry& old = library_.entry(c);
    const Vec& w_c = *old.reward->linear_weights();
    const int abar_c = greedy_action_psi(old, w_c, tr.s_next, scratch_);
    psi_update(old, tr, abar_c, gamma_t, rate);
  }
}

}  // namespace xisf::agents
