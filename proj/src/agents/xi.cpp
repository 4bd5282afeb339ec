#include "xisf/agents/xi.hpp"

#include "xisf/approx/linear_map.hpp"

namespace xisf::agents {

XiAgent::XiAgent(Options opts, RandomStream init_rng)
    : opts_(std::move(opts)), init_rng_(init_rng) {
  opts_.config.hp.validate();
  if (!opts_.atoms) throw std::invalid_argument("XiAgent: needs an atom set");
}

void XiAgent::begin_task(int task_index, const TaskSpec& task) {
  PolicyEntry entry;
  if (library_.empty()) {
    entry.value.push_back(opts_.value_factory(init_rng_));
    const auto& v = *entry.value.front();
    visits_.assign(
        static_cast<std::size_t>(v.state_dim()) * v.action_count(), 0);
    if (opts_.model_based) {
      // The one-step model is task-independent: initialized only here.
      if (opts_.tabular_feature_model)
        tabular_model_ = std::make_unique<approx::TabularFeatureModel>(
            opts_.state_dim, opts_.actions, opts_.atoms->size(),
            opts_.feature_model_visit_average, opts_.config.hp.beta);
      else
        softmax_model_ = std::make_unique<approx::SoftmaxFeatureModel>(
            opts_.state_dim, opts_.actions, opts_.atoms->size(),
            approx::InitScheme::normal(0.01), init_rng_);
    }
  } else {
    entry = library_.back().clone();
  }
  entry.reward = opts_.reward_factory(task_index, task, init_rng_);
  library_.append(std::move(entry));
}

ActionId XiAgent::act(const StateVec& s, RandomStream& rng) {
  library_.back().reward->atom_rewards(rewards_i_);
  const GpiChoice choice = gpi_select_xi(library_, rewards_i_, s, scratch_);
  last_c_ = choice.source;
  if (rng.bernoulli(opts_.config.hp.epsilon))
    return {rng.uniform_int(library_.back().value.front()->action_count())};
  return {choice.action};
}

Vec XiAgent::q_values(const StateVec& s) {
  library_.back().reward->atom_rewards(rewards_i_);
  const int actions = library_.back().value.front()->action_count();
  const int m = opts_.atoms->size();
  Vec best(actions, -1e300);
  for (int k = 0; k < library_.size(); ++k) {
    scratch_.resize(static_cast<std::size_t>(actions) * m);
    library_.entry(k).value.front()->predict_all(s, scratch_);
    for (int a = 0; a < actions; ++a) {
      double q = 0.0;
      for (int j = 0; j < m; ++j)
        q += scratch_[static_cast<std::size_t>(a) * m + j] * rewards_i_[j];
      best[a] = std::max(best[a], q);
    }
  }
  return best;
}

double XiAgent::update_rate(const StateVec& s, int a) {
  if (opts_.config.schedule.kind == RateSchedule::kConstant)
    return opts_.config.hp.alpha;
  const int idx = approx::one_hot_index(s);
  long& n = visits_[static_cast<std::size_t>(idx) *
                        library_.back().value.front()->action_count() +
                    a];
  ++n;
  return opts_.config.schedule.alpha0 * opts_.config.schedule.c /
         (opts_.config.schedule.c + static_cast<double>(n));
}

void XiAgent::xi_update(PolicyEntry& entry, const Transition& tr,
                        int next_action, const Vec& immediate, double gamma_t,
                        double rate) {
  approx::ValueApprox& v = *entry.value.front();
  const int m = v.output_dim();
  target_.resize(m);
  if (gamma_t != 0.0) {
    next_xi_.resize(m);
    v.predict(tr.s_next, next_action, next_xi_);
    for (int j = 0; j < m; ++j)
      target_[j] = immediate[j] + gamma_t * next_xi_[j];
  } else {
    target_ = immediate;
  }
  if (opts_.config.tabular_updates) {
    auto* table = dynamic_cast<approx::LinearValueMap*>(&v);
    if (!table) throw std::logic_error("XiAgent: tabular mode needs tables");
    table->tabular_step(approx::one_hot_index(tr.s), tr.a.index, target_,
                        rate);
  } else {
    v.sgd_step(tr.s, tr.a.index, target_, rate);
  }
}

void XiAgent::observe(const Transition& tr) {
  const int i = library_.size() - 1;
  const int c = last_c_;
  PolicyEntry& active = library_.entry(i);

  if (active.reward->trainable())
    active.reward->observe(tr.phi, tr.reward);

  const int observed = opts_.atoms->index_of(tr.phi);
  if (observed < 0) throw std::logic_error("XiAgent: unknown feature atom");

  // Immediate term: one-hot observation (model-free) or the one-step
  // model's prediction after its own update (model-based).
  const int m = opts_.atoms->size();
  immediate_.assign(m, 0.0);
  if (opts_.model_based) {
    if (tabular_model_) {
      const int idx = approx::one_hot_index(tr.s);
      tabular_model_->update(idx, tr.a.index, observed);
      immediate_ = tabular_model_->row(idx, tr.a.index);
    } else {
      softmax_model_->step(tr.s, tr.a.index, observed, opts_.config.hp.beta);
      softmax_model_->probabilities(tr.s, tr.a.index, immediate_);
    }
  } else {
    immediate_[observed] = 1.0;
  }

  const double gamma_t = tr.terminal ? 0.0 : opts_.config.hp.gamma;
  const double rate = update_rate(tr.s, tr.a.index);

  active.reward->atom_rewards(rewards_i_);
  const int abar =
      gpi_select_xi(library_, rewards_i_, tr.s_next, scratch_).action;
  xi_update(active, tr, abar, immediate_, gamma_t, rate);

  if (c != i) {
    PolicyEntry& old = library_.entry(c);
    old.reward->atom_rewards(rewards_c_);
    const int abar_c = greedy_action_xi(old, rewards_c_, tr.s_next, scratch_);
    xi_update(old, tr, abar_c, immediate_, gamma_t, rate);
  }
}

}  // namespace xisf::agents
