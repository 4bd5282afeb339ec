#include "xisf/agents/cxi.hpp"

#include <cmath>

#include "xisf/approx/linear_map.hpp"

namespace xisf::agents {

void cxi_encode(double phi_k, Vec& out, int bins, double delta) {
  out.resize(bins);
  for (int j = 0; j < bins; ++j)
    out[j] = std::max(0.0, 1.0 - std::abs(j * delta - phi_k) / delta);
}

CXiAgent::CXiAgent(Options opts, RandomStream init_rng)
    : opts_(std::move(opts)),
      delta_(1.0 / (opts_.bins - 1)),
      init_rng_(init_rng) {
  opts_.config.hp.validate();
}

void CXiAgent::begin_task(int task_index, const TaskSpec& task) {
  PolicyEntry entry;
  if (library_.empty()) {
    for (int k = 0; k < opts_.feature_dims; ++k)
      entry.value.push_back(opts_.dim_value_factory(init_rng_));
    const auto& v = *entry.value.front();
    visits_.assign(
        static_cast<std::size_t>(v.state_dim()) * v.action_count(), 0);
  } else {
    entry = library_.back().clone();
  }
  entry.reward = opts_.reward_factory(task_index, task, init_rng_);
  library_.append(std::move(entry));
}

void CXiAgent::fill_bin_rewards(const RewardModel& reward,
                                std::vector<Vec>& out) {
  out.resize(opts_.feature_dims);
  for (int k = 0; k < opts_.feature_dims; ++k) {
    out[k].resize(opts_.bins);
    for (int u = 0; u < opts_.bins; ++u)
      out[k][u] = reward.dim_reward(k, bin_center(u));
  }
}

ActionId CXiAgent::act(const StateVec& s, RandomStream& rng) {
  fill_bin_rewards(*library_.back().reward, bins_i_);
  const GpiChoice choice = gpi_select_cxi(library_, bins_i_, s, scratch_);
  last_c_ = choice.source;
  if (rng.bernoulli(opts_.config.hp.epsilon))
    return {rng.uniform_int(library_.back().value.front()->action_count())};
  return {choice.action};
}

Vec CXiAgent::q_values(const StateVec& s) {
  fill_bin_rewards(*library_.back().reward, bins_i_);
  const int actions = library_.back().value.front()->action_count();
  Vec best(actions, -1e300);
  for (int k = 0; k < library_.size(); ++k) {
    Vec q(actions, 0.0);
    const PolicyEntry& e = library_.entry(k);
    for (int dim = 0; dim < opts_.feature_dims; ++dim) {
      scratch_.resize(static_cast<std::size_t>(actions) * opts_.bins);
      e.value[dim]->predict_all(s, scratch_);
      for (int a = 0; a < actions; ++a)
        for (int u = 0; u < opts_.bins; ++u)
          q[a] += scratch_[static_cast<std::size_t>(a) * opts_.bins + u] *
                  bins_i_[dim][u];
    }
    for (int a = 0; a < actions; ++a) best[a] = std::max(best[a], q[a]);
  }
  return best;
}

double CXiAgent::update_rate(const StateVec& s, int a) {
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

void CXiAgent::cxi_update(PolicyEntry& entry, const Transition& tr,
                          int next_action, double gamma_t, double rate) {
  // Loss (1/n) sum_k sum_u (u_k + gamma xi_k(s',abar) - xi_k(s,a))^2:
  // the 1/n factor scales each dimension's SGD step.
  const double dim_rate =
      opts_.config.tabular_updates ? rate : rate / opts_.feature_dims;
  for (int k = 0; k < opts_.feature_dims; ++k) {
    approx::ValueApprox& v = *entry.value[k];
    cxi_encode(tr.phi.values[k], encoded_, opts_.bins, delta_);
    target_.resize(opts_.bins);
    if (gamma_t != 0.0) {
      next_xi_.resize(opts_.bins);
      v.predict(tr.s_next, next_action, next_xi_);
      for (int u = 0; u < opts_.bins; ++u)
        target_[u] = encoded_[u] + gamma_t * next_xi_[u];
    } else {
      target_ = encoded_;
    }
    if (opts_.config.tabular_updates) {
      auto* table = dynamic_cast<approx::LinearValueMap*>(&v);
      if (!table)
        throw std::logic_error("CXiAgent: tabular mode needs tables");
      table->tabular_step(approx::one_hot_index(tr.s), tr.a.index, target_,
                          dim_rate);
    } else {
      v.sgd_step(tr.s, tr.a.index, target_, dim_rate);
    }
  }
}

void CXiAgent::observe(const Transition& tr) {
  const int i = library_.size() - 1;
  const int c = last_c_;
  PolicyEntry& active = library_.entry(i);

  if (active.reward->trainable())
    active.reward->observe(tr.phi, tr.reward);

  const double gamma_t = tr.terminal ? 0.0 : opts_.config.hp.gamma;
  const double rate = update_rate(tr.s, tr.a.index);

  fill_bin_rewards(*active.reward, bins_i_);
  const int abar =
      gpi_select_cxi(library_, bins_i_, tr.s_next, scratch_).action;
  cxi_update(active, tr, abar, gamma_t, rate);

  if (c != i) {
    PolicyEntry& old = library_.entry(c);
    fill_bin_rewards(*old.reward, bins_c_);
    const int abar_c = greedy_action_cxi(old, bins_c_, tr.s_next, scratch_);
    cxi_update(old, tr, abar_c, gamma_t, rate);
  }
}

}  // namespace xisf::agents
