#include "xisf/agents/ql.hpp"

#include "xisf/approx/linear_map.hpp"

namespace xisf::agents {

ActionId epsilon_greedy(const Vec& q, double epsilon, RandomStream& rng) {
  if (rng.bernoulli(epsilon))
    return {rng.uniform_int(static_cast<int>(q.size()))};
  return {argmax_tiebreak(q)};
}

QlAgent::QlAgent(AgentConfig config, ValueFactory factory,
                 RandomStream init_rng)
    : config_(config), factory_(std::move(factory)), init_rng_(init_rng) {
  config_.hp.validate();
}

void QlAgent::begin_task(int, const TaskSpec&) {
  value_ = factory_(init_rng_);
  q_.resize(value_->action_count());
  target_.resize(1);
  visits_.assign(
      static_cast<std::size_t>(value_->state_dim()) * value_->action_count(),
      0);
}

ActionId QlAgent::act(const StateVec& s, RandomStream& rng) {
  scratch_.resize(value_->action_count());
  value_->predict_all(s, scratch_);
  return epsilon_greedy(scratch_, config_.hp.epsilon, rng);
}

Vec QlAgent::q_values(const StateVec& s) {
  Vec q(value_->action_count());
  value_->predict_all(s, q);
  return q;
}

double QlAgent::update_rate(const StateVec& s, int a) {
  if (config_.schedule.kind == RateSchedule::kConstant)
    return config_.hp.alpha;
  const int idx = approx::one_hot_index(s);
  long& n = visits_[static_cast<std::size_t>(idx) * value_->action_count() + a];
  ++n;
  return config_.schedule.alpha0 * config_.schedule.c /
         (config_.schedule.c + static_cast<double>(n));
}

void QlAgent::observe(const Transition& tr) {
  const double gamma_t = tr.terminal ? 0.0 : config_.hp.gamma;
  double best_next = 0.0;
  if (gamma_t != 0.0) {
    q_.resize(value_->action_count());
    value_->predict_all(tr.s_next, q_);
    best_next = q_[argmax_tiebreak(q_)];
  }
  target_[0] = tr.reward + gamma_t * best_next;
  const double rate = update_rate(tr.s, tr.a.index);
  if (config_.tabular_updates) {
    auto* table = dynamic_cast<approx::LinearValueMap*>(value_.get());
    if (!table) throw std::logic_error("QlAgent: tabular mode needs a table");
    table->tabular_step(approx::one_hot_index(tr.s), tr.a.index, target_,
                        rate);
  } else {
    value_->sgd_step(tr.s, tr.a.index, target_, rate);
  }
}

}  // namespace xisf::agents
