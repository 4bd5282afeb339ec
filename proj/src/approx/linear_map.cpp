#include "xisf/approx/linear_map.hpp"

#include <cmath>
#include <stdexcept>

namespace xisf::approx {

LinearValueMap::LinearValueMap(int state_dim, int actions, int outputs,
                               InitScheme init, RandomStream& rng)
    : state_dim_(state_dim),
      actions_(actions),
      outputs_(outputs),
      theta_(static_cast<std::size_t>(state_dim) * actions * outputs) {
  if (init.kind == InitScheme::kNormal) {
    for (double& v : theta_) v = rng.normal(0.0, init.normal_std);
  } else {
    const double bound = std::sqrt(1.0 / state_dim);
    for (double& v : theta_) v = rng.uniform(-bound, bound);
  }
}

void LinearValueMap::predict(const StateVec& s, int a, Vec& out) const {
  if (s.dim() != state_dim_)
    throw std::invalid_argument("LinearValueMap: state dim mismatch");
  const double* col =
      theta_.data() + static_cast<std::size_t>(a) * outputs_ * state_dim_;
  for (int k = 0; k < outputs_; ++k) {
    double acc = 0.0;
    const double* w = col + static_cast<std::size_t>(k) * state_dim_;
    for (int d = 0; d < state_dim_; ++d) acc += w[d] * s.values[d];
    out[k] = acc;
  }
}

void LinearValueMap::predict_all(const StateVec& s, Vec& out) const {
  if (s.dim() != state_dim_)
    throw std::invalid_argument("LinearValueMap: state dim mismatch");
  const double* w = theta_.data();
  for (int i = 0; i < actions_ * outputs_; ++i) {
    double acc = 0.0;
    for (int d = 0; d < state_dim_; ++d) acc += w[d] * s.values[d];
    out[i] = acc;
    w += state_dim_;
  }
}

void LinearValueMap::sgd_step(const StateVec& s, int a, const Vec& target,
                              double alpha) {
  for (double t : target)
    if (!std::isfinite(t))
      throw std::invalid_argument("LinearValueMap: non-finite target");
  double* col =
      theta_.data() + static_cast<std::size_t>(a) * outputs_ * state_dim_;
  for (int k = 0; k < outputs_; ++k) {
    double* w = col + static_cast<std::size_t>(k) * state_dim_;
    double pred = 0.0;
    for (int d = 0; d < state_dim_; ++d) pred += w[d] * s.values[d];
    const double step = 2.0 * alpha * (target[k] - pred);
    for (int d = 0; d < state_dim_; ++d) w[d] += step * s.values[d];
  }
}

void LinearValueMap::tabular_step(int state_index, int a, const Vec& target,
                                  double alpha) {
  double* col =
      theta_.data() + static_cast<std::size_t>(a) * outputs_ * state_dim_;
  for (int k = 0; k < outputs_; ++k) {
    double& cell = col[static_cast<std::size_t>(k) * state_dim_ + state_index];
    cell += alpha * (target[k] - cell);
  }
}

std::string LinearValueMap::descriptor() const {
  return "linear " + std::to_string(state_dim_) + " " +
         std::to_string(actions_) + " " + std::to_string(outputs_);
}

int one_hot_index(const StateVec& s) {
  int idx = -1;
  for (int d = 0; d < s.dim(); ++d) {
    if (s.values[d] != 0.0) {
      if (idx >= 0 || s.values[d] != 1.0)
        throw std::invalid_argument("one_hot_index: state is not one-hot");
      idx = d;
    }
  }
  if (idx < 0) throw std::invalid_argument("one_hot_index: all-zero state");
  return idx;
}

}  // namespace xisf::approx
