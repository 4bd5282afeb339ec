#include "xisf/approx/softmax_model.hpp"

#include <algorithm>
#include <cmath>

namespace xisf::approx {

SoftmaxFeatureModel::SoftmaxFeatureModel(int state_dim, int actions,
                                         int atoms, InitScheme init,
                                         RandomStream& rng)
    : state_dim_(state_dim),
      actions_(actions),
      atoms_(atoms),
      theta_(static_cast<std::size_t>(state_dim) * actions * atoms),
      probs_(atoms),
      dz_(atoms) {
  if (init.kind == InitScheme::kNormal) {
    for (double& v : theta_) v = rng.normal(0.0, init.normal_std);
  } else {
    const double bound = std::sqrt(1.0 / state_dim);
    for (double& v : theta_) v = rng.uniform(-bound, bound);
  }
}

void SoftmaxFeatureModel::probabilities(const StateVec& s, int a,
                                        Vec& out) const {
  const double* col =
      theta_.data() + static_cast<std::size_t>(a) * atoms_ * state_dim_;
  double zmax = -1e300;
  for (int j = 0; j < atoms_; ++j) {
    double acc = 0.0;
    const double* w = col + static_cast<std::size_t>(j) * state_dim_;
    for (int d = 0; d < state_dim_; ++d) acc += w[d] * s.values[d];
    out[j] = acc;
    zmax = std::max(zmax, acc);
  }
  double norm = 0.0;
  for (int j = 0; j < atoms_; ++j) {
    out[j] = std::exp(out[j] - zmax);
    norm += out[j];
  }
  for (int j = 0; j < atoms_; ++j) out[j] /= norm;
}

void SoftmaxFeatureModel::step(const StateVec& s, int a, int observed_atom,
                               double beta) {
  probabilities(s, a, probs_);
  // L = sum_phi (y - p)^2, dL/dp_phi = 2 (p - y)_phi,
  // dL/dz_j = p_j * (g_j - sum_phi g_phi p_phi) with g = dL/dp.
  double gp = 0.0;
  for (int j = 0; j < atoms_; ++j) {
    const double y = (j == observed_atom) ? 1.0 : 0.0;
    dz_[j] = 2.0 * (probs_[j] - y);
    gp += dz_[j] * probs_[j];
  }
  for (int j = 0; j < atoms_; ++j) dz_[j] = probs_[j] * (dz_[j] - gp);

  double* col =
      theta_.data() + static_cast<std::size_t>(a) * atoms_ * state_dim_;
  for (int j = 0; j < atoms_; ++j) {
    const double step = beta * dz_[j];
    if (step == 0.0) continue;
    double* w = col + static_cast<std::size_t>(j) * state_dim_;
    for (int d = 0; d < state_dim_; ++d) w[d] -= step * s.values[d];
  }
}

TabularFeatureModel::TabularFeatureModel(int num_states, int actions,
                                         int atoms, bool visit_average,
                                         double beta)
    : actions_(actions),
      atoms_(atoms),
      visit_average_(visit_average),
      beta_(beta),
      table_(static_cast<std::size_t>(num_states) * actions,
             Vec(atoms, 1.0 / atoms)),
      visits_(static_cast<std::size_t>(num_states) * actions, 0) {}

void TabularFeatureModel::update(int state_index, int a, int observed_atom) {
  const std::size_t idx = static_cast<std::size_t>(state_index) * actions_ + a;
  ++visits_[idx];
  const double b = visit_average_ ? 1.0 / visits_[idx] : beta_;
  Vec& p = table_[idx];
  for (int j = 0; j < atoms_; ++j) {
    if (j == observed_atom)
      p[j] += b * (1.0 - p[j]);
    else
      p[j] -= b * p[j];
  }
}

}  // namespace xisf::approx
