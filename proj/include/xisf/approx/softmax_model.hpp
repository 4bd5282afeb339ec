#pragma once

#include "xisf/approx/value_approx.hpp"

namespace xisf::approx {

// One-step feature model p~(phi | s, a): per-action linear logits with a
// softmax over atoms. Shared across tasks; initialized once per run.
class SoftmaxFeatureModel {
 public:
  SoftmaxFeatureModel(int state_dim, int actions, int atoms, InitScheme init,
                      RandomStream& rng);

  int atom_count() const { return atoms_; }

  // out must have size |atoms|; entries in (0,1), sum 1.
  void probabilities(const StateVec& s, int a, Vec& out) const;

  // One SGD step on sum_phi (onehot(observed) - p~)^2; gradient includes
  // the softmax Jacobian.
  void step(const StateVec& s, int a, int observed_atom, double beta);

  Vec& params() { return theta_; }
  const Vec& params() const { return theta_; }

 private:
  int state_dim_, actions_, atoms_;
  Vec theta_;  // layout as LinearValueMap: [(a*atoms + j) * state_dim + d]
  mutable Vec probs_, dz_;
};

// Tabular one-step feature model: a probability row per (state index,
// action). Observed atom moves up by beta * (1 - p), the rest down by
// beta * p. `visit_average` mode replaces beta with 1/n(s,a), which makes
// each row the exact empirical frequency of its observations.
class TabularFeatureModel {
 public:
  TabularFeatureModel(int num_states, int actions, int atoms,
                      bool visit_average, double beta);

  const Vec& row(int state_index, int a) const {
    return table_[static_cast<std::size_t>(state_index) * actions_ + a];
  }

  void update(int state_index, int a, int observed_atom);

 private:
  int actions_, atoms_;
  bool visit_average_;
  double beta_;
  std::vector<Vec> table_;
  std::vector<long> visits_;
};

}  // namespace xisf::approx
