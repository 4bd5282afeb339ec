#include "xisf/agents/reward_model.hpp"

#include "xisf/learnfeat/fit_weights.hpp"

namespace xisf::agents {

GivenReward::GivenReward(TaskSpec task, const DiscreteFeatureSet* atoms)
    : task_(std::move(task)) {
  if (atoms) {
    per_atom_.resize(atoms->size());
    for (int j = 0; j < atoms->size(); ++j)
      per_atom_[j] = task_.evaluate(atoms->atoms[j]);
  }
}

LinearReward::LinearReward(Vec w, const DiscreteFeatureSet* atoms, bool train,
                           double alpha_w)
    : w_(std::move(w)), atoms_(atoms), train_(train), alpha_w_(alpha_w) {}

void LinearReward::atom_rewards(Vec& out) const {
  out.resize(atoms_->size());
  for (int j = 0; j < atoms_->size(); ++j)
    out[j] = dot(atoms_->atoms[j].values, w_);
}

void LinearReward::observe(const FeatureVec& phi, double r) {
  if (train_) learnfeat::fit_weights_online(w_, phi, r, alpha_w_);
}

MlpReward::MlpReward(int feature_dim, const DiscreteFeatureSet* atoms,
                     double alpha_r, RandomStream& rng)
    : net_(feature_dim, approx::InitScheme::normal(0.01), rng),
      atoms_(atoms),
      alpha_r_(alpha_r) {}

void MlpReward::atom_rewards(Vec& out) const {
  out.resize(atoms_->size());
  for (int j = 0; j < atoms_->size(); ++j)
    out[j] = net_.value(atoms_->atoms[j]);
}

}  // namespace xisf::agents
