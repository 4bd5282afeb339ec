#include "xisf/oracle/tabular_model.hpp"

#include <cmath>
#include <stdexcept>

namespace xisf::oracle {

void TabularModel::validate() const {
  if (num_states <= 0 || num_actions <= 0 || num_atoms <= 0)
    throw std::invalid_argument("TabularModel: empty dimensions");
  if (static_cast<int>(kernel.size()) != num_states ||
      static_cast<int>(feature_map.size()) != num_states)
    throw std::invalid_argument("TabularModel: table size mismatch");
  for (int s = 0; s < num_states; ++s) {
    for (int a = 0; a < num_actions; ++a) {
      double sum = 0.0;
      for (int t = 0; t < num_states; ++t) {
        const double p = kernel[s][a][t];
        if (p < 0.0) throw std::invalid_argument("TabularModel: negative p");
        sum += p;
        const int atom = feature_map[s][a][t];
        if (atom < 0 || atom >= num_atoms)
          throw std::invalid_argument("TabularModel: atom out of range");
      }
      if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("TabularModel: kernel row sum != 1");
    }
  }
}

Vec TabularModel::feature_distribution(int s, int a) const {
  Vec p(num_atoms, 0.0);
  for (int t = 0; t < num_states; ++t)
    p[feature_map[s][a][t]] += kernel[s][a][t];
  return p;
}

double TabularModel::expected_reward(int s, int a,
                                     const Vec& per_atom) const {
  double r = 0.0;
  for (int t = 0; t < num_states; ++t)
    r += kernel[s][a][t] * per_atom[feature_map[s][a][t]];
  return r;
}

Vec rewards_per_atom(const TaskSpec& task, const DiscreteFeatureSet& atoms) {
  Vec out(atoms.size());
  for (int j = 0; j < atoms.size(); ++j)
    out[j] = task.evaluate(atoms.atoms[j]);
  return out;
}

TabularModel random_model(RandomStream& rng, int num_states, int num_actions,
                          int num_atoms, double gamma) {
  TabularModel m;
  m.num_states = num_states;
  m.num_actions = num_actions;
  m.num_atoms = num_atoms;
  m.gamma = gamma;
  m.kernel.assign(num_states, std::vector<Vec>(num_actions, Vec(num_states)));
  m.feature_map.assign(
      num_states,
      std::vector<std::vector<int>>(num_actions,
                                    std::vector<int>(num_states)));
  for (int s = 0; s < num_states; ++s) {
    for (int a = 0; a < num_actions; ++a) {
      // Sparse-ish rows: two random successor states with random split.
      Vec& row = m.kernel[s][a];
      const int t1 = rng.uniform_int(num_states);
      int t2 = rng.uniform_int(num_states);
      const double p = rng.uniform(0.05, 0.95);
      row[t1] += p;
      row[t2] += 1.0 - p;
      for (int t = 0; t < num_states; ++t)
        m.feature_map[s][a][t] = rng.uniform_int(num_atoms);
    }
  }
  m.validate();
  return m;
}

}  // namespace xisf::oracle
