#include "xisf/harness/oracle_suites.hpp"

#include <stdexcept>

namespace xisf::harness {

namespace {

using namespace xisf::oracle;

TabularModel random_instance(RandomStream& rng) {
  const int states = 4 + rng.uniform_int(5);
  const int actions = 2 + rng.uniform_int(3);
  const int atoms = 3 + rng.uniform_int(4);
  const double gamma = rng.uniform(0.5, 0.95);
  return random_model(rng, states, actions, atoms, gamma);
}

Vec random_rewards(RandomStream& rng, int atoms, double amplitude = 1.0) {
  Vec r(atoms);
  for (double& v : r) v = rng.uniform(-amplitude, amplitude);
  return r;
}

std::vector<int> random_policy(RandomStream& rng, const TabularModel& m) {
  std::vector<int> pi(m.num_states);
  for (int& a : pi) a = rng.uniform_int(m.num_actions);
  return pi;
}

}  // namespace

std::vector<oracle::CheckReport> run_oracle_suite(const std::string& name,
                                                  int instances,
                                                  std::uint64_t seed) {
  std::vector<CheckReport> reports;
  for (int i = 0; i < instances; ++i) {
    const std::uint64_t inst_seed = seed + i;
    RandomStream rng(inst_seed, "oracle-suite");
    TabularModel m = random_instance(rng);
    if (name == "contraction") {
      const Vec r = random_rewards(rng, m.num_atoms);
      const auto pi = random_policy(rng, m);
      reports.push_back(check_contraction(m, r, pi, 60, rng, inst_seed));
    } else if (name == "normalization") {
      const Vec r = random_rewards(rng, m.num_atoms);
      reports.push_back(check_normalization(m, r, 1e-9, inst_seed));
    } else if (name == "equivalence") {
      // Linear task over random binary atoms of dimension n.
      const int n = 3 + rng.uniform_int(3);
      DiscreteFeatureSet atoms;
      while (atoms.size() < m.num_atoms) {
        FeatureVec v;
        v.values.resize(n);
        for (double& x : v.values)
          x = rng.bernoulli(0.5) ? 1.0 : 0.0;
        if (atoms.index_of(v) < 0) atoms.atoms.push_back(std::move(v));
      }
      Vec w(n);
      for (double& x : w) x = rng.uniform(-1.0, 1.0);
      reports.push_back(check_sf_xi_equivalence(m, atoms, w, 1e-8, inst_seed));
    } else if (name == "indicator") {
      const Vec r = random_rewards(rng, m.num_atoms);
      reports.push_back(
          check_indicator_reformulation(m, r, 1e-8, inst_seed));
    } else if (name == "gpi-bound") {
      const int sources = 1 + rng.uniform_int(3);
      std::vector<Vec> source_rewards;
      for (int k = 0; k < sources; ++k)
        source_rewards.push_back(random_rewards(rng, m.num_atoms));
      const Vec target = random_rewards(rng, m.num_atoms);
      reports.push_back(check_gpi_bound(m, source_rewards, target, inst_seed));
    } else {
      throw std::invalid_argument("oracle suite: unknown suite " + name);
    }
  }
  return reports;
}

}  // namespace xisf::harness
