#include "xisf/oracle/checks.hpp"

#include <cmath>
#include <cstdio>

namespace xisf::oracle {

std::string CheckReport::to_json() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"name\":\"%s\",\"instance_seed\":%llu,\"lhs\":%.9g,"
                "\"rhs\":%.9g,\"slack\":%.9g,\"pass\":%s}",
                name.c_str(), static_cast<unsigned long long>(instance_seed),
                lhs, rhs, slack, pass ? "true" : "false");
  return std::string(buf);
}

namespace {

CheckReport make_report(std::string name, std::uint64_t seed, double lhs,
                        double rhs) {
  CheckReport r;
  r.name = std::move(name);
  r.instance_seed = seed;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.pass = lhs <= rhs;
  return r;
}

}  // namespace

CheckReport check_sf_xi_equivalence(const TabularModel& m,
                                    const DiscreteFeatureSet& atoms,
                                    const Vec& w, double tol,
                                    std::uint64_t seed) {
  Vec per_atom(atoms.size());
  for (int j = 0; j < atoms.size(); ++j)
    per_atom[j] = dot(atoms.atoms[j].values, w);
  const PsiTable psi = psi_iteration(m, atoms, w);
  const XiTable xi = xi_iteration(m, per_atom);
  const double diff =
      max_abs_diff(q_from_psi_table(psi, w), q_from_xi_table(xi, per_atom));
  return make_report("sf_xi_equivalence", seed, diff, tol);
}

CheckReport check_indicator_reformulation(const TabularModel& m,
                                          const Vec& reward_per_atom,
                                          double tol, std::uint64_t seed) {
  // Indicator features: atom j maps to e_j in {0,1}^m, weights w_j = R_j.
  DiscreteFeatureSet ind;
  for (int j = 0; j < m.num_atoms; ++j) {
    FeatureVec e;
    e.values.assign(m.num_atoms, 0.0);
    e.values[j] = 1.0;
    ind.atoms.push_back(std::move(e));
  }
  const PsiTable psi = psi_iteration(m, ind, reward_per_atom);
  const XiTable xi = xi_iteration(m, reward_per_atom);
  double diff = 0.0;
  for (int s = 0; s < m.num_states; ++s)
    for (int a = 0; a < m.num_actions; ++a)
      for (int j = 0; j < m.num_atoms; ++j)
        diff = std::max(diff, std::abs(psi[s][a][j] - xi[s][a][j]));
  return make_report("indicator_reformulation", seed, diff, tol);
}

CheckReport check_contraction(const TabularModel& m,
                              const Vec& reward_per_atom,
                              const std::vector<int>& policy, int n_iters,
                              RandomStream& rng, std::uint64_t seed) {
  const XiTable fixed = xi_iteration(m, reward_per_atom, &policy, 1e-14);
  const QTable q_star = q_from_xi_table(fixed, reward_per_atom);

  // Random start; the seminorm distance must contract by gamma each sweep.
  XiTable xi = zero_xi(m);
  for (auto& per_s : xi)
    for (auto& per_a : per_s)
      for (auto& v : per_a) v = rng.uniform(-1.0, 1.0);

  auto seminorm_dist = [&](const XiTable& x) {
    return max_abs_diff(q_from_xi_table(x, reward_per_atom), q_star);
  };

  double max_rate = 0.0;
  double prev = seminorm_dist(xi);
  for (int it = 0; it < n_iters; ++it) {
    xi = xi_backup(m, xi, reward_per_atom, &policy);
    const double cur = seminorm_dist(xi);
    if (prev > 1e-12) max_rate = std::max(max_rate, cur / prev);
    prev = cur;
    if (cur <= 1e-13) break;
  }
  return make_report("contraction_rate", seed, max_rate, m.gamma + 1e-9);
}

CheckReport check_normalization(const TabularModel& m,
                                const Vec& reward_per_atom, double tol,
                                std::uint64_t seed) {
  const XiTable xi = xi_iteration(m, reward_per_atom, nullptr, 1e-14);
  double dev = 0.0;
  for (int s = 0; s < m.num_states; ++s)
    for (int a = 0; a < m.num_actions; ++a) {
      double sum = 0.0;
      for (int j = 0; j < m.num_atoms; ++j) sum += xi[s][a][j];
      dev = std::max(dev, std::abs((1.0 - m.gamma) * sum - 1.0));
    }
  return make_report("xi_normalization", seed, dev, tol);
}

CheckReport check_gpi_bound(const TabularModel& m,
                            const std::vector<Vec>& source_rewards,
                            const Vec& target_reward, std::uint64_t seed) {
  // Exact optimal xi per source task.
  std::vector<XiTable> sources;
  sources.reserve(source_rewards.size());
  for (const Vec& r : source_rewards)
    sources.push_back(xi_iteration(m, r, nullptr, 1e-14));

  // GPI policy on the target: argmax_a max_i sum_phi R xi_i.
  std::vector<int> pi(m.num_states, 0);
  for (int s = 0; s < m.num_states; ++s) {
    int best_a = 0;
    double best = -1e300;
    for (int a = 0; a < m.num_actions; ++a) {
      for (const XiTable& xi : sources) {
        const double q = dot(xi[s][a], target_reward);
        if (q > best) {
          best = q;
          best_a = a;
        }
      }
    }
    pi[s] = best_a;
  }

  const QTable q_star = value_iteration(m, target_reward, 1e-13);
  const QTable q_pi = policy_q(m, target_reward, pi);
  const double lhs = max_abs_diff(q_star, q_pi);

  // min over sources of sup_{s,a} sum_phi |R - R_i|(phi) p(phi|s,a).
  double min_dist = 1e300;
  for (const Vec& r : source_rewards) {
    double sup = 0.0;
    for (int s = 0; s < m.num_states; ++s)
      for (int a = 0; a < m.num_actions; ++a) {
        const Vec p = m.feature_distribution(s, a);
        double v = 0.0;
        for (int j = 0; j < m.num_atoms; ++j)
          v += std::abs(target_reward[j] - r[j]) * p[j];
        sup = std::max(sup, v);
      }
    min_dist = std::min(min_dist, sup);
  }
  const double rhs = 2.0 / (1.0 - m.gamma) * min_dist;
  // 1e-9 absolute guard for float noise when both sides are ~0.
  auto rep = make_report("gpi_bound", seed, lhs, rhs + 1e-9);
  return rep;
}

}  // namespace xisf::oracle
