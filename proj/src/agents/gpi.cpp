#include "xisf/agents/gpi.hpp"

#include <stdexcept>

namespace xisf::agents {

namespace {

// Best action of one xi entry; returns its value through `best_q`.
int best_action_xi(const PolicyEntry& entry, const Vec& atom_rewards,
                   const StateVec& s, Vec& scratch, double& best_q) {
  const approx::ValueApprox& v = *entry.value.front();
  const int actions = v.action_count(), k = v.output_dim();
  scratch.resize(static_cast<std::size_t>(actions) * k);
  v.predict_all(s, scratch);
  int best_a = 0;
  best_q = -1e300;
  for (int a = 0; a < actions; ++a) {
    double q = 0.0;
    const double* row = scratch.data() + static_cast<std::size_t>(a) * k;
    for (int j = 0; j < k; ++j) q += row[j] * atom_rewards[j];
    if (q > best_q) {
      best_q = q;
      best_a = a;
    }
  }
  return best_a;
}

int best_action_cxi(const PolicyEntry& entry,
                    const std::vector<Vec>& bin_rewards, const StateVec& s,
                    Vec& scratch, double& best_q) {
  const int actions = entry.value.front()->action_count();
  const int bins = entry.value.front()->output_dim();
  Vec q(actions, 0.0);
  for (std::size_t dim = 0; dim < entry.value.size(); ++dim) {
    const approx::ValueApprox& v = *entry.value[dim];
    scratch.resize(static_cast<std::size_t>(actions) * bins);
    v.predict_all(s, scratch);
    const Vec& r = bin_rewards[dim];
    for (int a = 0; a < actions; ++a) {
      const double* row = scratch.data() + static_cast<std::size_t>(a) * bins;
      for (int u = 0; u < bins; ++u) q[a] += row[u] * r[u];
    }
  }
  int best_a = 0;
  best_q = -1e300;
  for (int a = 0; a < actions; ++a)
    if (q[a] > best_q) {
      best_q = q[a];
      best_a = a;
    }
  return best_a;
}

}  // namespace

GpiChoice gpi_select_xi(const PolicyLibrary& lib, const Vec& atom_rewards,
                        const StateVec& s, Vec& scratch) {
  if (lib.empty()) throw std::logic_error("gpi_select: empty library");
  GpiChoice choice;
  double best = -1e300;
  for (int k = 0; k < lib.size(); ++k) {
    double q;
    const int a = best_action_xi(lib.entry(k), atom_rewards, s, scratch, q);
    if (q > best) {
      best = q;
      choice = {a, k};
    }
  }
  return choice;
}

GpiChoice gpi_select_psi(const PolicyLibrary& lib, const Vec& w,
                         const StateVec& s, Vec& scratch) {
  // psi^T w has the same shape as the xi sum with atom_rewards = w.
  return gpi_select_xi(lib, w, s, scratch);
}

GpiChoice gpi_select_cxi(const PolicyLibrary& lib,
                         const std::vector<Vec>& bin_rewards,
                         const StateVec& s, Vec& scratch) {
  if (lib.empty()) throw std::logic_error("gpi_select: empty library");
  GpiChoice choice;
  double best = -1e300;
  for (int k = 0; k < lib.size(); ++k) {
    double q;
    const int a = best_action_cxi(lib.entry(k), bin_rewards, s, scratch, q);
    if (q > best) {
      best = q;
      choice = {a, k};
    }
  }
  return choice;
}

int greedy_action_xi(const PolicyEntry& entry, const Vec& atom_rewards,
                     const StateVec& s, Vec& scratch) {
  double q;
  return best_action_xi(entry, atom_rewards, s, scratch, q);
}

int greedy_action_psi(const PolicyEntry& entry, const Vec& w,
                      const StateVec& s, Vec& scratch) {
  double q;
  return best_action_xi(entry, w, s, scratch, q);
}

int greedy_action_cxi(const PolicyEntry& entry,
                      const std::vector<Vec>& bin_rewards, const StateVec& s,
                      Vec& scratch) {
  double q;
  return best_action_cxi(entry, bin_rewards, s, scratch, q);
}

}  // namespace xisf::agents
