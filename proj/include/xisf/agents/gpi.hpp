#pragma once

#include "xisf/agents/policy_library.hpp"

namespace xisf::agents {

struct GpiChoice {
  int action = 0;
  int source = 0;  // library index c attaining the max
};

// Generalized policy improvement: evaluates every stored policy's Q under
// the current task's reward and returns the joint argmax. Ties break to
// the lowest library index, then the lowest action index.
//
// Discrete form: Q_k(s,a) = sum_j xi_k(s,a,j) * atom_rewards[j].
GpiChoice gpi_select_xi(const PolicyLibrary& lib, const Vec& atom_rewards,
                        const StateVec& s, Vec& scratch);

// Classical SF form: Q_k(s,a) = psi_k(s,a)^T w.
GpiChoice gpi_select_psi(const PolicyLibrary& lib, const Vec& w,
                         const StateVec& s, Vec& scratch);

// CXi form: Q_k(s,a) = sum_dims sum_bins xi_{k,dim}(s,a,bin) *
// bin_rewards[dim][bin].
GpiChoice gpi_select_cxi(const PolicyLibrary& lib,
                         const std::vector<Vec>& bin_rewards,
                         const StateVec& s, Vec& scratch);

// Greedy action of a single entry under the given rewards (the secondary
// "own policy" action of the GPI off-policy update).
int greedy_action_xi(const PolicyEntry& entry, const Vec& atom_rewards,
                     const StateVec& s, Vec& scratch);
int greedy_action_psi(const PolicyEntry& entry, const Vec& w,
                      const StateVec& s, Vec& scratch);
int greedy_action_cxi(const PolicyEntry& entry,
                      const std::vector<Vec>& bin_rewards, const StateVec& s,
                      Vec& scratch);

}  // namespace xisf::agents
