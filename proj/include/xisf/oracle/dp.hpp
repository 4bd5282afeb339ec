#pragma once

#include <vector>

#include "xisf/oracle/tabular_model.hpp"

namespace xisf::oracle {

// Q table indexed [s][a]; xi table indexed [s][a][atom].
using QTable = std::vector<Vec>;
using XiTable = std::vector<std::vector<Vec>>;

QTable zero_q(const TabularModel& m);
XiTable zero_xi(const TabularModel& m);

// Optimal Q via value iteration to sup-norm residual <= tol.
QTable value_iteration(const TabularModel& m, const Vec& reward_per_atom,
                       double tol = 1e-13, int max_sweeps = 1000000);

// Greedy policy (lowest-index ties) of a Q table.
std::vector<int> greedy_policy(const QTable& q);

// Exact Q of a fixed deterministic policy, by linear solve of
// (I - gamma * P_pi) v = r_pi. No iteration tolerance involved.
QTable policy_q(const TabularModel& m, const Vec& reward_per_atom,
                const std::vector<int>& policy);

// One application of the exact xi Bellman operator. In optimality mode the
// next action at s' is greedy for the Q induced by `reward_per_atom`;
// otherwise `policy` fixes it.
XiTable xi_backup(const TabularModel& m, const XiTable& xi,
                  const Vec& reward_per_atom,
                  const std::vector<int>* policy = nullptr,
                  const std::vector<Vec>* feature_probs = nullptr);

// Fixed point of the exact xi operator. `policy == nullptr` selects
// optimality mode. `feature_probs`, when given, replaces the kernel-derived
// one-step feature distribution (the one-step-model form of the operator).
XiTable xi_iteration(const TabularModel& m, const Vec& reward_per_atom,
                     const std::vector<int>* policy = nullptr,
                     double tol = 1e-13, int max_sweeps = 1000000,
                     const std::vector<Vec>* feature_probs = nullptr,
                     const XiTable* init = nullptr);

// Q induced by a xi table under the given per-atom rewards.
QTable q_from_xi_table(const XiTable& xi, const Vec& reward_per_atom);

// psi table indexed [s][a][feature-dim].
using PsiTable = std::vector<std::vector<Vec>>;

// Fixed point of the psi Bellman equation under the greedy policy w.r.t.
// psi^T w (optimality mode). `atoms` supplies the feature vector per atom.
PsiTable psi_iteration(const TabularModel& m, const DiscreteFeatureSet& atoms,
                       const Vec& w, double tol = 1e-13,
                       int max_sweeps = 1000000);

QTable q_from_psi_table(const PsiTable& psi, const Vec& w);

double max_abs_diff(const QTable& a, const QTable& b);

}  // namespace xisf::oracle
