#pragma once

#include <string>
#include <vector>

#include "xisf/oracle/dp.hpp"

namespace xisf::oracle {

// One numerical witness. `lhs <= rhs` is the claim; slack = rhs - lhs.
struct CheckReport {
  std::string name;
  std::uint64_t instance_seed = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;

  std::string to_json() const;
};

// |psi^T w - sum_phi R xi| at the optimal fixed points of both DP routes,
// for a linear task. lhs = max abs diff, rhs = tol.
CheckReport check_sf_xi_equivalence(const TabularModel& m,
                                    const DiscreteFeatureSet& atoms,
                                    const Vec& w, double tol,
                                    std::uint64_t seed = 0);

// Atomwise match between xi and the SF of the binary-indicator
// reformulation (indicator features, weights = per-atom rewards).
CheckReport check_indicator_reformulation(const TabularModel& m,
                                          const Vec& reward_per_atom,
                                          double tol, std::uint64_t seed = 0);

// Measured contraction rate of the exact xi operator under a fixed policy,
// in the induced-Q seminorm. lhs = max observed rate, rhs = gamma + eps.
CheckReport check_contraction(const TabularModel& m,
                              const Vec& reward_per_atom,
                              const std::vector<int>& policy, int n_iters,
                              RandomStream& rng, std::uint64_t seed = 0);

// (1 - gamma) * sum_phi xi == 1 at the DP fixed point.
// lhs = max deviation from 1, rhs = tol.
CheckReport check_normalization(const TabularModel& m,
                                const Vec& reward_per_atom, double tol,
                                std::uint64_t seed = 0);

// GPI transfer bound with exact source xi-functions (epsilon = 0):
// ||Q* - Q^pi||_inf <= 2/(1-gamma) * min_i sup_{s,a} sum_phi |R-R_i| p(phi|s,a).
CheckReport check_gpi_bound(const TabularModel& m,
                            const std::vector<Vec>& source_rewards,
                            const Vec& target_reward, std::uint64_t seed = 0);

}  // namespace xisf::oracle
