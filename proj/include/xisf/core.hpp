#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "xisf/rng.hpp"

namespace xisf {

using Vec = std::vector<double>;

// Dense state vector. Dim is fixed per environment instance
// (113 object env, 120 racer, |S| one-hot for tabular).
struct StateVec {
  Vec values;

  int dim() const { return static_cast<int>(values.size()); }
  double operator[](std::size_t i) const { return values[i]; }
};

struct ActionId {
  int index = 0;
};

// Transition feature descriptor phi. Binary atoms for the object env,
// [0,1]^3 for the racer.
struct FeatureVec {
  Vec values;

  int dim() const { return static_cast<int>(values.size()); }
  double operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const FeatureVec& a, const FeatureVec& b) {
    return a.values == b.values;
  }
};

// Ordered set of distinct feature atoms. The ordering is the indexing
// contract for xi/psi storage and must not change during a run.
struct DiscreteFeatureSet {
  std::vector<FeatureVec> atoms;

  int size() const { return static_cast<int>(atoms.size()); }

  // Exact-equality lookup; returns -1 if absent.
  int index_of(const FeatureVec& phi) const {
    for (int i = 0; i < size(); ++i)
      if (atoms[i] == phi) return i;
    return -1;
  }
};

struct GaussianComponent {
  double mu = 0.0;     // preferred distance
  double sigma = 0.0;  // width, > 0
};

// Reward definition over features. Three shapes:
//  - LinearWeights: r = phi . w
//  - TabularRewards: r per feature atom (requires the atom set)
//  - PerDimGaussianMix: r = sum_k (1/n) max_j exp(-(phi_k-mu_j)^2/sigma_j)
struct LinearWeights {
  Vec w;
};

struct TabularRewards {
  Vec per_atom;  // indexed by atom order of `atoms`
  std::shared_ptr<const DiscreteFeatureSet> atoms;
};

struct PerDimGaussianMix {
  std::vector<std::vector<GaussianComponent>> dims;  // 1 or 2 per dimension
};

struct TaskSpec {
  std::variant<LinearWeights, TabularRewards, PerDimGaussianMix> variant;

  bool is_linear() const {
    return std::holds_alternative<LinearWeights>(variant);
  }
  bool is_tabular() const {
    return std::holds_alternative<TabularRewards>(variant);
  }
  bool is_per_dim() const {
    return std::holds_alternative<PerDimGaussianMix>(variant);
  }

  const Vec& linear_weights() const {
    return std::get<LinearWeights>(variant).w;
  }

  double evaluate(const FeatureVec& phi) const;

  // Additive per-dimension reward r_k at feature value x. Defined for
  // PerDimGaussianMix (the mix itself) and LinearWeights (w_k * x).
  double evaluate_dim(int k, double x) const;
};

struct Transition {
  StateVec s;
  ActionId a;
  StateVec s_next;
  FeatureVec phi;
  double reward = 0.0;
  bool terminal = false;
};

struct Hyperparams {
  double gamma = 0.95;    // discount, < 1
  double epsilon = 0.15;  // exploration probability
  double alpha = 0.005;   // value-function rate
  double alpha_w = 0.05;  // reward-weight rate
  double alpha_r = 0.05;  // reward-model rate
  double beta = 0.4;      // one-step-model rate

  void validate() const;
};

// Environment contract. A single-threaded mutable state machine; run
// distinct instances in parallel, never one instance from two threads.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual int state_dim() const = 0;
  virtual int action_count() const = 0;
  virtual int feature_dim() const = 0;

  // Atom set for discrete-feature environments, nullptr for continuous.
  virtual const DiscreteFeatureSet* feature_atoms() const { return nullptr; }

  virtual void set_task(TaskSpec task) = 0;
  virtual const TaskSpec& task() const = 0;

  virtual StateVec reset(RandomStream& rng) = 0;
  virtual Transition step(ActionId a, RandomStream& rng) = 0;

  // True once the current episode ended (terminal state or episode cap);
  // the run loop resets before stepping again.
  virtual bool episode_finished() const = 0;
};

// Index of the maximum entry; ties resolve to the lowest index.
// Throws on empty or non-finite input.
int argmax_tiebreak(const Vec& values);

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace xisf
