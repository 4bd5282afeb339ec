#pragma once

#include <memory>
#include <string>

#include "xisf/core.hpp"

namespace xisf::approx {

// Parameter initialization for the approximators.
struct InitScheme {
  enum Kind { kNormal, kUniformFanIn } kind = kNormal;
  double normal_std = 0.01;

  static InitScheme normal(double std) { return {kNormal, std}; }
  static InitScheme uniform_fan_in() { return {kUniformFanIn, 0.0}; }
};

// A state-action value approximator with K outputs per (s, a).
// Single-writer; concurrent reads only between updates.
class ValueApprox {
 public:
  virtual ~ValueApprox() = default;

  virtual int state_dim() const = 0;
  virtual int action_count() const = 0;
  virtual int output_dim() const = 0;  // K

  // out must have size K.
  virtual void predict(const StateVec& s, int a, Vec& out) const = 0;

  // out must have size A*K, action-major.
  virtual void predict_all(const StateVec& s, Vec& out) const = 0;

  // One SGD step on sum_k (target_k - predict_k)^2; the target is a
  // constant w.r.t. the parameters. Only action a's slice changes.
  virtual void sgd_step(const StateVec& s, int a, const Vec& target,
                        double alpha) = 0;

  virtual std::unique_ptr<ValueApprox> clone() const = 0;

  // Flat parameter access (serialization, gradient checking).
  virtual Vec params_copy() const = 0;
  virtual void set_params(const Vec& params) = 0;

  // Descriptor for snapshot headers, e.g. "linear 113 4 6".
  virtual std::string descriptor() const = 0;
};

}  // namespace xisf::approx
