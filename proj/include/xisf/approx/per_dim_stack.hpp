#pragma once

#include <vector>

#include "xisf/approx/value_approx.hpp"

namespace xisf::approx {

// K-output approximator assembled from K independent single-output
// sub-approximators (the racer psi architecture: one subnetwork per
// feature dimension). The summed squared loss over components splits into
// one squared loss per subnetwork, so updates route component k to net k.
class PerDimStack : public ValueApprox {
 public:
  explicit PerDimStack(std::vector<std::unique_ptr<ValueApprox>> nets);

  int state_dim() const override { return nets_.front()->state_dim(); }
  int action_count() const override { return nets_.front()->action_count(); }
  int output_dim() const override { return static_cast<int>(nets_.size()); }

  void predict(const StateVec& s, int a, Vec& out) const override;
  void predict_all(const StateVec& s, Vec& out) const override;
  void sgd_step(const StateVec& s, int a, const Vec& target,
                double alpha) override;

  std::unique_ptr<ValueApprox> clone() const override;
  Vec params_copy() const override;
  void set_params(const Vec& params) override;
  std::string descriptor() const override;

 private:
  std::vector<std::unique_ptr<ValueApprox>> nets_;
  mutable Vec sub_out_, sub_all_, sub_target_;
};

}  // namespace xisf::approx
