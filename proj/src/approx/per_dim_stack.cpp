#include "xisf/approx/per_dim_stack.hpp"

#include <stdexcept>

namespace xisf::approx {

PerDimStack::PerDimStack(std::vector<std::unique_ptr<ValueApprox>> nets)
    : nets_(std::move(nets)) {
  if (nets_.empty()) throw std::invalid_argument("PerDimStack: no nets");
  for (const auto& n : nets_)
    if (n->output_dim() != 1)
      throw std::invalid_argument("PerDimStack: subnets must be scalar");
}

void PerDimStack::predict(const StateVec& s, int a, Vec& out) const {
  sub_out_.resize(1);
  for (std::size_t k = 0; k < nets_.size(); ++k) {
    nets_[k]->predict(s, a, sub_out_);
    out[k] = sub_out_[0];
  }
}

void PerDimStack::predict_all(const StateVec& s, Vec& out) const {
  const int actions = action_count();
  const int n = output_dim();
  out.resize(static_cast<std::size_t>(actions) * n);
  sub_all_.resize(actions);
  for (int k = 0; k < n; ++k) {
    nets_[k]->predict_all(s, sub_all_);
    for (int a = 0; a < actions; ++a)
      out[static_cast<std::size_t>(a) * n + k] = sub_all_[a];
  }
}

void PerDimStack::sgd_step(const StateVec& s, int a, const Vec& target,
                           double alpha) {
  sub_target_.resize(1);
  for (std::size_t k = 0; k < nets_.size(); ++k) {
    sub_target_[0] = target[k];
    nets_[k]->sgd_step(s, a, sub_target_, alpha);
  }
}

std::unique_ptr<ValueApprox> PerDimStack::clone() const {
  std::vector<std::unique_ptr<ValueApprox>> nets;
  nets.reserve(nets_.size());
  for (const auto& n : nets_) nets.push_back(n->clone());
  return std::make_unique<PerDimStack>(std::move(nets));
}

Vec PerDimStack::params_copy() const {
  Vec all;
  for (const auto& n : nets_) {
    const Vec p = n->params_copy();
    all.insert(all.end(), p.begin(), p.end());
  }
  return all;
}

void PerDimStack::set_params(const Vec& params) {
  std::size_t off = 0;
  for (auto& n : nets_) {
    Vec p = n->params_copy();
    std::copy(params.begin() + off, params.begin() + off + p.size(),
              p.begin());
    n->set_params(p);
    off += p.size();
  }
}

std::string PerDimStack::descriptor() const {
  return "per-dim-stack " + std::to_string(nets_.size()) + " x " +
         nets_.front()->descriptor();
}

}  // namespace xisf::approx
