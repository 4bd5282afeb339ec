#include "xisf/approx/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace xisf::approx {

Mlp::Mlp(std::vector<int> layer_sizes, InitScheme init, RandomStream& rng)
    : sizes_(std::move(layer_sizes)) {
  if (sizes_.size() < 2) throw std::invalid_argument("Mlp: need >= 2 layers");
  std::size_t total = 0;
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    offsets_.push_back(total);
    total += static_cast<std::size_t>(sizes_[l + 1]) * sizes_[l] +
             sizes_[l + 1];
  }
  params_.resize(total);
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    const int in = sizes_[l], out = sizes_[l + 1];
    double* w = params_.data() + offsets_[l];
    if (init.kind == InitScheme::kNormal) {
      for (int i = 0; i < out * in; ++i) w[i] = rng.normal(0.0, init.normal_std);
      for (int i = 0; i < out; ++i) w[out * in + i] = 0.0;
    } else {
      const double bound = std::sqrt(1.0 / in);
      for (int i = 0; i < out * in; ++i) w[i] = rng.uniform(-bound, bound);
      for (int i = 0; i < out; ++i) w[out * in + i] = 0.0;  // bias zero
    }
  }
  acts_.resize(sizes_.size() - 1);
  pre_.resize(sizes_.size() - 1);
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    acts_[l].resize(sizes_[l + 1]);
    pre_[l].resize(sizes_[l + 1]);
  }
}

const Vec& Mlp::forward(const double* x, int n) const {
  if (n != sizes_.front()) throw std::invalid_argument("Mlp: input dim");
  const double* in = x;
  int in_n = n;
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    const int out_n = sizes_[l + 1];
    const double* w = params_.data() + offsets_[l];
    const double* b = w + static_cast<std::size_t>(out_n) * in_n;
    const bool last = (l + 2 == sizes_.size());
    for (int o = 0; o < out_n; ++o) {
      double acc = b[o];
      const double* row = w + static_cast<std::size_t>(o) * in_n;
      for (int i = 0; i < in_n; ++i) acc += row[i] * in[i];
      pre_[l][o] = acc;
      acts_[l][o] = last ? acc : (acc > 0.0 ? acc : 0.0);
    }
    in = acts_[l].data();
    in_n = out_n;
  }
  return acts_.back();
}

void Mlp::apply_output_gradient(const double* x, const Vec& dl_dout,
                                double alpha) {
  const std::size_t layers = sizes_.size() - 1;
  Vec delta = dl_dout;  // dL/d(pre) of the output layer (linear output)
  for (std::size_t l = layers; l-- > 0;) {
    const int in_n = sizes_[l], out_n = sizes_[l + 1];
    const double* in = (l == 0) ? x : acts_[l - 1].data();
    double* w = params_.data() + offsets_[l];
    double* b = w + static_cast<std::size_t>(out_n) * in_n;

    Vec prev_delta;
    if (l > 0) {
      prev_delta.assign(in_n, 0.0);
      for (int o = 0; o < out_n; ++o) {
        const double d = delta[o];
        if (d == 0.0) continue;
        const double* row = w + static_cast<std::size_t>(o) * in_n;
        for (int i = 0; i < in_n; ++i) prev_delta[i] += d * row[i];
      }
      for (int i = 0; i < in_n; ++i)
        if (pre_[l - 1][i] <= 0.0) prev_delta[i] = 0.0;
    }

    for (int o = 0; o < out_n; ++o) {
      const double step = alpha * delta[o];
      if (step == 0.0) continue;
      double* row = w + static_cast<std::size_t>(o) * in_n;
      for (int i = 0; i < in_n; ++i) row[i] -= step * in[i];
      b[o] -= step;
    }
    delta = std::move(prev_delta);
  }
}

MlpValueApprox::MlpValueApprox(std::vector<int> hidden, int state_dim,
                               int actions, int outputs, InitScheme init,
                               RandomStream& rng)
    : state_dim_(state_dim),
      actions_(actions),
      outputs_(outputs),
      net_([&] {
        std::vector<int> sizes{state_dim};
        sizes.insert(sizes.end(), hidden.begin(), hidden.end());
        sizes.push_back(actions * outputs);
        return sizes;
      }(), init, rng),
      dout_(actions * outputs, 0.0) {}

void MlpValueApprox::predict(const StateVec& s, int a, Vec& out) const {
  const Vec& o = net_.forward(s.values.data(), s.dim());
  for (int k = 0; k < outputs_; ++k) out[k] = o[a * outputs_ + k];
}

void MlpValueApprox::predict_all(const StateVec& s, Vec& out) const {
  const Vec& o = net_.forward(s.values.data(), s.dim());
  out.assign(o.begin(), o.end());
}

void MlpValueApprox::sgd_step(const StateVec& s, int a, const Vec& target,
                              double alpha) {
  for (double t : target)
    if (!std::isfinite(t))
      throw std::invalid_argument("MlpValueApprox: non-finite target");
  const Vec& o = net_.forward(s.values.data(), s.dim());
  std::fill(dout_.begin(), dout_.end(), 0.0);
  for (int k = 0; k < outputs_; ++k)
    dout_[a * outputs_ + k] = 2.0 * (o[a * outputs_ + k] - target[k]);
  net_.apply_output_gradient(s.values.data(), dout_, alpha);
}

std::string MlpValueApprox::descriptor() const {
  std::string d = "mlp";
  for (int n : net_.layer_sizes()) d += " " + std::to_string(n);
  return d;
}

RewardMlp::RewardMlp(int feature_dim, InitScheme init, RandomStream& rng)
    : net_({feature_dim, 10, 1}, init, rng) {}

double RewardMlp::value(const FeatureVec& phi) const {
  return net_.forward(phi.values.data(), phi.dim())[0];
}

void RewardMlp::step(const FeatureVec& phi, double r, double alpha_r) {
  const Vec& o = net_.forward(phi.values.data(), phi.dim());
  const Vec dout{2.0 * (o[0] - r)};
  net_.apply_output_gradient(phi.values.data(), dout, alpha_r);
}

}  // namespace xisf::approx
