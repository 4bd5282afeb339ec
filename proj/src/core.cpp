#include "xisf/core.hpp"

#include <algorithm>

namespace xisf {

double TaskSpec::evaluate(const FeatureVec& phi) const {
  if (const auto* lin = std::get_if<LinearWeights>(&variant)) {
    if (lin->w.size() != phi.values.size())
      throw std::invalid_argument("TaskSpec: weight/feature dim mismatch");
    return dot(lin->w, phi.values);
  }
  if (const auto* tab = std::get_if<TabularRewards>(&variant)) {
    const int idx = tab->atoms->index_of(phi);
    if (idx < 0) throw std::invalid_argument("TaskSpec: unknown feature atom");
    return tab->per_atom[idx];
  }
  const auto& mix = std::get<PerDimGaussianMix>(variant);
  if (mix.dims.size() != phi.values.size())
    throw std::invalid_argument("TaskSpec: mix/feature dim mismatch");
  double r = 0.0;
  for (std::size_t k = 0; k < mix.dims.size(); ++k)
    r += evaluate_dim(static_cast<int>(k), phi.values[k]);
  return r;
}

double TaskSpec::evaluate_dim(int k, double x) const {
  if (const auto* lin = std::get_if<LinearWeights>(&variant))
    return lin->w[k] * x;
  const auto& mix = std::get<PerDimGaussianMix>(variant);
  const auto& comps = mix.dims[k];
  double best = 0.0;
  for (const auto& c : comps) {
    const double d = x - c.mu;
    best = std::max(best, std::exp(-d * d / c.sigma));
  }
  return best / static_cast<double>(mix.dims.size());
}

void Hyperparams::validate() const {
  auto rate_ok = [](double r) { return r > 0.0 && r <= 1.0; };
  if (!(gamma >= 0.0 && gamma < 1.0))
    throw std::invalid_argument("gamma must be in [0,1)");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("epsilon must be in [0,1]");
  if (!rate_ok(alpha) || !rate_ok(alpha_w) || !rate_ok(alpha_r) ||
      !rate_ok(beta))
    throw std::invalid_argument("learning rates must be in (0,1]");
}

int argmax_tiebreak(const Vec& values) {
  if (values.empty())
    throw std::invalid_argument("argmax_tiebreak: empty input");
  int best = 0;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (!std::isfinite(values[i]))
      throw std::invalid_argument("argmax_tiebreak: non-finite input");
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace xisf
