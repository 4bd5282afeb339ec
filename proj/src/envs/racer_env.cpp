#include "xisf/envs/racer_env.hpp"

#include <cmath>
#include <stdexcept>

namespace xisf::envs {

namespace {

double wrap_unit(double v) { return v - std::floor(v); }

double wrap_angle(double t) {
  t = std::fmod(t + M_PI, 2.0 * M_PI);
  if (t < 0.0) t += 2.0 * M_PI;
  return t - M_PI;
}

}  // namespace

StateVec RacerEnv::observe() const {
  StateVec s;
  Vec pos, ori;
  rbf_encode_position(x_, y_, kDefaultPositionSigma, Metric::kTorus, pos);
  rbf_encode_orientation(theta_, ori);
  s.values.reserve(state_dim());
  s.values.insert(s.values.end(), pos.begin(), pos.end());
  s.values.insert(s.values.end(), ori.begin(), ori.end());
  return s;
}

FeatureVec RacerEnv::features_at(double x, double y) const {
  FeatureVec phi;
  phi.values.resize(3);
  for (int k = 0; k < 3; ++k)
    phi.values[k] =
        torus_distance(x, y, kMarkers[k][0], kMarkers[k][1]) / kMaxDistance;
  return phi;
}

StateVec RacerEnv::reset(RandomStream& rng) {
  x_ = rng.uniform(0.0, 1.0);
  y_ = rng.uniform(0.0, 1.0);
  theta_ = rng.uniform(-M_PI, M_PI);
  step_count_ = 0;
  return observe();
}

Transition RacerEnv::step(ActionId a, RandomStream& rng) {
  if (episode_finished())
    throw std::logic_error("RacerEnv: step on finished episode");

  Transition tr;
  tr.s = observe();
  tr.a = a;

  double move = 0.0;
  switch (a.index) {
    case 0: theta_ += M_PI / 7.0; move = 0.06; break;   // right
    case 1: move = 0.075; break;                        // straight
    case 2: theta_ -= M_PI / 7.0; move = 0.06; break;   // left
    default: throw std::invalid_argument("RacerEnv: bad action");
  }
  x_ += move * std::cos(theta_);
  y_ += move * std::sin(theta_);
  // Noise applies to the final pose.
  x_ = wrap_unit(x_ + rng.normal(0.0, 0.005));
  y_ = wrap_unit(y_ + rng.normal(0.0, 0.005));
  theta_ = wrap_angle(theta_ + rng.normal(0.0, 0.005));

  ++step_count_;
  tr.phi = features_at(x_, y_);
  tr.reward = task_.evaluate(tr.phi);
  tr.terminal = step_count_ >= kEpisodeLength;
  tr.s_next = observe();
  return tr;
}

}  // namespace xisf::envs
