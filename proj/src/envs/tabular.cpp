#include "xisf/envs/tabular.hpp"

#include <stdexcept>

namespace xisf::envs {

TabularEnv::TabularEnv(oracle::TabularModel model, int start_state)
    : model_(std::move(model)), start_state_(start_state) {
  model_.validate();
  for (int j = 0; j < model_.num_atoms; ++j) {
    FeatureVec e;
    e.values.assign(model_.num_atoms, 0.0);
    e.values[j] = 1.0;
    atoms_.atoms.push_back(std::move(e));
  }
}

StateVec TabularEnv::one_hot(int state) const {
  StateVec s;
  s.values.assign(model_.num_states, 0.0);
  s.values[state] = 1.0;
  return s;
}

StateVec TabularEnv::reset(RandomStream&) {
  state_ = start_state_;
  done_ = false;
  return one_hot(state_);
}

Transition TabularEnv::step(ActionId a, RandomStream& rng) {
  if (done_) throw std::logic_error("TabularEnv: step on finished episode");
  Transition tr;
  tr.s = one_hot(state_);
  tr.a = a;

  const Vec& row = model_.kernel[state_][a.index];
  double u = rng.uniform(0.0, 1.0);
  int next = model_.num_states - 1;
  for (int t = 0; t < model_.num_states; ++t) {
    u -= row[t];
    if (u <= 0.0) {
      next = t;
      break;
    }
  }
  const int atom = model_.feature_map[state_][a.index][next];
  tr.phi = atoms_.atoms[atom];
  tr.reward = task_.evaluate(tr.phi);
  tr.terminal = model_.is_terminal(next);
  tr.s_next = one_hot(next);
  state_ = next;
  done_ = tr.terminal;
  return tr;
}

oracle::TabularModel make_gridworld(int width, int height, double gamma) {
  oracle::TabularModel m;
  m.num_states = width * height;
  m.num_actions = 4;
  m.num_atoms = 4;
  m.gamma = gamma;
  m.kernel.assign(m.num_states,
                  std::vector<Vec>(4, Vec(m.num_states, 0.0)));
  m.feature_map.assign(
      m.num_states,
      std::vector<std::vector<int>>(4, std::vector<int>(m.num_states, 0)));
  auto quadrant = [&](int s) {
    const int x = s % width, y = s / width;
    return (x >= width / 2 ? 1 : 0) + (y >= height / 2 ? 2 : 0);
  };
  for (int s = 0; s < m.num_states; ++s) {
    const int x = s % width, y = s / width;
    for (int a = 0; a < 4; ++a) {
      int nx = x, ny = y;
      switch (a) {
        case 0: ny = std::min(height - 1, y + 1); break;
        case 1: ny = std::max(0, y - 1); break;
        case 2: nx = std::max(0, x - 1); break;
        case 3: nx = std::min(width - 1, x + 1); break;
      }
      const int t = ny * width + nx;
      m.kernel[s][a][t] = 1.0;
      for (int t2 = 0; t2 < m.num_states; ++t2)
        m.feature_map[s][a][t2] = quadrant(t2);
    }
  }
  m.validate();
  return m;
}

oracle::TabularModel make_two_state_chain(double gamma) {
  oracle::TabularModel m;
  m.num_states = 2;
  m.num_actions = 1;
  m.num_atoms = 2;
  m.gamma = gamma;
  m.kernel = {{{0.0, 1.0}}, {{0.0, 1.0}}};
  m.feature_map = {{{0, 1}}, {{0, 1}}};
  m.validate();
  return m;
}

}  // namespace xisf::envs
