#include "xisf/envs/object_env.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xisf::envs {

namespace {

DiscreteFeatureSet build_atoms(ObjectVariant variant) {
  DiscreteFeatureSet set;
  auto add = [&set](std::initializer_list<double> v) {
    set.atoms.push_back(FeatureVec{Vec(v)});
  };
  if (variant == ObjectVariant::kModified) {
    add({0, 0, 0, 0, 0});  // nothing happened
    add({1, 0, 1, 0, 0});  // orange box
    add({1, 0, 0, 1, 0});  // orange triangle
    add({0, 1, 1, 0, 0});  // blue box
    add({0, 1, 0, 1, 0});  // blue triangle
    add({0, 0, 0, 0, 1});  // goal
  } else {
    add({0, 0, 0, 0});
    add({1, 0, 0, 0});  // orange
    add({0, 1, 0, 0});  // blue
    add({0, 0, 1, 0});  // pink
    add({0, 0, 0, 1});  // goal
  }
  return set;
}

bool in_gap(double v) {
  return (v >= 0.19 && v <= 0.31) || (v >= 0.69 && v <= 0.81);
}

}  // namespace

bool ObjectCollectionEnv::in_wall(double x, double y) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) return true;
  if (std::abs(x - 0.5) <= 0.02 && !in_gap(y)) return true;
  if (std::abs(y - 0.5) <= 0.02 && !in_gap(x)) return true;
  return false;
}

std::vector<ObjectRecord> ObjectCollectionEnv::default_layout(
    ObjectVariant variant) {
  using C = ObjectColor;
  using S = ObjectShape;
  // 3 objects per room, 3 of each color x shape combination.
  std::vector<ObjectRecord> objs = {
      {0.15, 0.30, C::kOrange, S::kBox},
      {0.30, 0.15, C::kBlue, S::kTriangle},
      {0.40, 0.40, C::kOrange, S::kTriangle},
      {0.65, 0.15, C::kBlue, S::kBox},
      {0.85, 0.30, C::kOrange, S::kBox},
      {0.70, 0.40, C::kBlue, S::kTriangle},
      {0.15, 0.65, C::kOrange, S::kTriangle},
      {0.30, 0.85, C::kBlue, S::kBox},
      {0.40, 0.70, C::kBlue, S::kTriangle},
      {0.60, 0.60, C::kOrange, S::kBox},
      {0.85, 0.70, C::kOrange, S::kTriangle},
      {0.65, 0.90, C::kBlue, S::kBox},
  };
  if (variant == ObjectVariant::kOriginal) {
    // 3 object types, 4 objects each, shapes unused.
    static const C cycle[3] = {C::kOrange, C::kBlue, C::kPink};
    for (std::size_t i = 0; i < objs.size(); ++i) {
      objs[i].color = cycle[i % 3];
      objs[i].shape = S::kNone;
    }
  }
  return objs;
}

std::vector<ObjectRecord> ObjectCollectionEnv::load_layout(
    const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("object layout: cannot open " + path);
  std::vector<ObjectRecord> objs;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    ObjectRecord rec;
    std::string color, shape;
    if (!(ss >> rec.x >> rec.y >> color >> shape))
      throw std::runtime_error("object layout: bad line: " + line);
    if (color == "orange")
      rec.color = ObjectColor::kOrange;
    else if (color == "blue")
      rec.color = ObjectColor::kBlue;
    else if (color == "pink")
      rec.color = ObjectColor::kPink;
    else
      throw std::runtime_error("object layout: unknown color " + color);
    if (shape == "box")
      rec.shape = ObjectShape::kBox;
    else if (shape == "triangle")
      rec.shape = ObjectShape::kTriangle;
    else
      rec.shape = ObjectShape::kNone;
    objs.push_back(rec);
  }
  return objs;
}

ObjectCollectionEnv::ObjectCollectionEnv(ObjectVariant variant,
                                         std::vector<ObjectRecord> objects,
                                         double rbf_sigma)
    : variant_(variant),
      objects_(objects.empty() ? default_layout(variant) : std::move(objects)),
      rbf_sigma_(rbf_sigma),
      atoms_(build_atoms(variant)),
      collected_(kNumObjects, false) {
  if (static_cast<int>(objects_.size()) != kNumObjects)
    throw std::invalid_argument("ObjectCollectionEnv: need 12 objects");
}

int ObjectCollectionEnv::collected_count() const {
  int n = 0;
  for (bool b : collected_) n += b ? 1 : 0;
  return n;
}

StateVec ObjectCollectionEnv::observe() const {
  StateVec s;
  s.values.reserve(state_dim());
  rbf_encode_position(x_, y_, rbf_sigma_, Metric::kEuclidean, s.values);
  s.values.resize(kPositionCells);
  for (bool b : collected_) s.values.push_back(b ? 1.0 : 0.0);
  s.values.push_back(1.0);  // constant term
  return s;
}

FeatureVec ObjectCollectionEnv::feature_for(int collected_object,
                                            bool reached_goal) const {
  FeatureVec phi;
  phi.values.assign(feature_dim(), 0.0);
  if (reached_goal) {
    phi.values.back() = 1.0;
    return phi;
  }
  if (collected_object < 0) return phi;
  const ObjectRecord& obj = objects_[collected_object];
  if (variant_ == ObjectVariant::kModified) {
    phi.values[obj.color == ObjectColor::kOrange ? 0 : 1] = 1.0;
    phi.values[obj.shape == ObjectShape::kBox ? 2 : 3] = 1.0;
  } else {
    phi.values[static_cast<int>(obj.color)] = 1.0;
  }
  return phi;
}

StateVec ObjectCollectionEnv::reset(RandomStream&) {
  x_ = kStartX;
  y_ = kStartY;
  collected_.assign(kNumObjects, false);
  episode_done_ = false;
  episode_steps_ = 0;
  return observe();
}

Transition ObjectCollectionEnv::step(ActionId a, RandomStream& rng) {
  if (episode_done_)
    throw std::logic_error("ObjectCollectionEnv: step on finished episode");

  Transition tr;
  tr.s = observe();
  tr.a = a;

  const double d = rng.normal(0.05, 0.005);
  double nx = x_, ny = y_;
  switch (a.index) {
    case 0: ny += d; break;
    case 1: ny -= d; break;
    case 2: nx -= d; break;
    case 3: nx += d; break;
    default: throw std::invalid_argument("ObjectCollectionEnv: bad action");
  }
  if (!in_wall(nx, ny)) {
    x_ = nx;
    y_ = ny;
  }

  const double gx = x_ - kGoalX, gy = y_ - kGoalY;
  const bool reached_goal = gx * gx + gy * gy <= kGoalRadius * kGoalRadius;

  int collected = -1;
  if (!reached_goal) {
    // At most one object per step; nearest wins if the stochastic step
    // lands within reach of two.
    double best = kObjectRadius * kObjectRadius;
    for (int j = 0; j < kNumObjects; ++j) {
      if (collected_[j]) continue;
      const double dx = x_ - objects_[j].x, dy = y_ - objects_[j].y;
      const double dist2 = dx * dx + dy * dy;
      if (dist2 <= best) {
        best = dist2;
        collected = j;
      }
    }
    if (collected >= 0) collected_[collected] = true;
  }

  ++episode_steps_;
  tr.phi = feature_for(collected, reached_goal);
  tr.reward = task_.evaluate(tr.phi);
  tr.terminal = reached_goal;
  tr.s_next = observe();
  episode_done_ =
      reached_goal || (episode_cap_ && episode_steps_ >= *episode_cap_);
  return tr;
}

}  // namespace xisf::envs
