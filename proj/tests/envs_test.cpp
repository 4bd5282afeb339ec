#include <doctest.h>

#include <cmath>

#include "xisf/envs/tabular.hpp"
#include "xisf/envs/tasks.hpp"
#include "xisf/learnfeat/fit_weights.hpp"

using namespace xisf;
using namespace xisf::envs;

TEST_CASE("torus distance") {
  CHECK(torus_distance(0.1, 0.5, 0.9, 0.5) == doctest::Approx(0.2));
  CHECK(torus_distance(0.3, 0.7, 0.3, 0.7) == 0.0);
  // Frozen value from hand-checked wrap arithmetic.
  CHECK(torus_distance(0.0, 0.0, 0.5, 0.5) ==
        doctest::Approx(0.70710678118654757).epsilon(1e-12));
}

TEST_CASE("torus distance is a metric on random triples") {
  RandomStream rng(11, "torus");
  for (int i = 0; i < 10000; ++i) {
    const double ax = rng.uniform(0, 1), ay = rng.uniform(0, 1);
    const double bx = rng.uniform(0, 1), by = rng.uniform(0, 1);
    const double cx = rng.uniform(0, 1), cy = rng.uniform(0, 1);
    const double ab = torus_distance(ax, ay, bx, by);
    const double ba = torus_distance(bx, by, ax, ay);
    CHECK(ab == ba);
    CHECK(torus_distance(ax, ay, ax, ay) == 0.0);
    CHECK(ab <= torus_distance(ax, ay, cx, cy) +
                    torus_distance(cx, cy, bx, by) + 1e-12);
  }
}

TEST_CASE("position RBF encoding") {
  Vec v;
  SUBCASE("center activation is exactly 1") {
    rbf_encode_position(1.0 / 9.0, 0.0, kDefaultPositionSigma,
                        Metric::kEuclidean, v);
    CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("frozen anchor values, sigma = 0.0123") {
    // Independently evaluated from the formula.
    rbf_encode_position(0.5, 0.5, 0.0123, Metric::kEuclidean, v);
    CHECK(v[0] == doctest::Approx(2.216934021274026e-18).epsilon(1e-9));
    CHECK(v[44] == doctest::Approx(0.60540545587362082).epsilon(1e-12));
    CHECK(v[45] == doctest::Approx(0.60540545587362082).epsilon(1e-12));
    CHECK(v[99] == doctest::Approx(2.216934021274026e-18).epsilon(1e-9));
    double sum = 0.0;
    for (double x : v) sum += x;
    CHECK(sum == doctest::Approx(3.1292971443135218).epsilon(1e-12));
  }
  SUBCASE("full vector matches an independent evaluation") {
    rbf_encode_position(0.37, 0.81, 0.0123, Metric::kEuclidean, v);
    for (int gy = 0; gy < 10; ++gy)
      for (int gx = 0; gx < 10; ++gx) {
        const double dx = 0.37 - gx / 9.0, dy = 0.81 - gy / 9.0;
        CHECK(v[gy * 10 + gx] ==
              doctest::Approx(std::exp(-(dx * dx + dy * dy) / 0.0123))
                  .epsilon(1e-13));
      }
  }
  SUBCASE("torus metric wraps coordinates") {
    rbf_encode_position(0.05, 0.5, 0.0123, Metric::kTorus, v);
    // Frozen anchors: centers (0, 5/9) and (1, 5/9) are equally close
    // under wrap (distances 0.05 and 0.05 in x).
    CHECK(v[40] == doctest::Approx(0.63496813164756993).epsilon(1e-12));
    CHECK(v[49] == doctest::Approx(0.63496813164756982).epsilon(1e-12));
  }
}

TEST_CASE("orientation RBF encoding") {
  Vec v;
  rbf_encode_orientation(0.0, v);
  CHECK(v.size() == 20);
  // Frozen anchors (centers at -pi + j*pi/10, sigma = pi/5).
  CHECK(v[10] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v[0] == doctest::Approx(1.5070172753900654e-07).epsilon(1e-9));
  CHECK(v[9] == doctest::Approx(0.85463599915323341).epsilon(1e-12));
  CHECK(v[19] == doctest::Approx(2.9804083189880705e-06).epsilon(1e-9));

  // pi and -pi are the same point on the circle.
  rbf_encode_orientation(M_PI, v);
  CHECK(v[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("object env reset and goal") {
  ObjectCollectionEnv env;
  RandomStream task_rng(1, "t");
  env.set_task(sample_linear_object_task(task_rng, ObjectVariant::kModified));
  RandomStream rng(5, "env");
  StateVec s = env.reset(rng);
  CHECK(s.dim() == 113);
  CHECK(env.agent_x() == doctest::Approx(0.05));
  CHECK(env.agent_y() == doctest::Approx(0.05));
  // Memory bits all zero, constant term 1.
  for (int j = 100; j < 112; ++j) CHECK(s.values[j] == 0.0);
  CHECK(s.values[112] == 1.0);

  // Goal reach: place the agent next to the goal and step into it.
  env.debug_set_position(0.86, 0.80);
  Transition tr = env.step({0}, rng);  // up
  CHECK(tr.terminal);
  CHECK(tr.phi.values == Vec{0, 0, 0, 0, 1});
  CHECK(env.episode_finished());
}

TEST_CASE("object env wall rejection") {
  ObjectCollectionEnv env;
  env.set_task(TaskSpec{LinearWeights{{0, 0, 0, 0, 1}}});
  RandomStream rng(6, "env");
  env.reset(rng);
  // x = 0.45 faces the vertical wall band [0.48, 0.52]; y = 0.4 is not a
  // door gap, so a right step of ~0.05 lands in the wall and is rejected.
  env.debug_set_position(0.45, 0.40);
  for (int i = 0; i < 50; ++i) {
    Transition tr = env.step({3}, rng);  // right
    CHECK(env.agent_x() == doctest::Approx(0.45));
    CHECK(env.agent_y() == doctest::Approx(0.40));
    CHECK(tr.phi.values == Vec{0, 0, 0, 0, 0});
  }
  // Same spot but at a door gap passes through.
  env.debug_set_position(0.45, 0.25);
  int moved = 0;
  for (int i = 0; i < 10 && env.agent_x() <= 0.45; ++i) {
    env.step({3}, rng);
    ++moved;
  }
  CHECK(env.agent_x() > 0.45);
}

TEST_CASE("object env out-of-bounds rejection") {
  ObjectCollectionEnv env;
  env.set_task(TaskSpec{LinearWeights{{0, 0, 0, 0, 1}}});
  RandomStream rng(7, "env");
  env.reset(rng);
  for (int i = 0; i < 30; ++i) env.step({1}, rng);  // down from (.05,.05)
  CHECK(env.agent_y() >= 0.0);
}

TEST_CASE("object env step-length statistics") {
  // Mean displacement of a right step ~ N(0.05, 0.005): the empirical
  // mean over 1e5 samples stays within 3 standard errors.
  ObjectCollectionEnv env;
  env.set_task(TaskSpec{LinearWeights{{0, 0, 0, 0, 1}}});
  RandomStream rng(8, "env");
  env.reset(rng);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    env.debug_set_position(0.20, 0.20);
    env.step({3}, rng);
    sum += env.agent_x() - 0.20;
  }
  const double mean = sum / n;
  const double se = 0.005 / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(mean - 0.05) < 3 * se);
}

TEST_CASE("object env collection features and memory") {
  ObjectCollectionEnv env;
  env.set_task(TaskSpec{LinearWeights{{0.1, 0.2, 0.3, 0.4, 1.0}}});
  RandomStream rng(9, "env");
  env.reset(rng);
  // First default object is an orange box at (0.15, 0.30).
  env.debug_set_position(0.15, 0.26);
  Transition tr = env.step({0}, rng);  // up, into the object circle
  CHECK(tr.phi.values == Vec{1, 0, 1, 0, 0});
  CHECK(tr.reward == doctest::Approx(0.1 + 0.3));
  CHECK(env.collected_count() == 1);
  CHECK(tr.s_next.values[100] == 1.0);  // memory bit of object 0

  // The same object cannot be collected twice.
  env.debug_set_position(0.15, 0.26);
  Transition tr2 = env.step({0}, rng);
  CHECK(tr2.phi.values == Vec{0, 0, 0, 0, 0});
}

TEST_CASE("object env atom membership and memory monotonicity") {
  ObjectCollectionEnv env;
  auto atoms = env.feature_atoms();
  RandomStream task_rng(2, "t");
  env.set_task(sample_general_object_task(
      task_rng, std::make_shared<DiscreteFeatureSet>(*atoms)));
  RandomStream rng(10, "env");
  RandomStream actions(11, "a");
  StateVec s = env.reset(rng);
  int prev_mem = 0;
  for (int t = 0; t < 20000; ++t) {
    Transition tr = env.step({actions.uniform_int(4)}, rng);
    CHECK(atoms->index_of(tr.phi) >= 0);  // every phi is one of the 6 atoms
    const int mem = env.collected_count();
    if (!tr.terminal) CHECK(mem >= prev_mem);
    // Reward always equals the task evaluated on phi.
    CHECK(tr.reward == env.task().evaluate(tr.phi));
    prev_mem = mem;
    if (env.episode_finished()) {
      env.reset(rng);
      prev_mem = 0;
    }
  }
}

TEST_CASE("object env original variant") {
  ObjectCollectionEnv env(ObjectVariant::kOriginal);
  CHECK(env.feature_dim() == 4);
  CHECK(env.feature_atoms()->size() == 5);
  RandomStream trng(3, "t");
  const TaskSpec task = sample_linear_object_task(trng, ObjectVariant::kOriginal);
  CHECK(task.linear_weights().size() == 4);
  CHECK(task.linear_weights()[3] == 1.0);  // goal weight
}

TEST_CASE("object env layout file round trip") {
  const auto objs = ObjectCollectionEnv::load_layout(
      std::string(XISF_SOURCE_DIR) + "/data/object_layout.txt");
  const auto defaults =
      ObjectCollectionEnv::default_layout(ObjectVariant::kModified);
  REQUIRE(objs.size() == defaults.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    CHECK(objs[i].x == defaults[i].x);
    CHECK(objs[i].y == defaults[i].y);
    CHECK(objs[i].color == defaults[i].color);
    CHECK(objs[i].shape == defaults[i].shape);
  }
}

TEST_CASE("racer env dynamics") {
  RacerEnv env;
  env.set_task(TaskSpec{PerDimGaussianMix{{{{0.2, 0.01}},
                                           {{0.3, 0.01}},
                                           {{0.4, 0.01}}}}});
  RandomStream rng(12, "env");
  SUBCASE("reset is deterministic under the same seed") {
    RandomStream r1(99, "env"), r2(99, "env");
    RacerEnv e1, e2;
    e1.set_task(env.task());
    e2.set_task(env.task());
    const StateVec s1 = e1.reset(r1), s2 = e2.reset(r2);
    CHECK(s1.values == s2.values);
  }
  SUBCASE("episode ends after exactly 200 steps") {
    env.reset(rng);
    for (int t = 0; t < 199; ++t) {
      Transition tr = env.step({1}, rng);
      CHECK(!tr.terminal);
    }
    Transition last = env.step({1}, rng);
    CHECK(last.terminal);
    CHECK(env.episode_finished());
  }
  SUBCASE("torus wrap on the right edge") {
    env.reset(rng);
    env.debug_set_pose(0.99, 0.5, 0.0);  // facing +x
    env.step({1}, rng);
    // 0.99 + 0.075 = 1.065 -> wraps to ~0.065 (plus small noise).
    CHECK(env.agent_x() < 0.1);
    CHECK(env.agent_x() >= 0.0);
  }
  SUBCASE("features are normalized torus distances") {
    env.reset(rng);
    for (int t = 0; t < 200; ++t) {
      Transition tr = env.step({t % 3}, rng);
      for (int k = 0; k < 3; ++k) {
        CHECK(tr.phi.values[k] >= 0.0);
        CHECK(tr.phi.values[k] <= 1.0);
      }
      const FeatureVec expect = env.features_at(env.agent_x(), env.agent_y());
      CHECK(tr.phi.values == expect.values);
    }
  }
  SUBCASE("state is 120-dimensional") {
    CHECK(env.reset(rng).dim() == 120);
  }
}

TEST_CASE("racer reward function") {
  PerDimGaussianMix mix;
  mix.dims = {{{0.2, 0.01}}, {{0.5, 0.004}}, {{0.7, 0.002}}};
  TaskSpec task{mix};
  // All dimensions at their preferred distances: reward 1.
  CHECK(task.evaluate(FeatureVec{{0.2, 0.5, 0.7}}) == doctest::Approx(1.0));
  // Far from every component: ~0.
  CHECK(task.evaluate(FeatureVec{{0.95, 0.0, 0.05}}) ==
        doctest::Approx(0.0).epsilon(1e-6));
  // Two components in one dimension: the max picks the exact match.
  PerDimGaussianMix two;
  two.dims = {{{0.2, 0.01}, {0.5, 0.01}}};
  CHECK(TaskSpec{two}.evaluate_dim(0, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("task samplers") {
  RandomStream rng(13, "tasks");
  SUBCASE("linear object task pins the goal weight") {
    for (int i = 0; i < 20; ++i) {
      const TaskSpec t = sample_linear_object_task(rng, ObjectVariant::kModified);
      CHECK(t.linear_weights().size() == 5);
      CHECK(t.linear_weights()[4] == 1.0);
      for (int k = 0; k < 4; ++k) {
        CHECK(t.linear_weights()[k] >= -1.0);
        CHECK(t.linear_weights()[k] <= 1.0);
      }
    }
  }
  SUBCASE("general object task fixes no-event and goal rewards") {
    ObjectCollectionEnv env;
    auto atoms = std::make_shared<DiscreteFeatureSet>(*env.feature_atoms());
    for (int i = 0; i < 20; ++i) {
      const TaskSpec t = sample_general_object_task(rng, atoms);
      CHECK(t.evaluate(atoms->atoms[0]) == 0.0);
      CHECK(t.evaluate(atoms->atoms[5]) == 1.0);
    }
  }
  SUBCASE("racer task parameter ranges") {
    for (int i = 0; i < 20; ++i) {
      const TaskSpec t = sample_racer_task(rng);
      const auto& mix = std::get<PerDimGaussianMix>(t.variant);
      REQUIRE(mix.dims.size() == 3);
      for (const auto& comps : mix.dims) {
        CHECK(comps.size() >= 1);
        CHECK(comps.size() <= 2);
        for (const auto& c : comps) {
          CHECK(c.mu >= 0.0);
          CHECK(c.mu <= 0.7);
          CHECK(c.sigma >= 0.001);
          CHECK(c.sigma <= 0.01);
        }
      }
    }
  }
  SUBCASE("same stream yields identical tasks") {
    RandomStream r1(77, "tasks"), r2(77, "tasks");
    ObjectCollectionEnv env;
    auto atoms = std::make_shared<DiscreteFeatureSet>(*env.feature_atoms());
    for (int i = 0; i < 5; ++i) {
      const TaskSpec a = sample_general_object_task(r1, atoms);
      const TaskSpec b = sample_general_object_task(r2, atoms);
      CHECK(std::get<TabularRewards>(a.variant).per_atom ==
            std::get<TabularRewards>(b.variant).per_atom);
    }
  }
}

TEST_CASE("nonlinearity-targeted task sampling") {
  ObjectCollectionEnv env;
  auto atoms = std::make_shared<DiscreteFeatureSet>(*env.feature_atoms());
  RandomStream rng(14, "tasks");

  SUBCASE("low bucket accepts, fitted error in range") {
    double mae = -1.0;
    const TaskSpec t =
        sample_task_at_nonlinearity(0.0, 0.25, rng, atoms, 2000, &mae);
    CHECK(mae >= 0.0);
    CHECK(mae < 0.25);
    (void)t;
  }
  SUBCASE("a linear task is only accepted by the lowest bucket") {
    // The best-fit MAE of an exactly representable reward is ~0.
    RandomStream trng(15, "t");
    const TaskSpec lin = sample_linear_object_task(trng, ObjectVariant::kModified);
    const auto fit = learnfeat::fit_weights_offline(lin, *atoms);
    CHECK(fit.mae <= 1e-3);
  }
  SUBCASE("high bucket verified against the independent closed form") {
    // On this atom set the optimal MAE equals |R2 - R3 - R4 + R5| / 6:
    // the goal and no-event atoms fit exactly, and the four object atoms
    // leave a single alternating-sum obstruction.
    double mae = -1.0;
    const TaskSpec t =
        sample_task_at_nonlinearity(1.5, 1.75, rng, atoms, 20000, &mae);
    const auto& r = std::get<TabularRewards>(t.variant).per_atom;
    const double closed_form =
        std::abs(r[1] - r[2] - r[3] + r[4]) / 6.0;
    CHECK(mae >= 1.5);
    CHECK(mae < 1.75);
    CHECK(mae == doctest::Approx(closed_form).epsilon(0.02));
  }
}

TEST_CASE("tabular env matches its model") {
  auto model = make_gridworld(4, 4, 0.9);
  TabularEnv env(model, 0);
  auto atoms = std::make_shared<DiscreteFeatureSet>(*env.feature_atoms());
  env.set_task(TaskSpec{TabularRewards{{0.0, 0.3, -0.2, 1.0}, atoms}});
  RandomStream rng(16, "env");
  StateVec s = env.reset(rng);
  CHECK(s.values[0] == 1.0);
  Transition tr = env.step({3}, rng);  // right: state 0 -> 1
  CHECK(tr.s_next.values[1] == 1.0);
  CHECK(tr.phi.values[0] == 1.0);  // quadrant atom 0 for cell (1,0)
  CHECK(tr.reward == doctest::Approx(0.0));
}
