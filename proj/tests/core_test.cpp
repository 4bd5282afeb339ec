#include <doctest.h>

#include "xisf/core.hpp"
#include "xisf/rng.hpp"

using namespace xisf;

TEST_CASE("argmax_tiebreak basics") {
  CHECK(argmax_tiebreak({1.0, 3.0, 2.0}) == 1);
  CHECK(argmax_tiebreak({2.0, 2.0}) == 0);
  CHECK(argmax_tiebreak({-1.0}) == 0);
  CHECK_THROWS(argmax_tiebreak({}));
  CHECK_THROWS(argmax_tiebreak({1.0, std::nan("")}));
  CHECK_THROWS(
      argmax_tiebreak({1.0, std::numeric_limits<double>::infinity()}));
}

TEST_CASE("TaskSpec evaluation across variants") {
  SUBCASE("linear") {
    TaskSpec t{LinearWeights{{0.5, -1.0, 2.0}}};
    CHECK(t.evaluate(FeatureVec{{1.0, 1.0, 0.0}}) == doctest::Approx(-0.5));
    CHECK(t.evaluate_dim(2, 0.5) == doctest::Approx(1.0));
  }
  SUBCASE("tabular") {
    auto atoms = std::make_shared<DiscreteFeatureSet>();
    atoms->atoms.push_back(FeatureVec{{0.0, 0.0}});
    atoms->atoms.push_back(FeatureVec{{1.0, 0.0}});
    TaskSpec t{TabularRewards{{0.25, -0.75}, atoms}};
    CHECK(t.evaluate(FeatureVec{{1.0, 0.0}}) == doctest::Approx(-0.75));
    CHECK_THROWS(t.evaluate(FeatureVec{{0.5, 0.5}}));
  }
  SUBCASE("per-dim gaussian mix takes the max component") {
    PerDimGaussianMix mix;
    mix.dims = {{{0.2, 0.01}, {0.5, 0.01}}};
    TaskSpec t{mix};
    // Exactly at the second component's mean: that term is 1/n = 1.
    CHECK(t.evaluate_dim(0, 0.5) == doctest::Approx(1.0));
    CHECK(t.evaluate(FeatureVec{{0.5}}) == doctest::Approx(1.0));
  }
}

TEST_CASE("Hyperparams validation") {
  Hyperparams hp;
  CHECK_NOTHROW(hp.validate());
  hp.gamma = 1.0;
  CHECK_THROWS(hp.validate());
  hp.gamma = 0.95;
  hp.alpha = 0.0;
  CHECK_THROWS(hp.validate());
}

TEST_CASE("RandomStream determinism and independence") {
  RandomStream a(42, "env", 3);
  RandomStream b(42, "env", 3);
  for (int i = 0; i < 100; ++i)
    CHECK(a.uniform(0.0, 1.0) == b.uniform(0.0, 1.0));

  // Different names give different sequences.
  RandomStream c(42, "env", 3);
  RandomStream d(42, "tasks", 3);
  int same = 0;
  for (int i = 0; i < 100; ++i)
    same += c.uniform_int(1000) == d.uniform_int(1000) ? 1 : 0;
  CHECK(same < 10);

  // Deriving consumes the parent deterministically.
  RandomStream parent(7, "x");
  (void)parent.derive("y");
  RandomStream parent2(7, "x");
  (void)parent2.derive("y");
  CHECK(parent.uniform(0.0, 1.0) == parent2.uniform(0.0, 1.0));
}

TEST_CASE("DiscreteFeatureSet exact-equality lookup") {
  DiscreteFeatureSet set;
  set.atoms.push_back(FeatureVec{{0.0, 1.0}});
  set.atoms.push_back(FeatureVec{{1.0, 0.0}});
  CHECK(set.index_of(FeatureVec{{1.0, 0.0}}) == 1);
  CHECK(set.index_of(FeatureVec{{1.0, 1.0}}) == -1);
  // Exact equality: a perturbed vector is a different atom.
  CHECK(set.index_of(FeatureVec{{1.0 - 1e-12, 0.0}}) == -1);
}
