#include "ltpair/model_sim.hpp"

#include <doctest.h>

#include <cmath>

using namespace ltpair;
using namespace ltpair::model_sim;

TEST_SUITE("modelsim") {
  TEST_CASE("class densities") {
    CHECK(class_density(2, 1, 1) == Rational(1, 9));
    CHECK(class_density(2, 3, -1) == Rational(1, 9));
    Rational s = 0;
    for (auto& q : class_density_table(6)) s += q;
    CHECK(s == 1);
    CHECK(class_density(12, 5, 7) == class_density(4, 5, 7) * class_density(3, 5, 7));
    CHECK_THROWS_AS(class_density(1, 0, 0), InvalidArgument);
  }

  TEST_CASE("config validation") {
    ModelConfig c;
    c.m = 1;
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    c.m = 2;
    c.n_max = 4;
    CHECK_THROWS_AS(validate(c), InvalidArgument);
  }

  TEST_CASE("runs are reproducible at any worker count") {
    ModelConfig a;
    a.n_max = 5000;
    a.seed = 42;
    ModelConfig b = a;
    b.workers = 3;
    auto r1 = sample_run(a), r2 = sample_run(b);
    REQUIRE(r1.samples.size() == r2.samples.size());
    for (std::size_t i = 0; i < r1.samples.size(); ++i) CHECK(r1.samples[i].u1 == r2.samples[i].u1);
    CHECK(r1.class_counts == r2.class_counts);
    ModelConfig c = a;
    c.seed = 43;
    auto r3 = sample_run(c);
    bool differ = false;
    for (std::size_t i = 0; i < r1.samples.size(); ++i) differ = differ || r1.samples[i].u1 != r3.samples[i].u1;
    CHECK(differ);
  }

  TEST_CASE("samples respect their class and the Hasse interval") {
    ModelConfig a;
    a.m = 3;
    a.n_max = 3000;
    auto r = sample_run(a);
    for (auto& s : r.samples) CHECK(s.u1 * s.u1 < 4 * static_cast<std::int64_t>(s.p));
  }

  TEST_CASE("growth check fields") {
    ModelConfig a;
    a.n_max = 10'000;
    auto g = growth_check(sample_run(a), a);
    CHECK(g.predicted > 0);
    CHECK(g.expected > 0);
    CHECK(std::fabs(g.expected / g.predicted - 1) < 0.2);
  }

  TEST_CASE("semicircle") {
    CHECK(semicircle_mass(-1, 1) == doctest::Approx(1.0));
    CHECK(semicircle_mass(0, 1) == doctest::Approx(0.5));
    CHECK(splitmix64(0) != splitmix64(1));
  }
}
