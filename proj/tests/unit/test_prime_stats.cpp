#include "ltpair/prime_stats.hpp"

#include <doctest.h>

#include <cmath>

using namespace ltpair;
using namespace ltpair::prime_stats;

TEST_SUITE("primestats") {
  TEST_CASE("f average") {
    auto r = average_f_product(0, 0, 3, 100'000);
    CHECK(r.reference == Rational(45, 32));
    CHECK(r.relative_deviation < 0.01);
    CHECK(r.prime_count == 9592);
    CHECK_THROWS_AS(average_f_product(0, 0, 3, 9), InvalidArgument);
  }

  TEST_CASE("primed range") {
    CHECK_FALSE(in_primed_range(0, 0, 3));
    CHECK(in_primed_range(0, 0, 5));
    CHECK_FALSE(in_primed_range(10, 0, 23));
    CHECK(in_primed_range(10, 0, 29));
  }

  TEST_CASE("class sum checkpoints") {
    auto s = class_sum(0, 0, 2000, {100, 1000});
    REQUIRE(s.checkpoints.size() == 3);
    CHECK(s.checkpoints.back().x == 2000);
    CHECK(s.checkpoints[0].partial_sum < s.checkpoints[1].partial_sum);
    // p = 5: H(-20) = 2/2 = 1, so the first term is 1/25.
    auto first = class_sum(0, 0, 5, {5});
    CHECK(std::fabs(static_cast<double>(first.checkpoints[0].partial_sum) - 0.04) < 1e-30);
    CHECK_THROWS_AS(class_sum(0, 0, 100, {50, 50}), InvalidArgument);
    CHECK(class_sum(20, 0, 50, {}).checkpoints.empty());
  }

  TEST_CASE("class sum is worker independent") {
    ClassSumOptions one, four;
    four.workers = 4;
    four.block = 64;
    one.block = 64;
    auto a = class_sum(1, 3, 20'000, {5000}, one);
    auto b = class_sum(1, 3, 20'000, {5000}, four);
    CHECK(a.checkpoints[1].partial_sum == b.checkpoints[1].partial_sum);
  }

  TEST_CASE("slope fit") {
    CheckpointSeries s{0, 0, {}, 0, 0, 0, 0};
    for (std::uint64_t x : {100, 1000, 10000}) {
      const double ll = std::log(std::log(static_cast<double>(x)));
      HighFloat v = make_float(30);
      v = 2 * ll - 1;
      s.checkpoints.push_back({x, v, ll});
    }
    auto f = slope_fit(s);
    CHECK(f.c_hat == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(-1.0));
    s.checkpoints.pop_back();
    CHECK_THROWS_AS(slope_fit(s), InvalidArgument);
  }
}
