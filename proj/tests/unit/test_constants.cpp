#include "ltpair/constants.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ltpair;
using namespace ltpair::constants;

TEST_SUITE("constants") {
  TEST_CASE("c_00 approaches 35/96") {
    auto e = pair_constant(0, 0, 100'000);
    CHECK(std::fabs(static_cast<double>(e.value) - 35.0 / 96) < 1e-3);
    CHECK(e.truncation_prime == 99991);
    CHECK(e.tail_empirical <= e.tail_conservative);
    CHECK(known_value(0, 0) == Rational(35, 96));
  }

  TEST_CASE("universal product") {
    CHECK(std::fabs(static_cast<double>(universal_product(10'000).value) - 0.08789878383) < 1e-6);
    ProductOptions o;
    o.trace = true;
    auto e = universal_product(2, o);
    REQUIRE(e.factor_trace.size() == 1);
    CHECK(e.factor_trace[0].factor == Rational(1, 9));
  }

  TEST_CASE("q_t") {
    CHECK(q_t(1) == Rational(1, 2));
    CHECK(q_t(-7) == q_t(7));
    CHECK_THROWS_AS(q_t(0), InvalidArgument);
  }

  TEST_CASE("same-trace two-adic factor") {
    CHECK(same_trace_two_factor(3) == Rational(4, 9));
    CHECK(same_trace_two_factor(8) == Rational(35, 18));
    CHECK(same_trace_two_factor(6) == Rational(103, 54));
  }

  TEST_CASE("same-trace route agrees with the pair route") {
    for (std::int64_t t : {0, 1, 2, 4, 6}) {
      auto a = same_trace_constant(t, 5000);
      auto b = pair_constant(t, t, 5000);
      CHECK(std::fabs(static_cast<double>(a.value - b.value)) < 1e-20);
    }
  }

  TEST_CASE("worker count does not change the value") {
    ProductOptions one, many;
    many.workers = 4;
    CHECK(pair_constant(1, 2, 3000, one).value == pair_constant(1, 2, 3000, many).value);
  }

  TEST_CASE("single-curve constant at t = 0") {
    CHECK(std::fabs(static_cast<double>(single_curve_constant(0, 100'000).value) - std::numbers::pi / 3) < 1e-4);
  }

  TEST_CASE("tail bounds shrink") {
    auto [c1, e1] = tail_bounds(100, 1.0, false);
    auto [c2, e2] = tail_bounds(10'000, 1.0, false);
    CHECK(c2 < c1);
    CHECK(e2 < e1);
    CHECK(tail_bounds(100, 1.0, true).second > e1);
  }

  TEST_CASE("rejects lmax < 2") { CHECK_THROWS_AS(pair_constant(0, 0, 1), InvalidArgument); }
}
