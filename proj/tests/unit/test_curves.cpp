#include "ltpair/arith.hpp"
#include "ltpair/curves.hpp"

#include <doctest.h>

using namespace ltpair;
using namespace ltpair::curves;

TEST_SUITE("curves") {
  TEST_CASE("traces") {
    CHECK(trace_ap(Curve(1, 0), 5) == 2);
    CHECK(trace_ap(Curve(-1, 0), 5) == trace_by_point_count(Curve(-1, 0), 5));
    for (std::uint64_t p : arith::sieve_primes(300))
      if (p > 3 && Curve(3, -7).good_at(p)) CHECK(trace_ap(Curve(3, -7), p) == trace_by_point_count(Curve(3, -7), p));
  }

  TEST_CASE("bad input") {
    CHECK_THROWS_AS(Curve(0, 0), InvalidArgument);
    CHECK_THROWS_AS(Curve(-3, 2), InvalidArgument);
    CHECK_THROWS_AS(trace_ap(Curve(-1, 0), 3), InvalidArgument);
    CHECK_FALSE(Curve(1, 1).good_at(31));  // disc = -16 * 31
    CHECK_THROWS_AS(trace_ap(Curve(1, 1), 31), InvalidArgument);
  }

  TEST_CASE("pair counts") {
    Curve e(2, 3);
    CHECK(pair_count(e, e, 1, 2, 10'000).count == 0);
    CHECK(pair_count(e, e, 2, 2, 10'000).count == single_count(e, 2, 10'000));
    PairCountOptions o;
    o.list_primes = true;
    o.workers = 3;
    auto r = pair_count(Curve(-1, 0), Curve(0, 1), 2, 2, 10'000, o);
    CHECK(r.count == r.primes.size());
    for (auto p : r.primes) CHECK(trace_ap(Curve(-1, 0), p) == 2);
  }

  TEST_CASE("prediction carries a caveat") {
    PairCountOptions o;
    o.prediction = true;
    o.prediction_lmax = 1000;
    auto r = pair_count(Curve(1, 1), Curve(-2, 5), 0, 0, 1000, o);
    REQUIRE(r.prediction);
    CHECK(*r.prediction > 0);
    CHECK_FALSE(r.caveat.empty());
  }
}
