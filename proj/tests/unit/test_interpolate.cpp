#include "ltpair/interpolate.hpp"

#include <doctest.h>

using namespace ltpair;
using namespace ltpair::local;

TEST_SUITE("interpolate") {
  TEST_CASE("recovers a polynomial") {
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x = 1; x <= 8; ++x) pts.emplace_back(Rational(x), Rational(x * x * x - 2 * x + 5));
    auto f = interpolate_rational(pts, 3);
    CHECK(f.numerator == std::vector<Rational>{5, -2, 0, 1});
    CHECK(f.denominator == std::vector<Rational>{1});
  }

  TEST_CASE("recovers a proper rational function") {
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x = 2; x <= 9; ++x) pts.emplace_back(Rational(x), Rational(x * x + 1, x + 1));
    auto f = interpolate_rational(pts, 3);
    CHECK(f.denominator == std::vector<Rational>{1, 1});
    CHECK(f(Rational(20)) == Rational(401, 21));
    CHECK(f.to_string() == "(l^2 + 1)/(l + 1)");
  }

  TEST_CASE("preconditions") {
    std::vector<std::pair<Rational, Rational>> pts{{1, 1}, {2, 2}, {3, 3}};
    CHECK_THROWS_AS(interpolate_rational(pts, 1), InvalidArgument);
    pts.push_back({3, 4});
    CHECK_THROWS_AS(interpolate_rational(pts, 1), InvalidArgument);
  }

  TEST_CASE("inconsistent data") {
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x = 1; x <= 4; ++x) pts.emplace_back(Rational(x), Rational(x % 2 ? 0 : 7));
    CHECK_THROWS_AS(interpolate_rational(pts, 1), Error);
  }
}
