#include "ltpair/gekeler.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ltpair;
using namespace ltpair::gekeler;

TEST_SUITE("gekeler") {
  TEST_CASE("delta exponent") {
    CHECK(delta_exponent(1, 3, 11) == 0);
    CHECK(delta_exponent(3, 7, 3) == 0);
    CHECK(delta_exponent(0, 5, 2) == 0);
    // 1 - 4*13 = -51 = -3*17; 0 - 4*7 = -28 = 4 * -7 and -7 = 1 mod 4
    CHECK(delta_exponent(0, 7, 2) == 1);
    CHECK_THROWS_AS(delta_exponent(4, 4, 3), InvalidArgument);
  }

  TEST_CASE("densities") {
    CHECK(f_ell(0, 7, 3) == Rational(3, 4));
    CHECK(f_level_k(1, 3, 2, 1) == Rational(2, 3));
    CHECK(f_level_k(0, 7, 3, 1) == Rational(3, 4));
    CHECK_THROWS_AS(f_level_k(1, 3, 3, 1), InvalidArgument);
    CHECK(std::fabs(static_cast<double>(f_ell_fast(5, 101, 7)) - static_cast<double>(f_ell(5, 101, 7))) < 1e-15);
  }

  TEST_CASE("archimedean density") {
    CHECK(f_infinity(7, 7) == 0);
    CHECK(std::fabs(static_cast<double>(f_infinity(1, 5)) - std::sqrt(19.0 / 20) / (std::numbers::pi * std::sqrt(5.0))) <
          1e-15);
  }

  TEST_CASE("product formula") {
    auto a = product_check(0, 5, 100'000);
    CHECK(a.lhs == 1);
    CHECK(a.rel_error < 0.01);
    auto b = product_check(1, 5, 100'000);
    CHECK(b.lhs == Rational(1, 2));
    CHECK(b.rel_error < 0.01);
    CHECK_THROWS_AS(product_check(5, 5, 100), InvalidArgument);
    CHECK_THROWS_AS(product_check(0, 3, 100), InvalidArgument);
  }
}
