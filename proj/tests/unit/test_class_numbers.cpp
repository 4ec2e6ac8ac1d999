#include "ltpair/arith.hpp"
#include "ltpair/class_numbers.hpp"

#include <doctest.h>

#include <fstream>

using namespace ltpair;
using namespace ltpair::classnum;

TEST_SUITE("classnum") {
  TEST_CASE("split") {
    CHECK(split_discriminant(-12) == DiscriminantSplit{-12, -3, 2});
    CHECK(split_discriminant(-4) == DiscriminantSplit{-4, -4, 1});
    CHECK(split_discriminant(-48) == DiscriminantSplit{-48, -3, 4});
    CHECK(split_discriminant(-300) == DiscriminantSplit{-300, -3, 10});
    CHECK_THROWS_AS(split_discriminant(-5), InvalidArgument);
    CHECK_THROWS_AS(split_discriminant(4), InvalidArgument);
  }

  TEST_CASE("class numbers") {
    CHECK(class_number_h(-3) == 1);
    CHECK(class_number_h(-12) == 1);
    CHECK(class_number_h(-23) == 3);
    CHECK(class_number_h(-163) == 1);
    CHECK(class_number_h(-71) == 7);
    CHECK(class_number_h(-3299) == 27);
  }

  TEST_CASE("units and Hurwitz numbers") {
    CHECK(unit_count_w(-3) == 6);
    CHECK(unit_count_w(-4) == 4);
    CHECK(unit_count_w(-12) == 2);
    auto a = hurwitz_kronecker(-12);
    CHECK(a.hurwitz_kronecker == 2);
    CHECK(a.weighted == Rational(2, 3));
    CHECK(hurwitz_kronecker(-4).weighted == Rational(1, 4));
    CHECK(hurwitz_kronecker(-3).weighted == Rational(1, 6));
    CHECK(hurwitz_classical(0) == Rational(-1, 12));
    CHECK(hurwitz_classical(3) == Rational(1, 3));
    CHECK(hurwitz_classical(4) == Rational(1, 2));
    CHECK(hurwitz_classical(1) == 0);
  }

  TEST_CASE("Kronecker-Hurwitz relation, small n") {
    for (std::int64_t n = 1; n <= 60; ++n) {
      Rational lhs = 0;
      for (std::int64_t t = -2 * n; t <= 2 * n; ++t)
        if (t * t <= 4 * n) lhs += hurwitz_classical(4 * n - t * t);
      std::uint64_t rhs = 0;
      for (auto d : arith::divisors(n)) rhs += std::max<std::uint64_t>(d, n / d);
      CAPTURE(n);
      CHECK(lhs == Rational(rhs));
    }
  }

  TEST_CASE("cache round trip tolerates junk") {
    auto path = std::filesystem::temp_directory_path() / "ltpair-unit-cache.csv";
    ClassNumberCache a;
    for (std::int64_t D : {-3, -23, -71}) class_number_h(D, &a);
    CHECK(a.misses() == 3);
    class_number_h(-23, &a);
    CHECK(a.hits() == 1);
    a.save(path);
    {
      std::ofstream f(path, std::ios::app);
      f << "nonsense\n-7,x\n,\n";
    }
    ClassNumberCache b;
    CHECK(b.load(path) == 3);
    CHECK(b.find(-71) == std::optional<std::uint64_t>(7));
    CHECK(b.keys() == std::vector<std::int64_t>{-71, -23, -3});
    std::filesystem::remove(path);
    ClassNumberCache c;
    CHECK(c.load(path) == 0);
  }
}
