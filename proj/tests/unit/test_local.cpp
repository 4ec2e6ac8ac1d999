#include "ltpair/local.hpp"

#include <doctest.h>

using namespace ltpair;
using namespace ltpair::local;

TEST_SUITE("local") {
  TEST_CASE("direct sums") {
    CHECK(s_direct(0, 0, PrimePower(3, 1)) == 180);
    CHECK(s_direct(1, 1, PrimePower(3, 1)) == 117);
    CHECK(s_direct(0, 1, PrimePower(3, 1)) == 126);
    CHECK(s_direct(2, 2, PrimePower(2, 3)) == 17408);
  }

  TEST_CASE("direct sums are worker independent") {
    DirectOptions one, four;
    four.workers = 4;
    for (auto [t1, t2] : {std::pair{0, 0}, std::pair{1, 2}, std::pair{3, 7}})
      CHECK(s_direct(t1, t2, PrimePower(5, 4), one) == s_direct(t1, t2, PrimePower(5, 4), four));
  }

  TEST_CASE("unit cap") {
    DirectOptions small;
    small.unit_cap = 100;
    CHECK_THROWS_AS(s_direct(1, 1, PrimePower(3, 6), small), BudgetExceeded);
  }

  TEST_CASE("normalized sums and the sequence") {
    CHECK(s_normalized(2, 2, PrimePower(2, 3)) == 17);
    auto seq = local_sequence(0, 0, 3, 3);
    REQUIRE(seq.entries.size() == 3);
    for (auto& e : seq.entries) CHECK(e.normalized == 180);
  }

  TEST_CASE("same-trace closed forms") {
    CHECK(s_closed_same(1, 2, 5) == 4);
    CHECK(s_closed_same(0, 3, 2) == 180);
    CHECK(s_closed_same(2, 2, 3) == 17);
    CHECK(s_closed_same(1, 3, 1) == 117);
    CHECK_THROWS_AS(s_closed_same(2, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(s_closed_same(1, 3, 0), InvalidArgument);
  }

  TEST_CASE("distinct-trace closed forms") {
    auto a = s_closed_distinct(0, 1, 3, 1);
    REQUIRE(a);
    CHECK(a->value == 126);
    CHECK(a->provenance == Provenance::ClosedFormProposition);
    auto b = s_closed_distinct(1, 2, 5, 1);
    REQUIRE(b);
    CHECK(b->value == 2200);
    CHECK(b->provenance == Provenance::ClosedFormConjecture);
    CHECK_THROWS_AS(s_closed_distinct(3, -3, 5, 1), InvalidArgument);
    // 2-adic rule needs k >= 3 when 4 | both traces.
    CHECK_FALSE(s_closed_distinct(4, 8, 2, 2));
  }

  TEST_CASE("printed readings are selectable") {
    Readings lemma;
    lemma.odd_single = OddSingleDivisorReading::LemmaPrinted;
    CHECK(closed_distinct_rule(0, 1, 3, lemma)->value == 144);
    CHECK(closed_distinct_rule(0, 1, 3)->value == 126);
    Readings r16;
    r16.two_four = TwoAdicFourReading::LemmaPrinted;
    // 4 = 12 mod 8 but not mod 16
    CHECK(closed_distinct_rule(4, 12, 2)->value == Rational(35, 2));
    CHECK(closed_distinct_rule(4, 12, 2, r16)->value == Rational(33, 2));
    CHECK(s_normalized(4, 12, PrimePower(2, 4)) == Rational(35, 2));
  }

  TEST_CASE("limits") {
    auto a = local_limit(0, 0, 3);
    CHECK(a.limit == 180);
    CHECK(a.c_ell == Rational(45, 32));
    CHECK(a.provenance == Provenance::ClosedFormTheorem);
    CHECK(local_limit(1, 1, 3).limit == Rational(477, 4));
    CHECK(local_limit(-1, 1, 3) == local_limit(1, 1, 3));
    CHECK(local_limit(1, 3, 2).limit == 4);
    LimitOptions proven_only;
    proven_only.allow_conjectural = false;
    auto d = local_limit(1, 2, 5, proven_only);
    CHECK(d.provenance == Provenance::DirectWithStabilityCheck);
    CHECK(d.limit == 2200);
  }

  TEST_CASE("delta group and volumes") {
    CHECK(delta_group_size(PrimePower(2, 1)) == 36);
    CHECK(delta_group_size(PrimePower(3, 1)) == 1152);
    CHECK(volume(1, 1, 2) == Rational(1, 8));
    CHECK(volume(4, 4, 2) == Rational(35, 64));
    CHECK(volume(2, 2, 2) == Rational(103, 192));
    CHECK(euler_normalizer(3) == 128);
  }
}
