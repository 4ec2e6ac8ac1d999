#include "ltpair/matcount.hpp"

#include <doctest.h>

using namespace ltpair;
using namespace ltpair::matcount;

TEST_SUITE("matcount") {
  TEST_CASE("closed-form examples") {
    CHECK(m_closed(1, 1, PrimePower(2, 1)) == 2);
    CHECK(m_closed(0, 1, PrimePower(3, 1)) == 6);
    CHECK(m_closed(1, 1, PrimePower(3, 1)) == 9);
    CHECK(m_closed(2, 1, PrimePower(2, 3)) == 80);
  }

  TEST_CASE("square-root counts") {
    CHECK(sqrt_count_N(2, 1) == 0);
    CHECK(sqrt_count_N(1, 1) == 1);
    CHECK(sqrt_count_N(-3, 3) == 1);
  }

  TEST_CASE("dks and brute examples") {
    CHECK(m_dks(1, 1, PrimePower(2, 2)) == 8);
    CHECK(m_dks(1, 2, PrimePower(3, 1)) == 6);
    CHECK(m_brute(0, 2, PrimePower(3, 1)) == 12);
  }

  TEST_CASE("brute force guards") {
    CHECK_THROWS_AS(m_brute(1, 3, PrimePower(3, 1)), InvalidArgument);
    CHECK_THROWS_AS(m_brute(1, 1, PrimePower(3, 9)), BudgetExceeded);
  }

  TEST_CASE("prime power validation") {
    CHECK_THROWS_AS(PrimePower(4, 1), InvalidArgument);
    CHECK_THROWS_AS(PrimePower(3, 0), InvalidArgument);
    CHECK_THROWS_AS(PrimePower(2, 64), InvalidArgument);
    CHECK(PrimePower(5, 3).modulus() == 125);
  }

  TEST_CASE("classify rejects non-units") { CHECK_THROWS_AS(classify(1, 6, PrimePower(3, 2)), InvalidArgument); }

  TEST_CASE("three methods agree on small moduli") {
    for (auto [ell, k] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 1}, std::pair{3, 2},
                          std::pair{5, 1}, std::pair{7, 1}}) {
      PrimePower pp(ell, k);
      const auto M = static_cast<std::int64_t>(pp.modulus());
      for (std::int64_t t = 0; t < M; ++t)
        for (std::int64_t u = 1; u < M; ++u) {
          if (u % ell == 0) continue;
          CAPTURE(M);
          CAPTURE(t);
          CAPTURE(u);
          const BigInt c = m_closed(t, u, pp);
          CHECK(c == m_dks(t, u, pp));
          CHECK(c == m_brute(t, u, pp));
          CHECK(c == m_closed_fast(t, u, pp));
        }
    }
  }

  TEST_CASE("record carries case data") {
    auto r = m_closed_record(2, 1, PrimePower(2, 3));
    CHECK(r.count == 80);
    CHECK(r.n == 5);
  }
}
