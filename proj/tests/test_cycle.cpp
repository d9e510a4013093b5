#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ducci/cycle.hpp"
#include "test_support.hpp"

using namespace ducci;
using test::for_each_tuple;

TEST_CASE("cycle_info worked values") {
  const CycleInfo basic45 = cycle_info(basic_tuple(4, 5));
  CHECK(basic45.len == 1);
  CHECK(basic45.per == 4);
  CHECK(basic45.steps_used == 5);

  const CycleInfo zero = cycle_info(ZmTuple::zero(5, 3));
  CHECK(zero.len == 0);
  CHECK(zero.per == 1);

  const CycleInfo basic24 = cycle_info(basic_tuple(4, 2));
  CHECK(basic24.len == 4);  // reaches the zero fixed point in 4 steps
  CHECK(basic24.per == 1);
}

TEST_CASE("lp_values worked values") {
  CHECK(lp_values(4, 5) == CycleInfo{1, 4, 0});
  CHECK(lp_values(6, 2) == CycleInfo{2, 6, 0});
  CHECK(lp_values(4, 4) == CycleInfo{6, 1, 0});
}

TEST_CASE("budget exhaustion is an explicit outcome") {
  Budget tiny;
  tiny.max_steps = 3;
  try {
    lp_values(4, 5, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.steps_used >= 3);
  }
}

TEST_CASE("state-cap fallback still gives exact answers") {
  Budget low_states;
  low_states.max_states = 2;  // forces the constant-memory walk
  CHECK(lp_values(4, 5, low_states) == CycleInfo{1, 4, 0});
  CHECK(lp_values(6, 2, low_states) == CycleInfo{2, 6, 0});
  CHECK(cycle_info(ZmTuple::zero(4, 3), low_states) == CycleInfo{0, 1, 0});
}

TEST_CASE("brent walk agrees with the indexed walk") {
  CHECK(cycle_info_brent(basic_tuple(4, 5)) == CycleInfo{1, 4, 0});
  CHECK(cycle_info_brent(ZmTuple::zero(6, 2)) == CycleInfo{0, 1, 0});

  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t n = 2 + rng() % 7;
    const std::uint32_t m = 2 + rng() % 9;
    std::vector<std::uint32_t> e(n);
    for (auto& x : e) x = rng() % m;
    const ZmTuple u(m, e);
    CHECK(cycle_info_brent(u) == cycle_info(u));
  }
}

TEST_CASE("is_in_cycle") {
  CHECK(is_in_cycle(ZmTuple(5, {0, 0, 1, 1})));
  CHECK_FALSE(is_in_cycle(basic_tuple(4, 5)));
  CHECK(is_in_cycle(ZmTuple::zero(4, 5)));
}

TEST_CASE("len and per are minimal (exhaustive n,m <= 4)") {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (std::uint32_t m = 2; m <= 4; ++m) {
      for_each_tuple(n, m, [&](const ZmTuple& u) {
        const CycleInfo ci = cycle_info(u);
        CHECK(ci.per >= 1);
        CHECK(ducci_iterate(u, ci.len + ci.per) == ducci_iterate(u, ci.len));
        if (ci.len >= 1) {
          CHECK(ducci_iterate(u, ci.len - 1 + ci.per) !=
                ducci_iterate(u, ci.len - 1));
        }
        for (std::uint64_t d = 1; d < ci.per; ++d) {
          if (ci.per % d != 0) continue;
          CHECK(ducci_iterate(u, ci.len + d) != ducci_iterate(u, ci.len));
        }
      });
    }
  }
}

TEST_CASE("cycle_info is deterministic") {
  const ZmTuple u(9, {3, 1, 4, 1, 5, 8});
  const CycleInfo a = cycle_info(u);
  const CycleInfo b = cycle_info(u);
  CHECK(a.len == b.len);
  CHECK(a.per == b.per);
  CHECK(a.steps_used == b.steps_used);
}

TEST_CASE("len bound and per divisibility hold exhaustively") {
  SUBCASE("Z_5^4") {
    std::vector<ZmTuple> all;
    for_each_tuple(4, 5, [&](const ZmTuple& u) { all.push_back(u); });
    const Report rep = check_len_per_bounds(4, 5, all);
    CHECK(rep.pass);
    CHECK(rep.checked == 625);
  }
  SUBCASE("Z_2^6") {
    std::vector<ZmTuple> all;
    for_each_tuple(6, 2, [&](const ZmTuple& u) { all.push_back(u); });
    const Report rep = check_len_per_bounds(6, 2, all);
    CHECK(rep.pass);
    CHECK(rep.checked == 64);
  }
  SUBCASE("zero only") {
    const std::vector<ZmTuple> sample{ZmTuple::zero(4, 6)};
    CHECK(check_len_per_bounds(4, 6, sample).pass);
  }
  SUBCASE("shape mismatch rejected") {
    const std::vector<ZmTuple> sample{ZmTuple::zero(4, 5)};
    CHECK_THROWS_AS(check_len_per_bounds(6, 2, sample), ShapeMismatch);
  }
}

TEST_CASE("period scaling and divisibility facts") {
  SUBCASE("P_2(6) = 2 * P_2(3)") {
    const Report rep = check_period_facts(2, 3, 1, 2);
    CHECK(rep.pass);
    CHECK(lp_values(3, 2).per == 3);
    CHECK(lp_values(6, 2).per == 6);
  }
  SUBCASE("P_2(6) divides P_4(6)") {
    CHECK(check_period_facts(2, 3, 1, 4).pass);
  }
  SUBCASE("odd prime") {
    CHECK(check_period_facts(3, 2, 1, 6).pass);
    CHECK(check_period_facts(3, 2, 2, 9).pass);
  }
  SUBCASE("hypothesis violations") {
    CHECK_THROWS_AS(check_period_facts(5, 1, 1, 5), PreconditionViolated);
    CHECK_THROWS_AS(check_period_facts(2, 4, 1, 2), PreconditionViolated);
    CHECK_THROWS_AS(check_period_facts(2, 3, 0, 2), PreconditionViolated);
    CHECK_THROWS_AS(check_period_facts(2, 3, 1, 5), PreconditionViolated);
    CHECK_THROWS_AS(check_period_facts(4, 3, 1, 4), NotPrime);
  }
}

TEST_CASE("in-cycle tuples are closed under addition") {
  SUBCASE("exhaustive Z_5^4") {
    const Report rep = check_k_subgroup(4, 5, 0);
    CHECK(rep.pass);
    CHECK(rep.checked == 1 + 125 * 125);  // zero membership + all pairs
  }
  SUBCASE("exhaustive Z_2^6") {
    const Report rep = check_k_subgroup(6, 2, 0);
    CHECK(rep.pass);
    CHECK(rep.checked == 1 + 16 * 16);
  }
  SUBCASE("sampled Z_6^4") {
    CHECK(check_k_subgroup(4, 6, 50).pass);
  }
  SUBCASE("exhaustive enumeration respects the state budget") {
    Budget tiny;
    tiny.max_states = 100;
    CHECK_THROWS_AS(check_k_subgroup(6, 5, 0, tiny), BudgetExceeded);
  }
}
