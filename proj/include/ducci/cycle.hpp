#pragma once

#include <cstdint>
#include <span>

#include "ducci/report.hpp"
#include "ducci/zmod.hpp"

namespace ducci {

/// Iteration caps for orbit walks. BudgetExceeded is an explicit outcome,
/// never silent truncation.
struct Budget {
  std::uint64_t max_steps = 10'000'000;
  std::uint64_t max_states = 1'000'000;
};

/// Pre-period and period of one orbit: the smallest len >= 0 and per >= 1
/// with iterate(u, len + per) = iterate(u, len).
struct CycleInfo {
  std::uint64_t len = 0;
  std::uint64_t per = 1;
  std::uint64_t steps_used = 0;

  friend bool operator==(const CycleInfo& a, const CycleInfo& b) {
    return a.len == b.len && a.per == b.per;
  }
};

/// Exact (len, per) by a full visited-state index (state -> first step).
/// Falls back to the constant-memory walk below once the index would exceed
/// budget.max_states; throws BudgetExceeded past budget.max_steps.
CycleInfo cycle_info(const ZmTuple& u, const Budget& budget = {});

/// Exact (len, per) by Brent pointer-chasing plus refinement; O(1) memory.
/// Same contract as cycle_info, more steps.
CycleInfo cycle_info_brent(const ZmTuple& u, const Budget& budget = {});

/// cycle_info of the basic tuple (0,...,0,1): len is L_m(n), per is P_m(n).
CycleInfo lp_values(std::uint32_t n, std::uint32_t m, const Budget& budget = {});

/// True iff u lies in its own cycle (len = 0).
bool is_in_cycle(const ZmTuple& u, const Budget& budget = {});

/// Verifies len(u) <= L_m(n) and per(u) | P_m(n) for every sample element.
Report check_len_per_bounds(std::uint32_t n, std::uint32_t m,
                            std::span<const ZmTuple> sample,
                            const Budget& budget = {});

/// Verifies the period scaling P_p(n1 * p^k) = p^k * P_p(n1) and the
/// divisibility P_p(n) | P_m(n) for n = n1 * p^k. Requires p prime, p not
/// dividing n1, n1 >= 2, k >= 1 and p | m.
Report check_period_facts(std::uint32_t p, std::uint32_t n1, std::uint32_t k,
                          std::uint32_t m, const Budget& budget = {});

/// Closure check for the set K of in-cycle tuples: sums of in-cycle tuples
/// stay in-cycle, and the zero tuple is in K. trials = 0 enumerates all of
/// Z_m^n (m^n must stay within budget.max_states); otherwise `trials` random
/// pairs are drawn and mapped into their cycles first.
Report check_k_subgroup(std::uint32_t n, std::uint32_t m, std::uint64_t trials,
                        const Budget& budget = {});

}  // namespace ducci
