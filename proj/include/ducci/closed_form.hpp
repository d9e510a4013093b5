#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ducci/cycle.hpp"

namespace ducci {

/// Decomposition n = n1 * prod p_i^k_i, m = m1 * prod p_i^l_i where the p_i
/// are exactly the common prime divisors of n and m (ascending). n1 and m1
/// are coprime to each other and to every p_i.
struct PrimePowerSplit {
  struct CommonPrime {
    std::uint32_t p;
    std::uint32_t k;  // multiplicity in n
    std::uint32_t l;  // multiplicity in m
    friend bool operator==(const CommonPrime&, const CommonPrime&) = default;
  };

  std::vector<CommonPrime> pairs;
  std::uint32_t n1 = 1;
  std::uint32_t m1 = 1;
};

enum class BoundKind { Exact, UpperBound };

enum class CaseId { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4, OddN = 5 };

std::string to_string(BoundKind kind);
std::string to_string(CaseId id);

/// Pre-period value (or upper bound) for the basic tuple from the closed
/// forms, with the case that produced it.
struct LBoundResult {
  std::uint64_t value = 0;
  BoundKind kind = BoundKind::Exact;
  CaseId case_id = CaseId::Case1;

  friend bool operator==(const LBoundResult&, const LBoundResult&) = default;
};

PrimePowerSplit split_prime_common(std::uint32_t n, std::uint32_t m);

/// Closed-form L_m(n). Even n: value 1 when n, m are coprime; p^k when the
/// single common prime has multiplicity 1 in m; the bound p^(k-1)(l(p-1)+1)
/// when it has multiplicity l >= 2 (conjecturally exact, reported as a
/// bound); the per-prime maximum when several primes are common. Odd n with
/// even m = 2^l * m1: value l. Odd n with odd m throws UnsupportedOddN.
LBoundResult l_formula(std::uint32_t n, std::uint32_t m);

/// Exact L_m(n) for the multi-prime case by computing each per-prime
/// component L_{p^l}(n) with cycle detection and taking the maximum.
/// Requires even n and at least one common prime (PreconditionViolated).
std::uint64_t l_exact_via_components(std::uint32_t n, std::uint32_t m,
                                     const Budget& budget = {});

}  // namespace ducci
