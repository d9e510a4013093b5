#include "ducci/closed_form.hpp"

#include <algorithm>

namespace ducci {

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t v = 1;
  while (exp--) v *= base;
  return v;
}

// Component value for one common prime: exact p^k when l = 1, otherwise the
// case-3 bound p^(k-1) * (l(p-1) + 1).
struct Component {
  std::uint64_t value;
  bool exact;
};

Component component_bound(const PrimePowerSplit::CommonPrime& cp) {
  if (cp.l == 1) {
    return {pow_u64(cp.p, cp.k), true};
  }
  const std::uint64_t v =
      pow_u64(cp.p, cp.k - 1) * (std::uint64_t(cp.l) * (cp.p - 1) + 1);
  return {v, false};
}

}  // namespace

std::string to_string(BoundKind kind) {
  return kind == BoundKind::Exact ? "exact" : "bound";
}

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::Case1: return "1";
    case CaseId::Case2: return "2";
    case CaseId::Case3: return "3";
    case CaseId::Case4: return "4";
    case CaseId::OddN: return "odd-n";
  }
  return "?";
}

PrimePowerSplit split_prime_common(std::uint32_t n, std::uint32_t m) {
  if (n < 2 || m < 2) {
    throw InvalidDimensions("split needs n, m >= 2");
  }
  PrimePowerSplit split;
  split.n1 = n;
  split.m1 = m;
  std::uint32_t rest = n;
  for (std::uint32_t q = 2; std::uint64_t(q) * q <= rest; ++q) {
    if (rest % q != 0) continue;
    std::uint32_t k = 0;
    while (rest % q == 0) {
      rest /= q;
      ++k;
    }
    if (m % q == 0) {
      std::uint32_t l = 0;
      std::uint32_t mm = m;
      while (mm % q == 0) {
        mm /= q;
        ++l;
      }
      split.pairs.push_back({q, k, l});
    }
  }
  if (rest > 1 && m % rest == 0) {  // one prime factor above sqrt remains
    std::uint32_t l = 0;
    std::uint32_t mm = m;
    while (mm % rest == 0) {
      mm /= rest;
      ++l;
    }
    split.pairs.push_back({rest, 1, l});
  }
  for (const auto& cp : split.pairs) {
    for (std::uint32_t i = 0; i < cp.k; ++i) split.n1 /= cp.p;
    for (std::uint32_t i = 0; i < cp.l; ++i) split.m1 /= cp.p;
  }
  return split;
}

LBoundResult l_formula(std::uint32_t n, std::uint32_t m) {
  if (n < 2 || m < 2) {
    throw InvalidDimensions("l_formula needs n, m >= 2");
  }
  if (n % 2 != 0) {
    // m = 2^l * m1 with m1 odd gives L = l; no formula when m is odd.
    std::uint32_t l = 0;
    std::uint32_t mm = m;
    while (mm % 2 == 0) {
      mm /= 2;
      ++l;
    }
    if (l == 0) {
      throw UnsupportedOddN("no closed form for odd n with odd m");
    }
    return LBoundResult{l, BoundKind::Exact, CaseId::OddN};
  }

  const PrimePowerSplit split = split_prime_common(n, m);
  if (split.pairs.empty()) {
    return LBoundResult{1, BoundKind::Exact, CaseId::Case1};
  }
  if (split.pairs.size() == 1) {
    const auto& cp = split.pairs.front();
    const Component c = component_bound(cp);
    return LBoundResult{c.value,
                        c.exact ? BoundKind::Exact : BoundKind::UpperBound,
                        cp.l == 1 ? CaseId::Case2 : CaseId::Case3};
  }
  // Several common primes: max over per-prime components. The aggregate is
  // exact when no bound component can exceed the best exact component.
  std::uint64_t best_exact = 0, best_bound = 0, value = 0;
  for (const auto& cp : split.pairs) {
    const Component c = component_bound(cp);
    value = std::max(value, c.value);
    if (c.exact) {
      best_exact = std::max(best_exact, c.value);
    } else {
      best_bound = std::max(best_bound, c.value);
    }
  }
  const bool exact = best_bound == 0 || best_exact >= best_bound;
  return LBoundResult{value, exact ? BoundKind::Exact : BoundKind::UpperBound,
                      CaseId::Case4};
}

std::uint64_t l_exact_via_components(std::uint32_t n, std::uint32_t m,
                                     const Budget& budget) {
  if (n % 2 != 0) {
    throw PreconditionViolated("component evaluation needs even n");
  }
  const PrimePowerSplit split = split_prime_common(n, m);
  if (split.pairs.empty()) {
    throw PreconditionViolated("n and m share no prime factor");
  }
  std::uint64_t best = 0;
  for (const auto& cp : split.pairs) {
    std::uint64_t modulus = pow_u64(cp.p, cp.l);
    best = std::max(
        best, lp_values(n, static_cast<std::uint32_t>(modulus), budget).len);
  }
  return best;
}

}  // namespace ducci
