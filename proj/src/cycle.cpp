#include "ducci/cycle.hpp"

#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "ducci/coeff.hpp"

namespace ducci {

namespace {

using State = std::vector<std::uint32_t>;

std::string state_key(const State& s) {
  std::string out(s.size() * 4, '\0');
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::uint32_t e = s[i];
    out[4 * i + 0] = static_cast<char>(e & 0xff);
    out[4 * i + 1] = static_cast<char>((e >> 8) & 0xff);
    out[4 * i + 2] = static_cast<char>((e >> 16) & 0xff);
    out[4 * i + 3] = static_cast<char>((e >> 24) & 0xff);
  }
  return out;
}

// Walks the orbit with a state -> first-step index. Returns exact (len, per)
// or falls back to Brent when the index outgrows max_states.
CycleInfo indexed_walk(const ZmTuple& u, const Budget& budget);

CycleInfo brent_walk(const ZmTuple& u, const Budget& budget,
                     std::uint64_t steps_before) {
  const std::uint32_t m = u.modulus();
  State tortoise(u.entries().begin(), u.entries().end());
  State hare = tortoise;
  State scratch(tortoise.size());
  std::uint64_t steps = steps_before;

  auto advance = [&](State& s) {
    detail::step_into(s, scratch, m);
    s.swap(scratch);
    if (++steps > budget.max_steps) {
      throw BudgetExceeded("orbit outran max_steps=" +
                               std::to_string(budget.max_steps),
                           steps);
    }
  };

  // Phase 1: minimal cycle length by power-of-two windows.
  std::uint64_t power = 1, lam = 1;
  advance(hare);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    advance(hare);
    ++lam;
  }

  // Phase 2: pre-period length with two pointers lam apart.
  State front(u.entries().begin(), u.entries().end());
  for (std::uint64_t i = 0; i < lam; ++i) advance(front);
  State back(u.entries().begin(), u.entries().end());
  std::uint64_t mu = 0;
  while (back != front) {
    advance(back);
    advance(front);
    ++mu;
  }
  return CycleInfo{mu, lam, steps};
}

CycleInfo indexed_walk(const ZmTuple& u, const Budget& budget) {
  const std::uint32_t m = u.modulus();
  State cur(u.entries().begin(), u.entries().end());
  State scratch(cur.size());
  std::unordered_map<std::string, std::uint64_t> first_seen;
  first_seen.emplace(state_key(cur), 0);

  std::uint64_t step = 0;
  while (true) {
    if (first_seen.size() >= budget.max_states) {
      return brent_walk(u, budget, step);
    }
    if (step >= budget.max_steps) {
      throw BudgetExceeded("orbit outran max_steps=" +
                               std::to_string(budget.max_steps),
                           step);
    }
    detail::step_into(cur, scratch, m);
    cur.swap(scratch);
    ++step;
    auto [it, inserted] = first_seen.emplace(state_key(cur), step);
    if (!inserted) {
      const std::uint64_t len = it->second;
      return CycleInfo{len, step - len, step};
    }
  }
}

}  // namespace

CycleInfo cycle_info(const ZmTuple& u, const Budget& budget) {
  return indexed_walk(u, budget);
}

CycleInfo cycle_info_brent(const ZmTuple& u, const Budget& budget) {
  return brent_walk(u, budget, 0);
}

CycleInfo lp_values(std::uint32_t n, std::uint32_t m, const Budget& budget) {
  return cycle_info(basic_tuple(n, m), budget);
}

bool is_in_cycle(const ZmTuple& u, const Budget& budget) {
  return cycle_info(u, budget).len == 0;
}

Report check_len_per_bounds(std::uint32_t n, std::uint32_t m,
                            std::span<const ZmTuple> sample,
                            const Budget& budget) {
  const CycleInfo basic = lp_values(n, m, budget);
  Report rep;
  for (const ZmTuple& u : sample) {
    if (u.size() != n || u.modulus() != m) {
      throw ShapeMismatch("sample tuple " + u.to_text() + " is not in Z_" +
                          std::to_string(m) + "^" + std::to_string(n));
    }
    ++rep.checked;
    const CycleInfo ci = cycle_info(u, budget);
    if (ci.len > basic.len) {
      rep.pass = false;
      rep.counterexample = "tuple " + u.to_text() + ": len " +
                           std::to_string(ci.len) + " > L=" +
                           std::to_string(basic.len);
      return rep;
    }
    if (basic.per % ci.per != 0) {
      rep.pass = false;
      rep.counterexample = "tuple " + u.to_text() + ": per " +
                           std::to_string(ci.per) + " does not divide P=" +
                           std::to_string(basic.per);
      return rep;
    }
  }
  return rep;
}

Report check_period_facts(std::uint32_t p, std::uint32_t n1, std::uint32_t k,
                          std::uint32_t m, const Budget& budget) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (n1 < 2) throw PreconditionViolated("need n1 >= 2");
  if (n1 % p == 0) throw PreconditionViolated("need p not dividing n1");
  if (k < 1) throw PreconditionViolated("need k >= 1");
  if (m % p != 0) throw PreconditionViolated("need p | m");

  std::uint64_t n = n1;
  for (std::uint32_t i = 0; i < k; ++i) n *= p;
  if (n > kMaxLength) throw PreconditionViolated("n = n1 * p^k exceeds 2^20");
  const auto nn = static_cast<std::uint32_t>(n);

  Report rep;
  const std::uint64_t scale_lhs = lp_values(nn, p, budget).per;
  std::uint64_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) pk *= p;
  const std::uint64_t scale_rhs = pk * lp_values(n1, p, budget).per;
  ++rep.checked;
  if (scale_lhs != scale_rhs) {
    rep.pass = false;
    rep.counterexample = "P_" + std::to_string(p) + "(" + std::to_string(nn) +
                         ") = " + std::to_string(scale_lhs) + " != p^k * P_" +
                         std::to_string(p) + "(" + std::to_string(n1) +
                         ") = " + std::to_string(scale_rhs);
    return rep;
  }
  const std::uint64_t full_per = lp_values(nn, m, budget).per;
  ++rep.checked;
  if (full_per % scale_lhs != 0) {
    rep.pass = false;
    rep.counterexample = "P_" + std::to_string(p) + "(" + std::to_string(nn) +
                         ") = " + std::to_string(scale_lhs) +
                         " does not divide P_" + std::to_string(m) + "(" +
                         std::to_string(nn) + ") = " + std::to_string(full_per);
  }
  return rep;
}

namespace {

// Enumerates all of Z_m^n in lexicographic order, calling fn on each tuple.
template <typename Fn>
void for_each_tuple(std::uint32_t n, std::uint32_t m, Fn&& fn) {
  std::vector<std::uint32_t> digits(n, 0);
  while (true) {
    fn(digits);
    std::uint32_t i = n;
    while (i > 0) {
      --i;
      if (++digits[i] < m) break;
      digits[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

Report check_k_subgroup(std::uint32_t n, std::uint32_t m, std::uint64_t trials,
                        const Budget& budget) {
  Report rep;
  const ZmTuple zero = ZmTuple::zero(n, m);
  ++rep.checked;
  if (!is_in_cycle(zero, budget)) {
    rep.pass = false;
    rep.counterexample = "zero tuple is not in K";
    return rep;
  }

  std::vector<ZmTuple> members;
  if (trials == 0) {
    // Exhaustive: the state space itself must fit the budget.
    double states = 1;
    for (std::uint32_t i = 0; i < n; ++i) states *= m;
    if (states > static_cast<double>(budget.max_states)) {
      throw BudgetExceeded("m^n exceeds max_states=" +
                               std::to_string(budget.max_states),
                           0);
    }
    for_each_tuple(n, m, [&](const std::vector<std::uint32_t>& digits) {
      ZmTuple u(m, digits);
      if (cycle_info(u, budget).len == 0) members.push_back(std::move(u));
    });
    for (const ZmTuple& a : members) {
      for (const ZmTuple& b : members) {
        ++rep.checked;
        if (!is_in_cycle(add_tuples(a, b), budget)) {
          rep.pass = false;
          rep.counterexample = "(" + a.to_text() + ") + (" + b.to_text() +
                               ") left K";
          return rep;
        }
      }
    }
    return rep;
  }

  // Sampled: map random tuples onto their cycles to obtain K members.
  std::mt19937_64 rng(0x5eedu);
  std::uniform_int_distribution<std::uint32_t> dist(0, m - 1);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<std::uint32_t> e1(n), e2(n);
    for (auto& e : e1) e = dist(rng);
    for (auto& e : e2) e = dist(rng);
    ZmTuple a(m, std::move(e1));
    ZmTuple b(m, std::move(e2));
    const std::uint64_t len_a = cycle_info(a, budget).len;
    const std::uint64_t len_b = cycle_info(b, budget).len;
    a = ducci_iterate(std::move(a), len_a);
    b = ducci_iterate(std::move(b), len_b);
    ++rep.checked;
    if (!is_in_cycle(add_tuples(a, b), budget)) {
      rep.pass = false;
      rep.counterexample = "(" + a.to_text() + ") + (" + b.to_text() +
                           ") left K";
      return rep;
    }
  }
  return rep;
}

}  // namespace ducci
