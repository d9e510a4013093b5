#pragma once

#include <cstdint>
#include <vector>

#include "ducci/report.hpp"
#include "ducci/zmod.hpp"

namespace ducci {

/// Row r of the cyclic coefficient table for Z_m^n: coeffs[s-1] holds the
/// coefficient on x_s in the first entry of the r-th iterate, i.e. the
/// x^(s-1) coefficient of (1+x)^r in Z_m[x]/(x^n - 1). The reverse of a row
/// equals the r-th iterate of the basic tuple.
struct CoeffRow {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint64_t r = 0;
  std::vector<std::uint32_t> coeffs;

  std::uint32_t at(std::uint32_t s) const { return coeffs[s - 1]; }  // 1-based
  ZmTuple reversed_tuple() const;

  friend bool operator==(const CoeffRow&, const CoeffRow&) = default;
};

/// C(r, j) mod m by a division-free Pascal recurrence; exact for composite m.
/// j outside [0, r] yields 0.
Residue binom_mod(std::uint64_t r, std::int64_t j, std::uint32_t m);

/// C(r, j) mod p through base-p digits. Throws NotPrime if p is composite.
Residue lucas_binom_mod_p(std::uint64_t r, std::uint64_t j, std::uint32_t p);

/// Row r computed by square-and-multiply exponentiation of (1+x) in the
/// cyclic ring (plain repeated multiplication below r = 4n, where it is
/// cheaper). O(n^2 log r) worst case.
CoeffRow coeff_row(std::uint32_t n, std::uint32_t m, std::uint64_t r);

/// Row r+1 from row r: one multiplication by (1+x), cyclically.
CoeffRow coeff_next(const CoeffRow& row);

/// Row t+r from rows t and r by cyclic convolution. Throws ShapeMismatch
/// when n or m differ.
CoeffRow coeff_compose(const CoeffRow& row_t, const CoeffRow& row_r);

enum class BinomLemma {
  AltSign,         // C(p^k-1, j) = (-1)^j mod p for all 0 <= j <= p^k-1
  GapPattern,      // C(p^k-p^(k-1), j) = (-1)^c at j = c*p^(k-1), else 0
  ChuVandermonde,  // sum_i C(p^(k-1), i) C(p^k-p^(k-1), j-i) = C(p^k, j)
};

/// Exhaustively checks one binomial lemma over its full index range, mod p.
/// GapPattern requires p odd and k > 1 (PreconditionViolated otherwise).
Report verify_binom_lemmas(std::uint32_t p, std::uint32_t k, BinomLemma which);

enum class CoeffLemma {
  Vanishing,  // row c*p^k of Z_p^(p^k*n1) vanishes off positions b*p^k + 1
  SmallerN,   // entry at b*p^k + 1 equals row c of the length-n1 table
};

/// Checks one coefficient lemma for n = p^k * n1, m = p. Requires n1 > 1 and
/// p not dividing n1 (PreconditionViolated otherwise).
Report verify_coeff_lemmas(std::uint32_t p, std::uint32_t k, std::uint32_t n1,
                           std::uint32_t c, CoeffLemma which);

bool is_prime(std::uint64_t v);

}  // namespace ducci
