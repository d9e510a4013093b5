#include "ducci/coeff.hpp"

#include <algorithm>
#include <string>

namespace ducci {

namespace {

constexpr std::uint64_t kLemmaRangeCap = 1u << 14;

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp,
                          std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t res = 1;
  base %= p;
  while (exp) {
    if (exp & 1) res = res * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return res;
}

// C(a, b) mod p for 0 <= a, b < p, p prime. Multiplicative formula with a
// Fermat inverse; every operand stays below 2^31 so products fit in 64 bits.
std::uint32_t small_binom_mod_p(std::uint64_t a, std::uint64_t b,
                                std::uint32_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    num = num * ((a - b + i) % p) % p;
    den = den * (i % p) % p;
  }
  if (num == 0) return 0;
  return static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

// Full row of C(N, .) mod m by in-place Pascal updates; O(N^2) additions.
std::vector<std::uint32_t> pascal_row_mod(std::uint64_t N, std::uint32_t m) {
  std::vector<std::uint32_t> row;
  row.reserve(N + 1);
  row.push_back(1 % m);
  for (std::uint64_t i = 1; i <= N; ++i) {
    row.push_back(1 % m);
    for (std::uint64_t t = i - 1; t >= 1; --t) {
      std::uint64_t s = std::uint64_t(row[t]) + row[t - 1];
      row[t] = static_cast<std::uint32_t>(s >= m ? s - m : s);
    }
  }
  return row;
}

// (-1)^j as a canonical residue mod m.
std::uint32_t sign_mod(std::uint64_t j, std::uint32_t m) {
  return j % 2 == 0 ? 1 % m : m - 1;
}

// Cyclic convolution in Z_m[x]/(x^n - 1). Each product is reduced before
// accumulation, so the accumulator stays below 2^51 for n <= 2^20.
std::vector<std::uint32_t> cyclic_mul(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b,
                                      std::uint32_t m) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = i + j;
      if (k >= n) k -= n;
      acc[k] += ai * b[j] % m;
    }
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = static_cast<std::uint32_t>(acc[k] % m);
  }
  return out;
}

// One cyclic multiplication by (1 + x), in place.
void mul_one_plus_x(std::vector<std::uint32_t>& row, std::uint32_t m) {
  const std::size_t n = row.size();
  const std::uint32_t last = row[n - 1];
  for (std::size_t s = n - 1; s >= 1; --s) {
    std::uint64_t v = std::uint64_t(row[s]) + row[s - 1];
    row[s] = static_cast<std::uint32_t>(v >= m ? v - m : v);
  }
  std::uint64_t v0 = std::uint64_t(row[0]) + last;
  row[0] = static_cast<std::uint32_t>(v0 >= m ? v0 - m : v0);
}

void check_row_shape(std::uint32_t n, std::uint32_t m) {
  if (n < kMinLength || n > kMaxLength || m < kMinModulus || m > kMaxModulus) {
    throw InvalidDimensions("coefficient row needs 2 <= n <= 2^20 and 2 <= m <= 2^31-1");
  }
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

ZmTuple CoeffRow::reversed_tuple() const {
  std::vector<std::uint32_t> rev(coeffs.rbegin(), coeffs.rend());
  return ZmTuple(m, std::move(rev));
}

Residue binom_mod(std::uint64_t r, std::int64_t j, std::uint32_t m) {
  if (j < 0 || static_cast<std::uint64_t>(j) > r) return Residue{0, m};
  std::uint64_t jj = static_cast<std::uint64_t>(j);
  jj = std::min(jj, r - jj);  // C(r, j) = C(r, r-j)
  if (jj == 0) return Residue{1 % m, m};
  // Pascal row clipped at column jj: O(r * jj) additions, no division.
  std::vector<std::uint32_t> row(jj + 1, 0);
  row[0] = 1 % m;
  for (std::uint64_t i = 1; i <= r; ++i) {
    for (std::uint64_t t = std::min(i, jj); t >= 1; --t) {
      std::uint64_t s = std::uint64_t(row[t]) + row[t - 1];
      row[t] = static_cast<std::uint32_t>(s >= m ? s - m : s);
    }
  }
  return Residue{row[jj], m};
}

Residue lucas_binom_mod_p(std::uint64_t r, std::uint64_t j, std::uint32_t p) {
  if (!is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not prime");
  }
  if (j > r) return Residue{0, p};
  std::uint64_t res = 1 % p;
  while ((r || j) && res != 0) {
    res = res * small_binom_mod_p(r % p, j % p, p) % p;
    r /= p;
    j /= p;
  }
  return Residue{static_cast<std::uint32_t>(res), p};
}

CoeffRow coeff_row(std::uint32_t n, std::uint32_t m, std::uint64_t r) {
  check_row_shape(n, m);
  std::vector<std::uint32_t> result(n, 0);
  result[0] = 1 % m;
  if (r <= 4 * std::uint64_t(n)) {
    for (std::uint64_t i = 0; i < r; ++i) mul_one_plus_x(result, m);
  } else {
    // square-and-multiply on (1 + x)
    std::vector<std::uint32_t> base(n, 0);
    base[0] = 1 % m;
    base[1] = 1 % m;
    std::uint64_t e = r;
    while (e) {
      if (e & 1) result = cyclic_mul(result, base, m);
      e >>= 1;
      if (e) base = cyclic_mul(base, base, m);
    }
  }
  return CoeffRow{n, m, r, std::move(result)};
}

CoeffRow coeff_next(const CoeffRow& row) {
  CoeffRow out{row.n, row.m, row.r + 1, row.coeffs};
  mul_one_plus_x(out.coeffs, out.m);
  return out;
}

CoeffRow coeff_compose(const CoeffRow& row_t, const CoeffRow& row_r) {
  if (row_t.n != row_r.n || row_t.m != row_r.m) {
    throw ShapeMismatch("cannot compose rows with different n or m");
  }
  return CoeffRow{row_t.n, row_t.m, row_t.r + row_r.r,
                  cyclic_mul(row_t.coeffs, row_r.coeffs, row_t.m)};
}

Report verify_binom_lemmas(std::uint32_t p, std::uint32_t k, BinomLemma which) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (k < 1) throw PreconditionViolated("need k >= 1");
  const std::uint64_t pk = checked_pow(p, k, kLemmaRangeCap);
  if (pk > kLemmaRangeCap) {
    throw PreconditionViolated("p^k exceeds the exhaustive-check cap 2^14");
  }
  Report rep;
  switch (which) {
    case BinomLemma::AltSign: {
      const std::uint64_t N = pk - 1;
      auto row = pascal_row_mod(N, p);
      for (std::uint64_t j = 0; j <= N; ++j) {
        ++rep.checked;
        std::uint32_t want = sign_mod(j, p);
        if (row[j] != want) {
          rep.pass = false;
          rep.counterexample = "j=" + std::to_string(j) + ": got " +
                               std::to_string(row[j]) + ", want " +
                               std::to_string(want);
          return rep;
        }
      }
      break;
    }
    case BinomLemma::GapPattern: {
      if (p == 2 || k <= 1) {
        throw PreconditionViolated("gap pattern needs an odd prime and k > 1");
      }
      const std::uint64_t pk1 = pk / p;
      const std::uint64_t N = pk - pk1;
      auto row = pascal_row_mod(N, p);
      for (std::uint64_t j = 0; j <= N; ++j) {
        ++rep.checked;
        std::uint32_t want =
            (j % pk1 == 0) ? sign_mod(j / pk1, p) : 0;
        if (row[j] != want) {
          rep.pass = false;
          rep.counterexample = "j=" + std::to_string(j) + ": got " +
                               std::to_string(row[j]) + ", want " +
                               std::to_string(want);
          return rep;
        }
      }
      break;
    }
    case BinomLemma::ChuVandermonde: {
      const std::uint64_t a = pk / p;       // p^(k-1)
      const std::uint64_t b = pk - a;
      auto row_a = pascal_row_mod(a, p);
      auto row_b = pascal_row_mod(b, p);
      auto row_n = pascal_row_mod(pk, p);
      for (std::uint64_t j = 0; j <= pk; ++j) {
        ++rep.checked;
        std::uint64_t acc = 0;
        const std::uint64_t lo = j > b ? j - b : 0;
        const std::uint64_t hi = std::min(j, a);
        for (std::uint64_t i = lo; i <= hi; ++i) {
          acc = (acc + std::uint64_t(row_a[i]) * row_b[j - i]) % p;
        }
        if (acc != row_n[j]) {
          rep.pass = false;
          rep.counterexample = "j=" + std::to_string(j) + ": sum " +
                               std::to_string(acc) + ", want " +
                               std::to_string(row_n[j]);
          return rep;
        }
      }
      break;
    }
  }
  return rep;
}

Report verify_coeff_lemmas(std::uint32_t p, std::uint32_t k, std::uint32_t n1,
                           std::uint32_t c, CoeffLemma which) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (k < 1 || c < 1) throw PreconditionViolated("need k >= 1 and c >= 1");
  if (n1 < 2) throw PreconditionViolated("need n1 > 1");
  if (n1 % p == 0) throw PreconditionViolated("need p not dividing n1");
  const std::uint64_t pk = checked_pow(p, k, kMaxLength);
  const std::uint64_t n = pk * n1;
  if (pk > kMaxLength || n > kMaxLength) {
    throw PreconditionViolated("n = p^k * n1 exceeds 2^20");
  }
  const std::uint64_t r = std::uint64_t(c) * pk;
  CoeffRow row = coeff_row(static_cast<std::uint32_t>(n), p, r);
  Report rep;
  switch (which) {
    case CoeffLemma::Vanishing: {
      for (std::uint64_t s = 1; s <= n; ++s) {
        if ((s - 1) % pk == 0) continue;  // positions b*p^k + 1 are exempt
        ++rep.checked;
        if (row.at(static_cast<std::uint32_t>(s)) != 0) {
          rep.pass = false;
          rep.counterexample = "s=" + std::to_string(s) + ": got " +
                               std::to_string(row.at(static_cast<std::uint32_t>(s))) +
                               ", want 0";
          return rep;
        }
      }
      break;
    }
    case CoeffLemma::SmallerN: {
      CoeffRow star = coeff_row(n1, p, c);
      for (std::uint32_t b = 0; b < n1; ++b) {
        ++rep.checked;
        std::uint32_t got = row.at(static_cast<std::uint32_t>(std::uint64_t(b) * pk + 1));
        std::uint32_t want = star.at(b + 1);
        if (got != want) {
          rep.pass = false;
          rep.counterexample = "b=" + std::to_string(b) + ": got " +
                               std::to_string(got) + ", want " +
                               std::to_string(want);
          return rep;
        }
      }
      break;
    }
  }
  return rep;
}

}  // namespace ducci
