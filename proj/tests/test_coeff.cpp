#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ducci/coeff.hpp"
#include "test_support.hpp"

using namespace ducci;
using test::exact_binom;

TEST_CASE("binom_mod matches the exact 128-bit oracle") {
  CHECK(binom_mod(3, 1, 10) == Residue{3, 10});
  CHECK(binom_mod(17, 0, 9) == Residue{1, 9});
  CHECK(binom_mod(6, 3, 3) == Residue{2, 3});  // C(6,3) = 20
  CHECK(binom_mod(4, -1, 7) == Residue{0, 7});
  CHECK(binom_mod(4, 5, 7) == Residue{0, 7});

  for (unsigned r = 0; r <= 40; ++r) {
    for (unsigned j = 0; j <= r; ++j) {
      for (std::uint32_t m : {2u, 3u, 5u, 9u, 12u, 2147483647u}) {
        const auto want = static_cast<std::uint32_t>(exact_binom(r, j) % m);
        CHECK(binom_mod(r, j, m).value == want);
      }
    }
  }
}

TEST_CASE("lucas_binom_mod_p worked values") {
  CHECK(lucas_binom_mod_p(5, 2, 2) == Residue{0, 2});    // C(5,2) = 10
  CHECK(lucas_binom_mod_p(27, 27, 3) == Residue{1, 3});  // C(N,N) = 1
  CHECK(lucas_binom_mod_p(8, 4, 3) == Residue{1, 3});    // C(8,4) = 70
  CHECK(lucas_binom_mod_p(10, 11, 5) == Residue{0, 5});
  CHECK_THROWS_AS(lucas_binom_mod_p(5, 2, 4), NotPrime);
  CHECK_THROWS_AS(lucas_binom_mod_p(5, 2, 1), NotPrime);
}

TEST_CASE("lucas agrees with the Pascal route for r <= 200") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    // incremental Pascal row mod p, advanced once per r
    std::vector<std::uint32_t> row{1};
    for (unsigned r = 0; r <= 200; ++r) {
      for (unsigned j = 0; j <= r; ++j) {
        CHECK(lucas_binom_mod_p(r, j, p).value == row[j]);
      }
      row.push_back(1 % p);
      for (unsigned t = r; t >= 1; --t) row[t] = (row[t] + row[t - 1]) % p;
    }
  }
  // spot-check the clipped-Pascal implementation against the same route
  for (unsigned r : {50u, 121u, 200u}) {
    for (unsigned j = 0; j <= r; j += 7) {
      for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        CHECK(binom_mod(r, j, p).value == lucas_binom_mod_p(r, j, p).value);
      }
    }
  }
}

TEST_CASE("coeff_row worked values") {
  CHECK(coeff_row(4, 5, 3).coeffs == std::vector<std::uint32_t>{1, 3, 3, 1});
  CHECK(coeff_row(4, 5, 0).coeffs == std::vector<std::uint32_t>{1, 0, 0, 0});
  CHECK(coeff_row(4, 5, 4).coeffs == std::vector<std::uint32_t>{2, 4, 1, 4});
  CHECK(coeff_row(6, 2, 2).coeffs ==
        std::vector<std::uint32_t>{1, 0, 1, 0, 0, 0});
}

TEST_CASE("row reversal equals iterating the basic tuple (n,m <= 8, r <= 3n)") {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    for (std::uint32_t m = 2; m <= 8; ++m) {
      ZmTuple state = basic_tuple(n, m);
      for (std::uint64_t r = 0; r <= 3 * std::uint64_t(n); ++r) {
        CHECK(coeff_row(n, m, r).reversed_tuple() == state);
        state = ducci_step(state);
      }
    }
  }
}

TEST_CASE("row entries below n are plain binomials") {
  for (std::uint32_t n : {4u, 7u}) {
    for (std::uint32_t m : {5u, 6u}) {
      for (std::uint64_t r = 0; r < n; ++r) {
        const CoeffRow row = coeff_row(n, m, r);
        for (std::uint32_t s = 1; s <= n; ++s) {
          CHECK(row.at(s) == binom_mod(r, std::int64_t(s) - 1, m).value);
        }
      }
    }
  }
}

TEST_CASE("coeff_next advances one row") {
  const CoeffRow r3 = coeff_row(4, 5, 3);
  CHECK(coeff_next(r3) == coeff_row(4, 5, 4));
  CHECK(coeff_next(coeff_row(4, 5, 0)).coeffs ==
        std::vector<std::uint32_t>{1, 1, 0, 0});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 2 + rng() % 9;
    const std::uint32_t m = 2 + rng() % 11;
    const std::uint64_t r = rng() % 200;
    CHECK(coeff_next(coeff_row(n, m, r)) == coeff_row(n, m, r + 1));
  }
}

TEST_CASE("coeff_compose convolves rows") {
  CHECK(coeff_compose(coeff_row(4, 5, 1), coeff_row(4, 5, 1)).coeffs ==
        std::vector<std::uint32_t>{1, 2, 1, 0});
  CHECK(coeff_compose(coeff_row(4, 5, 1), coeff_row(4, 5, 4)).coeffs ==
        std::vector<std::uint32_t>{1, 1, 0, 0});
  const CoeffRow r7 = coeff_row(6, 9, 7);
  CHECK(coeff_compose(r7, coeff_row(6, 9, 0)) == r7);
  CHECK_THROWS_AS(coeff_compose(coeff_row(4, 5, 1), coeff_row(5, 5, 1)),
                  ShapeMismatch);
  CHECK_THROWS_AS(coeff_compose(coeff_row(4, 5, 1), coeff_row(4, 7, 1)),
                  ShapeMismatch);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 2 + rng() % 9;
    const std::uint32_t m = 2 + rng() % 11;
    const std::uint64_t a = rng() % 101, b = rng() % 101;
    CHECK(coeff_compose(coeff_row(n, m, a), coeff_row(n, m, b)) ==
          coeff_row(n, m, a + b));
  }
}

TEST_CASE("binary exponentiation path agrees across the 4n threshold") {
  for (std::uint32_t n : {3u, 6u}) {
    for (std::uint32_t m : {4u, 7u}) {
      ZmTuple expect = ducci_iterate(basic_tuple(n, m), 6 * n);
      CHECK(coeff_row(n, m, 6 * n).reversed_tuple() == expect);  // binexp
      CHECK(coeff_compose(coeff_row(n, m, 5 * n), coeff_row(n, m, n))
                .reversed_tuple() == expect);
    }
  }
}

TEST_CASE("alt-sign binomial lemma") {
  const Report rep = verify_binom_lemmas(3, 2, BinomLemma::AltSign);
  CHECK(rep.pass);
  CHECK(rep.checked == 9);  // j = 0..8
  CHECK(verify_binom_lemmas(2, 3, BinomLemma::AltSign).pass);
  CHECK(verify_binom_lemmas(5, 2, BinomLemma::AltSign).pass);
  CHECK(verify_binom_lemmas(7, 1, BinomLemma::AltSign).pass);
  CHECK_THROWS_AS(verify_binom_lemmas(6, 2, BinomLemma::AltSign), NotPrime);
}

TEST_CASE("gap-pattern binomial lemma") {
  CHECK(verify_binom_lemmas(3, 2, BinomLemma::GapPattern).pass);
  CHECK(verify_binom_lemmas(3, 3, BinomLemma::GapPattern).pass);
  CHECK(verify_binom_lemmas(5, 2, BinomLemma::GapPattern).pass);
  CHECK_THROWS_AS(verify_binom_lemmas(2, 2, BinomLemma::GapPattern),
                  PreconditionViolated);
  CHECK_THROWS_AS(verify_binom_lemmas(3, 1, BinomLemma::GapPattern),
                  PreconditionViolated);

  // p=3, k=2: C(6, .) mod 3 is nonzero exactly at j = 0, 3, 6
  const std::vector<std::uint32_t> want{1, 0, 0, 2, 0, 0, 1};
  for (std::int64_t j = 0; j <= 6; ++j) {
    CHECK(binom_mod(6, j, 3).value == want[j]);
  }
}

TEST_CASE("chu-vandermonde identity") {
  CHECK(verify_binom_lemmas(3, 2, BinomLemma::ChuVandermonde).pass);
  CHECK(verify_binom_lemmas(2, 1, BinomLemma::ChuVandermonde).pass);
  CHECK(verify_binom_lemmas(5, 3, BinomLemma::ChuVandermonde).pass);
}

TEST_CASE("coefficient vanishing lemma") {
  CHECK(verify_coeff_lemmas(2, 1, 3, 1, CoeffLemma::Vanishing).pass);
  CHECK(verify_coeff_lemmas(3, 2, 2, 4, CoeffLemma::Vanishing).pass);
  CHECK_THROWS_AS(verify_coeff_lemmas(2, 1, 1, 1, CoeffLemma::Vanishing),
                  PreconditionViolated);
  CHECK_THROWS_AS(verify_coeff_lemmas(2, 1, 6, 1, CoeffLemma::Vanishing),
                  PreconditionViolated);
  CHECK_THROWS_AS(verify_coeff_lemmas(9, 1, 2, 1, CoeffLemma::Vanishing),
                  NotPrime);
}

TEST_CASE("smaller-length coefficient lemma") {
  CHECK(verify_coeff_lemmas(2, 1, 3, 1, CoeffLemma::SmallerN).pass);
  CHECK(verify_coeff_lemmas(3, 1, 2, 1, CoeffLemma::SmallerN).pass);
  CHECK(verify_coeff_lemmas(5, 1, 3, 2, CoeffLemma::SmallerN).pass);

  // the (p=2, k=1, n1=3, c=1) instance written out: row 2 of Z_2^6 restricted
  // to odd positions equals row 1 of Z_2^3
  const CoeffRow big = coeff_row(6, 2, 2);
  CHECK(std::vector<std::uint32_t>{big.at(1), big.at(3), big.at(5)} ==
        coeff_row(3, 2, 1).coeffs);
}

TEST_CASE("rows at c*p^k are the smaller row spread with stride p^k") {
  for (auto [p, k, n1] : {std::array<std::uint32_t, 3>{2, 1, 3},
                          std::array<std::uint32_t, 3>{2, 2, 3},
                          std::array<std::uint32_t, 3>{3, 1, 4}}) {
    std::uint32_t pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) pk *= p;
    const std::uint32_t n = pk * n1;
    for (std::uint32_t c = 1; c <= 4; ++c) {
      const CoeffRow big = coeff_row(n, p, std::uint64_t(c) * pk);
      const CoeffRow small = coeff_row(n1, p, c);
      for (std::uint32_t s = 1; s <= n; ++s) {
        const std::uint32_t want =
            (s - 1) % pk == 0 ? small.at((s - 1) / pk + 1) : 0;
        CHECK(big.at(s) == want);
      }
    }
  }
}
