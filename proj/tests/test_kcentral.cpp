#include <doctest.h>

#include "kcb/core_arith.hpp"
#include "kcb/kcentral.hpp"
#include "oracles.hpp"

using namespace kcb;

TEST_CASE("kcentral_c basics") {
  for (std::int64_t k : {1, 2, 3, 7, 10}) {
    CHECK(kcentral_c(0, k) == 1);
    CHECK(kcentral_c(1, k) == k);
  }
  CHECK(kcentral_c(2, 3) == 18);
  CHECK_THROWS_AS(kcentral_c(3, 0), std::invalid_argument);
  // k = 1 is the all-ones row
  for (std::uint64_t n = 0; n <= 50; ++n) CHECK(kcentral_c(n, 1) == 1);
}

TEST_CASE("c(n,2) is the central binomial coefficient") {
  CSequence seq(2);
  for (std::uint64_t n = 0; n <= 500; ++n)
    CHECK(seq.next() == oracles::central_binomial(n));
}

TEST_CASE("recurrence agrees with the closed form") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    auto expected = oracles::closed_form_c(2000, k);
    CSequence seq(k);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
      Int v = seq.next();
      CHECK(v == expected[n]);
      CHECK(v > 0);
    }
  }
}

TEST_CASE("c_sequence examples") {
  auto s3 = c_values(3, 3);
  CHECK(s3 == std::vector<Int>{1, 3, 18, 126});
  auto s2 = c_values(3, 2);
  CHECK(s2 == std::vector<Int>{1, 2, 6, 20});
  CHECK(c_values(0, 9) == std::vector<Int>{1});
}

TEST_CASE("tilde_c") {
  for (std::int64_t k : {1, 2, 5}) CHECK(tilde_c(0, k) == 1);
  // odd part of the central binomial coefficient
  for (std::uint64_t n = 0; n <= 500; ++n) {
    Int central = oracles::central_binomial(n);
    Int odd_part = central >> digit_sum(n, 2);
    CHECK(tilde_c(n, 2) == odd_part);
    CHECK(mpz_odd_p(odd_part.get_mpz_t()));
  }
}

TEST_CASE("Cauchy identity") {
  auto r0 = verify_cauchy_identity(0, 4);
  CHECK(r0.ok);
  CHECK(r0.multisum == 1);

  auto r22 = verify_cauchy_identity(2, 2);
  CHECK(r22.ok);
  CHECK(r22.multisum == 16);  // 1*6 + 2*2 + 6*1

  CHECK_THROWS_AS(verify_cauchy_identity(100, 30, 1000), BudgetExceeded);
}

TEST_CASE("k divides c(n,k) for n >= 1") {
  CHECK(verify_k_divisibility(1, 17));
  CHECK(verify_k_divisibility(2000, 3));
  CHECK(verify_k_divisibility(2000, 10));
}

TEST_CASE("reduced denominator of c(n,3)/3^{2n} is a power of 3") {
  CSequence seq(3);
  Int nine_n = 1;
  for (std::uint64_t n = 0; n <= 500; ++n) {
    Rat f(seq.next(), nine_n);
    f.canonicalize();
    Int den = f.get_den();
    while (mpz_divisible_ui_p(den.get_mpz_t(), 3))
      mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 3);
    CHECK(den == 1);
    nine_n *= 9;
  }
}
