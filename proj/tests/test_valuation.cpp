#include <doctest.h>

#include "kcb/core_arith.hpp"
#include "kcb/kcentral.hpp"
#include "kcb/valuation.hpp"
#include "oracles.hpp"

using namespace kcb;

namespace {

bool sum_of_distinct_powers_of_4(std::uint64_t n) {
  for (; n > 0; n /= 4)
    if (n % 4 > 1) return false;
  return true;
}

}  // namespace

TEST_CASE("floor sum valuation") {
  CHECK(valuation_floor_sum(0, 3, 2) == 0);
  CHECK_THROWS_AS(valuation_floor_sum(5, 6, 3), std::invalid_argument);

  SUBCASE("k = 2 reduces to central binomial valuations") {
    for (std::uint64_t n = 1; n <= 500; ++n)
      for (std::uint32_t p : {3u, 5u, 7u})
        CHECK(valuation_floor_sum(n, 2, p) == binomial_valuation(2 * n, n, p));
  }
  SUBCASE("against stripped factors of exact c(n,k)") {
    for (std::int64_t k = 1; k <= 5; ++k) {
      auto cvals = oracles::closed_form_c(300, k);
      for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (k % p == 0) continue;
        for (std::uint64_t n = 0; n <= 300; ++n)
          CHECK(valuation_floor_sum(n, k, p) ==
                oracles::strip_valuation(cvals[n], p));
      }
    }
  }
}

TEST_CASE("carry count valuation") {
  CHECK_THROWS_AS(valuation_carry_count(5, 10, 2), std::invalid_argument);

  for (std::int64_t k : {1, 3, 5, 8})
    for (std::uint32_t p : {2u, 3u, 7u, 11u}) {
      if (k % p == 0) continue;
      for (std::uint64_t n = 0; n <= 2000; ++n) {
        ValuationReport rep = valuation_carry_count(n, k, p);
        CHECK(rep.value == valuation_floor_sum(n, k, p));
        CHECK(rep.value == rep.witnesses.size());
        CHECK(rep.v1 <= rep.value);
        CHECK(rep.value <= rep.v2);
      }
    }

  // n a sum of distinct powers of 4 has even-position-only binary digits
  for (std::uint64_t n : {1ull, 4ull, 5ull, 16ull, 21ull, 1040ull})
    CHECK(valuation_carry_count(n, 3, 2).value == 0);
}

TEST_CASE("valuation when p divides k") {
  CHECK(valuation_p_divides_k(0, 6, 3) == 0);
  CHECK_THROWS_AS(valuation_p_divides_k(5, 3, 2), std::invalid_argument);

  // k = 2: nu_2(C_n) = s_2(n)
  for (std::uint64_t n = 0; n <= 2000; ++n)
    CHECK(valuation_p_divides_k(n, 2, 2) == digit_sum(n, 2));

  for (std::int64_t k : {4, 6, 9, 10}) {
    auto cvals = oracles::closed_form_c(300, k);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (k % p != 0) continue;
      for (std::uint64_t n = 0; n <= 300; ++n)
        CHECK(valuation_p_divides_k(n, k, p) ==
              oracles::strip_valuation(cvals[n], p));
    }
  }
}

TEST_CASE("zero-valuation digit test") {
  CHECK(is_coprime_digit_test(5, 3, 2));
  CHECK(sum_of_distinct_powers_of_4(5));
  CHECK_THROWS_AS(is_coprime_digit_test(5, 4, 2), std::invalid_argument);

  for (std::int64_t k : {1, 2, 3, 7})
    for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
      if (k % p == 0) continue;
      for (std::uint64_t n = 0; n <= 3000; ++n)
        CHECK(is_coprime_digit_test(n, k, p) ==
              (valuation_floor_sum(n, k, p) == 0));
    }
}

TEST_CASE("k = 3 digit-bound specialization") {
  CHECK(is_coprime_k3(0, 5));
  CHECK_THROWS_AS(is_coprime_k3(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(is_coprime_k3(4, 9), std::invalid_argument);

  for (std::uint32_t p : {2u, 5u, 7u, 11u, 13u})
    for (std::uint64_t n = 0; n <= 100'000; ++n)
      CHECK(is_coprime_k3(n, p) == is_coprime_digit_test(n, 3, p));

  // p = 2 reduces to sums of distinct powers of 4
  for (std::uint64_t n = 0; n <= 10'000; ++n)
    CHECK(is_coprime_k3(n, 2) == sum_of_distinct_powers_of_4(n));
}

TEST_CASE("p = 1 mod k specialization") {
  CHECK(is_coprime_p1modk(0, 4, 13));
  CHECK_THROWS_AS(is_coprime_p1modk(5, 4, 7), std::invalid_argument);

  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u,
                            31u, 37u}) {
      if (k % p == 0 || p % k != 1) continue;
      for (std::uint64_t n = 0; n <= 10'000; ++n)
        CHECK(is_coprime_p1modk(n, k, p) == is_coprime_digit_test(n, k, p));
    }

  // odd p: C_n coprime to p iff all base-p digits are below p/2
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::uint64_t n = 0; n <= 2000; ++n)
      CHECK(is_coprime_p1modk(n, 2, p) ==
            (binomial_valuation(2 * n, n, p) == 0));
}

TEST_CASE("valuation bounds sandwich") {
  for (std::int64_t k : {3, 5, 7})
    for (std::uint32_t p : {2u, 3u, 5u, 11u}) {
      if (k % p == 0) continue;
      for (std::uint64_t n = 0; n <= 2000; ++n) {
        auto [v1, v2] = valuation_bounds(n, k, p);
        std::uint64_t v = valuation_floor_sum(n, k, p);
        CHECK(v1 <= v);
        CHECK(v <= v2);
      }
    }
}

TEST_CASE("brute force oracle") {
  CHECK(valuation_bruteforce(0, 5, 3) == 0);
  CHECK(valuation_bruteforce(2, 3, 2) == 1);  // c(2,3) = 18
  for (std::uint64_t n = 0; n <= 200; ++n)
    CHECK(valuation_bruteforce(n, 2, 2) == digit_sum(n, 2));
  CHECK_THROWS_AS(valuation_bruteforce(100, 3, 2, 50), BudgetExceeded);
  CHECK_THROWS_AS(valuation_of(Int(0), 3), std::domain_error);
}
