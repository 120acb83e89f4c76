#include <doctest.h>

#include <numeric>

#include "kcb/kcentral.hpp"
#include "kcb/search.hpp"
#include "kcb/valuation.hpp"
#include "oracles.hpp"

using namespace kcb;

TEST_CASE("digit-bounded enumeration") {
  CHECK(enumerate_digit_bounded(2, 1, 3, 2, 5) ==
        std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(enumerate_digit_bounded(2, 0, 3, 0, 5).empty());
  CHECK_THROWS_AS(enumerate_digit_bounded(2, 2, 3, 1, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_digit_bounded(2, 1, 2, 1, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_digit_bounded(3, 1, 2, 0, 5, 1000),
                  BudgetExceeded);

  SUBCASE("filter is its own oracle") {
    auto hits = enumerate_digit_bounded(5, 2, 7, 3, 100);
    REQUIRE(hits.size() == 100);
    for (std::uint64_t n : hits) {
      CHECK(oracles::digits_bounded(n, 5, 2));
      CHECK(oracles::digits_bounded(n, 7, 3));
    }
    // cross-check with a naive ascending scan
    std::vector<std::uint64_t> naive;
    for (std::uint64_t n = 1; naive.size() < 100; ++n)
      if (oracles::digits_bounded(n, 5, 2) && oracles::digits_bounded(n, 7, 3))
        naive.push_back(n);
    CHECK(hits == naive);
  }
}

TEST_CASE("zero-valuation search") {
  CHECK_THROWS_AS(search_zero_valuation(6, {3}, 100), std::invalid_argument);

  SUBCASE("central binomials coprime to 105") {
    auto hits = search_zero_valuation(2, {3, 5, 7}, 10'000);
    REQUIRE(hits.size() >= 3);
    CHECK(hits[0] == 1);
    CHECK(hits[1] == 10);
    CHECK(hits[2] == 756);
    // brute-force gcd check over the first stretch
    std::size_t idx = 0;
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      Int g = gcd(oracles::central_binomial(n), Int(105));
      bool coprime = (g == 1);
      bool listed = idx < hits.size() && hits[idx] == n;
      CHECK(coprime == listed);
      if (listed) ++idx;
    }
  }
  SUBCASE("agrees with the floor-sum filter") {
    auto hits = search_zero_valuation(3, {5}, 2000);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 1; n <= 2000; ++n)
      if (valuation_floor_sum(n, 3, 5) == 0) expected.push_back(n);
    CHECK(hits == expected);
  }
  SUBCASE("k = 3, p = 2 gives sums of distinct powers of 4") {
    std::uint64_t n_max = 1ull << 14;  // 4^7
    auto hits = search_zero_valuation(3, {2}, n_max);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 1; n <= n_max; ++n)
      if (oracles::digits_bounded(n, 4, 1)) expected.push_back(n);
    CHECK(hits == expected);
  }
}

TEST_CASE("squarefree classification") {
  auto st12 = squarefree_status(Int(12));
  CHECK(st12.verdict == SquarefreeVerdict::not_squarefree);
  REQUIRE(st12.witness.has_value());
  CHECK(*st12.witness == 2);

  CHECK(squarefree_status(Int(105)).verdict == SquarefreeVerdict::squarefree);
  CHECK(squarefree_status(Int(1)).verdict == SquarefreeVerdict::squarefree);
  CHECK_THROWS_AS(squarefree_status(Int(0)), std::invalid_argument);

  SUBCASE("square of a prime beyond the trial bound") {
    Int p("1000003");
    auto st = squarefree_status(p * p, 1000);
    CHECK(st.verdict == SquarefreeVerdict::not_squarefree);
    REQUIRE(st.witness.has_value());
    CHECK(*st.witness == p);
  }
  SUBCASE("semiprime beyond the trial bound stays unknown") {
    Int a("1000003"), b("1000033");
    auto st = squarefree_status(a * b, 1000);
    CHECK(st.verdict == SquarefreeVerdict::unknown);
    REQUIRE(st.residual.has_value());
    CHECK(*st.residual == a * b);
  }
  SUBCASE("prime residual is proven and accepted") {
    auto st = squarefree_status(Int("1000003"), 1000);
    CHECK(st.verdict == SquarefreeVerdict::squarefree);
  }
}

TEST_CASE("tilde squarefree scan") {
  CHECK(scan_tilde_squarefree(3, 0).empty());

  SUBCASE("k = 2 against Legendre-style factorization of the odd part") {
    auto table = scan_tilde_squarefree(2, 50);
    REQUIRE(table.size() == 50);
    for (const auto& [n, st] : table) {
      // every prime factor of C_{2n,n} is below 2n, so the scan decides
      CHECK(st.verdict != SquarefreeVerdict::unknown);
      bool squarefree = true;
      for (std::uint32_t p = 3; p <= 2 * n; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t e = 0;
        for (std::uint64_t pw = p; pw <= 2 * n; pw *= p) {
          e += 2 * n / pw - 2 * (n / pw);
          if (pw > 2 * n / p) break;
        }
        if (e >= 2) squarefree = false;
      }
      CHECK((st.verdict == SquarefreeVerdict::squarefree) == squarefree);
    }
  }
  SUBCASE("k = 5 small scan fully decided") {
    for (const auto& [n, st] : scan_tilde_squarefree(5, 20))
      CHECK(st.verdict != SquarefreeVerdict::unknown);
  }
}
