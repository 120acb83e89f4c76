#ifndef KCB_VALUATION_HPP
#define KCB_VALUATION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "kcb/common.hpp"

namespace kcb {

enum class ValuationMethod { floor_sum, carry_count, p_divides_k, brute_force };

const char* to_string(ValuationMethod m);

/// One valuation computation together with its explaining data: the digit
/// indices counted by the carry criterion and the digit-count bounds
/// v1 <= value <= v2.
struct ValuationReport {
  std::uint64_t n = 0;
  std::int64_t k = 1;
  std::uint32_t p = 2;
  std::uint64_t value = 0;
  ValuationMethod method = ValuationMethod::carry_count;
  std::vector<std::uint32_t> witnesses;
  std::uint64_t v1 = 0;
  std::uint64_t v2 = 0;
};

/// nu_p(c(n,k)) as the truncated floor sum
///   sum_alpha floor((n + i_{p^alpha}(k) - 1)/p^alpha) - floor(n/p^alpha),
/// for p not dividing k. Summands vanish once p^alpha > k(n-1)+1, so the
/// sum has O(log n) terms.
std::uint64_t valuation_floor_sum(std::uint64_t n, std::int64_t k,
                                  std::uint32_t p);

/// nu_p(c(n,k)) as the number of digit indices m where a_m + b_m >= p
/// directly or through a chain of digit sums equal to p-1 that terminates
/// in one that is >= p. Returns the counted indices as witnesses.
ValuationReport valuation_carry_count(std::uint64_t n, std::int64_t k,
                                      std::uint32_t p);

/// nu_p(c(n,k)) = nu_p(k) n - (n - s_p(n))/(p-1) for p dividing k.
std::uint64_t valuation_p_divides_k(std::uint64_t n, std::int64_t k,
                                    std::uint32_t p);

/// True iff every base-p digit a_j of n satisfies a_j + b_j < p, which is
/// equivalent to nu_p(c(n,k)) = 0 for p not dividing k.
bool is_coprime_digit_test(std::uint64_t n, std::int64_t k, std::uint32_t p);

/// Specialized zero-valuation test for k = 3: digit a_j must stay below
/// p/3 when j is odd or p = 3u+1, and below 2p/3 otherwise. Comparisons are
/// exact integer comparisons.
bool is_coprime_k3(std::uint64_t n, std::uint32_t p);

/// Specialized zero-valuation test for primes p = ku+1: every base-p digit
/// of n must be below p/k.
bool is_coprime_p1modk(std::uint64_t n, std::int64_t k, std::uint32_t p);

/// (v1, v2) with v1 = #{m : a_m + b_m >= p} and v2 = #{m : a_m + b_m >= p-1},
/// sandwiching nu_p(c(n,k)).
std::pair<std::uint64_t, std::uint64_t> valuation_bounds(std::uint64_t n,
                                                         std::int64_t k,
                                                         std::uint32_t p);

/// Oracle: computes c(n,k) exactly and strips factors of p. Works for any
/// prime p; refuses indices beyond the big-integer budget.
std::uint64_t valuation_bruteforce(std::uint64_t n, std::int64_t k,
                                   std::uint32_t p,
                                   std::uint64_t n_budget = 20'000);

/// Same oracle given an already computed c(n,k).
std::uint64_t valuation_of(const Int& value, std::uint32_t p);

}  // namespace kcb

#endif
