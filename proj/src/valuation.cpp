#include "kcb/valuation.hpp"

#include "kcb/core_arith.hpp"
#include "kcb/kcentral.hpp"
#include "kcb/padic_inverse.hpp"

namespace kcb {

const char* to_string(ValuationMethod m) {
  switch (m) {
    case ValuationMethod::floor_sum: return "floor_sum";
    case ValuationMethod::carry_count: return "carry_count";
    case ValuationMethod::p_divides_k: return "p_divides_k";
    case ValuationMethod::brute_force: return "brute_force";
  }
  return "?";
}

static void require_coprime_case(std::int64_t k, std::uint32_t p,
                                 const char* who) {
  require_prime(p, who);
  if (k < 1)
    throw std::invalid_argument(std::string(who) + ": k must be >= 1");
  if (k % p == 0)
    throw std::invalid_argument(std::string(who) +
                                ": p divides k, use valuation_p_divides_k");
}

std::uint64_t valuation_floor_sum(std::uint64_t n, std::int64_t k,
                                  std::uint32_t p) {
  require_coprime_case(k, p, "valuation_floor_sum");
  if (n == 0) return 0;
  Int cutoff = Int(static_cast<long>(k)) * Int(static_cast<unsigned long>(n - 1)) + 1;
  Int nn(static_cast<unsigned long>(n));
  std::uint64_t total = 0;
  Int palpha = 1;
  for (std::uint32_t alpha = 1;; ++alpha) {
    palpha *= p;
    if (palpha > cutoff) break;
    Int inv = inverse_mod(k, p, alpha);
    Int term = (nn + inv - 1) / palpha - nn / palpha;
    if (term != 0 && term != 1)
      throw std::logic_error("valuation_floor_sum: summand outside {0,1}");
    total += term.get_ui();
  }
  return total;
}

namespace {

// Digit sums a_m + b_m for m = 0..L-1, where L is the number of moduli
// p^alpha <= k(n-1)+1 considered by the floor sum. Carry chains can run
// above the top digit of n (only when p < k, where a shifted inverse digit
// may equal p-1), so the range must match the floor-sum truncation; it
// always covers the digits of n because k(n-1)+1 >= n.
std::vector<std::uint32_t> digit_pair_sums(std::uint64_t n, std::int64_t k,
                                           std::uint32_t p) {
  std::vector<std::uint32_t> sums;
  if (n == 0) return sums;
  Int cutoff =
      Int(static_cast<long>(k)) * Int(static_cast<unsigned long>(n - 1)) + 1;
  std::size_t len = 0;
  for (Int palpha = p; palpha <= cutoff; palpha *= p) ++len;
  if (len == 0) return sums;
  DigitVector a = base_digits(n, p);
  PAdicExpansion b = inverse_digits(k, p, len);
  sums.resize(len);
  for (std::size_t m = 0; m < len; ++m)
    sums[m] = (m < a.digits.size() ? a.digits[m] : 0) + b.digits[m];
  return sums;
}

}  // namespace

ValuationReport valuation_carry_count(std::uint64_t n, std::int64_t k,
                                      std::uint32_t p) {
  require_coprime_case(k, p, "valuation_carry_count");
  ValuationReport rep;
  rep.n = n;
  rep.k = k;
  rep.p = p;
  rep.method = ValuationMethod::carry_count;

  auto sums = digit_pair_sums(n, k, p);
  // Index m is counted iff a_m + b_m >= p, or a chain of digit sums equal
  // to p-1 below it terminates in one >= p. Unrolled as a carry recurrence
  // from the low digit.
  bool chain = false;
  for (std::size_t m = 0; m < sums.size(); ++m) {
    if (sums[m] >= p)
      chain = true;
    else if (sums[m] != p - 1)
      chain = false;
    if (chain) rep.witnesses.push_back(static_cast<std::uint32_t>(m));
    if (sums[m] >= p)
      ++rep.v1;
    if (sums[m] >= p - 1)
      ++rep.v2;
  }
  rep.value = rep.witnesses.size();
  return rep;
}

std::uint64_t valuation_p_divides_k(std::uint64_t n, std::int64_t k,
                                    std::uint32_t p) {
  require_prime(p, "valuation_p_divides_k");
  if (k < 1 || k % p != 0)
    throw std::invalid_argument("valuation_p_divides_k: p must divide k");
  std::uint64_t vk = integer_valuation(static_cast<std::uint64_t>(k), p);
  return vk * n - factorial_valuation(n, p);
}

bool is_coprime_digit_test(std::uint64_t n, std::int64_t k, std::uint32_t p) {
  require_coprime_case(k, p, "is_coprime_digit_test");
  for (std::uint32_t s : digit_pair_sums(n, k, p))
    if (s >= p) return false;
  return true;
}

bool is_coprime_k3(std::uint64_t n, std::uint32_t p) {
  require_prime(p, "is_coprime_k3");
  if (p == 3) throw std::invalid_argument("is_coprime_k3: p must differ from 3");
  bool p_is_1_mod_3 = (p % 3 == 1);
  DigitVector a = base_digits(n, p);
  for (std::size_t j = 0; j < a.digits.size(); ++j) {
    std::uint64_t bound3 = (j % 2 == 1 || p_is_1_mod_3)
                               ? p          // a_j < p/3  <=>  3 a_j < p
                               : 2ull * p;  // a_j < 2p/3 <=> 3 a_j < 2p
    if (3ull * a.digits[j] >= bound3) return false;
  }
  return true;
}

bool is_coprime_p1modk(std::uint64_t n, std::int64_t k, std::uint32_t p) {
  require_coprime_case(k, p, "is_coprime_p1modk");
  if (p % static_cast<std::uint32_t>(k) != 1)
    throw std::invalid_argument("is_coprime_p1modk: p must be 1 mod k");
  DigitVector a = base_digits(n, p);
  for (std::uint32_t d : a.digits)
    if (static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(k) >= p)
      return false;
  return true;
}

std::pair<std::uint64_t, std::uint64_t> valuation_bounds(std::uint64_t n,
                                                         std::int64_t k,
                                                         std::uint32_t p) {
  require_coprime_case(k, p, "valuation_bounds");
  std::uint64_t v1 = 0, v2 = 0;
  for (std::uint32_t s : digit_pair_sums(n, k, p)) {
    if (s >= p) ++v1;
    if (s >= p - 1) ++v2;
  }
  return {v1, v2};
}

std::uint64_t valuation_of(const Int& value, std::uint32_t p) {
  require_prime(p, "valuation_of");
  if (value == 0)
    throw std::domain_error("valuation_of: nu_p(0) is infinite");
  Int reduced;
  Int pp(static_cast<unsigned long>(p));
  return mpz_remove(reduced.get_mpz_t(), value.get_mpz_t(), pp.get_mpz_t());
}

std::uint64_t valuation_bruteforce(std::uint64_t n, std::int64_t k,
                                   std::uint32_t p, std::uint64_t n_budget) {
  require_prime(p, "valuation_bruteforce");
  if (n > n_budget)
    throw BudgetExceeded("valuation_bruteforce: n exceeds budget");
  return valuation_of(kcentral_c(n, k), p);
}

}  // namespace kcb
