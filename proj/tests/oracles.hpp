// Brute-force oracles for the unit tests. Everything here recomputes its
// answer from first principles (repeated division, floor sums, naive
// scans) so the tests stay independent of the library code paths they
// check.
#ifndef KCB_TESTS_ORACLES_HPP
#define KCB_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include <doctest.h>

#include "kcb/common.hpp"

namespace oracles {

// nu_p of an exact integer by repeated division.
inline std::uint64_t strip_valuation(kcb::Int v, std::uint32_t p) {
  std::uint64_t e = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++e;
  }
  return e;
}

// nu_p(n!) as the floor sum over powers of p.
inline std::uint64_t legendre_floor_sum(std::uint64_t n, std::uint32_t p) {
  std::uint64_t total = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) {
    total += n / pw;
    if (pw > n / p) break;  // next power would overflow past n anyway
  }
  return total;
}

// c(n,k) built incrementally from the closed form, one exact division by
// n! per index. Returns c(0,k)..c(n_max,k).
inline std::vector<kcb::Int> closed_form_c(std::uint64_t n_max,
                                           std::int64_t k) {
  std::vector<kcb::Int> out;
  kcb::Int num = 1, fact = 1;
  out.push_back(1);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    num *= k;
    if (n >= 2) num *= kcb::Int(1 + k * static_cast<std::int64_t>(n - 1));
    fact *= static_cast<unsigned long>(n);
    kcb::Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                fact.get_mpz_t());
    REQUIRE(r == 0);
    out.push_back(q);
  }
  return out;
}

inline kcb::Int central_binomial(std::uint64_t n) {
  kcb::Int v;
  mpz_bin_uiui(v.get_mpz_t(), 2 * n, n);
  return v;
}

inline bool digits_bounded(std::uint64_t n, std::uint32_t base,
                           std::uint32_t bound) {
  for (; n > 0; n /= base)
    if (n % base > bound) return false;
  return true;
}

}  // namespace oracles

#endif
