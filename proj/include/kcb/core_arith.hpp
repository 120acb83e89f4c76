#ifndef KCB_CORE_ARITH_HPP
#define KCB_CORE_ARITH_HPP

#include <cstdint>
#include <vector>

#include "kcb/common.hpp"

namespace kcb {

/// Base-p expansion of a nonnegative integer, least significant digit first.
/// Zero is represented by the empty digit list, so the top digit of a
/// nonzero number is always nonzero.
struct DigitVector {
  std::uint32_t base = 2;
  std::vector<std::uint32_t> digits;

  Int value() const;
};

DigitVector base_digits(std::uint64_t n, std::uint32_t base);

/// s_p(n): sum of the base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint32_t base);

/// nu_p(n!) = (n - s_p(n)) / (p - 1).
std::uint64_t factorial_valuation(std::uint64_t n, std::uint32_t p);

/// nu_p(m) for m >= 1 by repeated division. m = 0 is rejected (the
/// valuation would be infinite).
std::uint64_t integer_valuation(std::uint64_t m, std::uint32_t p);

/// nu_p(binom(n, r)) = (s_p(r) + s_p(n-r) - s_p(n)) / (p - 1).
std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t r,
                                 std::uint32_t p);

}  // namespace kcb

#endif
