#ifndef KCB_PADIC_INVERSE_HPP
#define KCB_PADIC_INVERSE_HPP

#include <cstdint>
#include <vector>

#include "kcb/common.hpp"

namespace kcb {

/// Shifted digit expansion of the p-adic inverse of k, written as
/// 1 + sum_j b_j p^j. The digits are purely periodic; `period` is the
/// minimal period detected from the stream (it always divides the
/// multiplicative order of p mod k).
struct PAdicExpansion {
  std::uint32_t p = 2;
  std::int64_t k = 1;
  std::vector<std::uint32_t> digits;  // b_0, b_1, ...
  std::uint64_t period = 1;
};

/// The representative of k^{-1} mod p^alpha in [1, p^alpha - 1].
Int inverse_mod(std::int64_t k, std::uint32_t p, std::uint32_t alpha);

/// First `count` shifted digits b_j, obtained by lifting the inverse mod
/// successive powers of p. k = 1 gives the all-zero expansion with period 1.
PAdicExpansion inverse_digits(std::int64_t k, std::uint32_t p,
                              std::size_t count);

/// Multiplicative order of p modulo k; 1 for k = 1 by convention.
std::uint64_t digit_period(std::int64_t k, std::uint32_t p);

}  // namespace kcb

#endif
