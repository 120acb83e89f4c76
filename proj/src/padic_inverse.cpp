#include "kcb/padic_inverse.hpp"

#include <algorithm>

namespace kcb {

static void require_coprime(std::int64_t k, std::uint32_t p, const char* who) {
  require_prime(p, who);
  if (k < 1)
    throw std::invalid_argument(std::string(who) + ": k must be >= 1");
  if (k % p == 0)
    throw std::invalid_argument(std::string(who) + ": p divides k");
}

Int inverse_mod(std::int64_t k, std::uint32_t p, std::uint32_t alpha) {
  require_coprime(k, p, "inverse_mod");
  if (alpha < 1)
    throw std::invalid_argument("inverse_mod: alpha must be >= 1");
  Int mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), p, alpha);
  Int inv, kk(static_cast<long>(k));
  if (!mpz_invert(inv.get_mpz_t(), kk.get_mpz_t(), mod.get_mpz_t()))
    throw std::logic_error("inverse_mod: not invertible");
  // mpz_invert returns a representative in [0, mod); 0 cannot occur.
  return inv;
}

std::uint64_t digit_period(std::int64_t k, std::uint32_t p) {
  if (k == 1) return 1;  // trivial group, documented convention
  require_coprime(k, p, "digit_period");
  std::uint64_t r = p % k;
  std::uint64_t acc = r % k;
  std::uint64_t ord = 1;
  while (acc != 1) {
    acc = acc * r % k;
    ++ord;
    if (ord > static_cast<std::uint64_t>(k))
      throw std::logic_error("digit_period: order not found");
  }
  return ord;
}

PAdicExpansion inverse_digits(std::int64_t k, std::uint32_t p,
                              std::size_t count) {
  require_coprime(k, p, "inverse_digits");
  if (count < 1)
    throw std::invalid_argument("inverse_digits: count must be >= 1");

  std::uint64_t predicted = digit_period(k, p);
  std::size_t window = std::max<std::size_t>(count, 5 * predicted);

  Int shifted = inverse_mod(k, p, static_cast<std::uint32_t>(window)) - 1;
  std::vector<std::uint32_t> digits;
  digits.reserve(window);
  for (std::size_t j = 0; j < window; ++j) {
    unsigned long d =
        mpz_fdiv_q_ui(shifted.get_mpz_t(), shifted.get_mpz_t(), p);
    digits.push_back(static_cast<std::uint32_t>(d));
  }

  // Trust the predicted period only after checking the stream against its
  // shift over four full periods; then take the smallest divisor that
  // already works as the reported period.
  auto matches_shift = [&](std::uint64_t s) {
    for (std::size_t j = 0; j + s < 5 * predicted && j + s < window; ++j)
      if (digits[j] != digits[j + s]) return false;
    return true;
  };
  if (!matches_shift(predicted))
    throw std::logic_error("inverse_digits: digits not periodic with the "
                           "multiplicative order of p mod k");
  std::uint64_t period = predicted;
  for (std::uint64_t s = 1; s < predicted; ++s)
    if (predicted % s == 0 && matches_shift(s)) {
      period = s;
      break;
    }

  PAdicExpansion out;
  out.p = p;
  out.k = k;
  out.digits.assign(digits.begin(), digits.begin() + count);
  out.period = period;
  return out;
}

}  // namespace kcb
