#include "kcb/core_arith.hpp"

namespace kcb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Int DigitVector::value() const {
  Int v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    v *= base;
    v += *it;
  }
  return v;
}

static void require_base(std::uint32_t base, const char* who) {
  if (base < 2)
    throw std::invalid_argument(std::string(who) + ": base must be >= 2");
}

DigitVector base_digits(std::uint64_t n, std::uint32_t base) {
  require_base(base, "base_digits");
  DigitVector dv;
  dv.base = base;
  while (n > 0) {
    dv.digits.push_back(static_cast<std::uint32_t>(n % base));
    n /= base;
  }
  return dv;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint32_t base) {
  require_base(base, "digit_sum");
  std::uint64_t s = 0;
  while (n > 0) {
    s += n % base;
    n /= base;
  }
  return s;
}

std::uint64_t factorial_valuation(std::uint64_t n, std::uint32_t p) {
  require_prime(p, "factorial_valuation");
  return (n - digit_sum(n, p)) / (p - 1);
}

std::uint64_t integer_valuation(std::uint64_t m, std::uint32_t p) {
  require_prime(p, "integer_valuation");
  if (m == 0)
    throw std::domain_error("integer_valuation: nu_p(0) is infinite");
  std::uint64_t e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t r,
                                 std::uint32_t p) {
  require_prime(p, "binomial_valuation");
  if (r > n)
    throw std::invalid_argument("binomial_valuation: r > n");
  return (digit_sum(r, p) + digit_sum(n - r, p) - digit_sum(n, p)) / (p - 1);
}

}  // namespace kcb
