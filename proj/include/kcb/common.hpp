#ifndef KCB_COMMON_HPP
#define KCB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace kcb {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an enumeration or big-integer computation exceeds its
// configured budget. Maps to exit code 4 in the CLI.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic primality for word-sized inputs. Trial division is fine at
// the sizes validated here (bases and primes fit comfortably in 64 bits).
bool is_prime(std::uint64_t n);

inline void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p = " +
                                std::to_string(p) + " is not prime");
}

}  // namespace kcb

#endif
