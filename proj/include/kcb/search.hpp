#ifndef KCB_SEARCH_HPP
#define KCB_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kcb/common.hpp"

namespace kcb {

enum class SquarefreeVerdict { squarefree, not_squarefree, unknown };

const char* to_string(SquarefreeVerdict v);

struct SquarefreeStatus {
  SquarefreeVerdict verdict = SquarefreeVerdict::unknown;
  /// A prime whose square divides the input, when one was found.
  std::optional<Int> witness;
  /// Unfactored cofactor left after trial division, when the verdict could
  /// not be decided.
  std::optional<Int> residual;
};

struct SearchBudget {
  std::uint64_t max_candidates = 10'000'000;
  std::uint64_t trial_division_bound = 100'000;
};

/// First `limit` indices n >= 1, ascending, whose base-p digits are all
/// <= A and whose base-q digits are all <= B. Candidates are generated by
/// an odometer over A-bounded base-p digit strings and filtered in base q.
std::vector<std::uint64_t> enumerate_digit_bounded(
    std::uint32_t p, std::uint32_t A, std::uint32_t q, std::uint32_t B,
    std::size_t limit, std::uint64_t max_candidates = 10'000'000);

/// All n in [1, n_max] with nu_p(c(n,k)) = 0 for every prime in the set,
/// decided by the O(log n) digit test. Deterministic for any worker count.
std::vector<std::uint64_t> search_zero_valuation(
    std::int64_t k, const std::vector<std::uint32_t>& primes,
    std::uint64_t n_max, unsigned jobs = 1);

/// Trial division up to the bound, then a perfect-power check and a
/// deterministic primality test on the residual. Returns `unknown` rather
/// than guessing when the residual cannot be classified.
SquarefreeStatus squarefree_status(const Int& m,
                                   std::uint64_t trial_division_bound =
                                       100'000);

/// (n, status of tilde_c(n,k)) for n = 1..n_max.
std::vector<std::pair<std::uint64_t, SquarefreeStatus>> scan_tilde_squarefree(
    std::int64_t k, std::uint64_t n_max,
    std::uint64_t trial_division_bound = 100'000, unsigned jobs = 1);

/// Deterministic Miller-Rabin, valid for inputs below 3.3 * 10^24.
/// Returns nullopt above that range.
std::optional<bool> is_prime_checked(const Int& n);

}  // namespace kcb

#endif
