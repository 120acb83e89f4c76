#ifndef KCB_KCENTRAL_HPP
#define KCB_KCENTRAL_HPP

#include <cstdint>
#include <vector>

#include "kcb/common.hpp"

namespace kcb {

/// c(n,k) by the closed form k^n / n! * prod_{m=1}^{n-1} (1 + km).
/// The division by n! is asserted exact; a nonzero remainder would mean the
/// integrality theorem failed and is reported as a logic error.
Int kcentral_c(std::uint64_t n, std::int64_t k);

/// Incremental producer of c(0,k), c(1,k), ... via the recurrence
/// c(n+1,k) = k(1+kn)/(n+1) * c(n,k), with exact division checked at each
/// step. One instance must be pulled from a single thread at a time.
class CSequence {
public:
  explicit CSequence(std::int64_t k);

  /// Returns c(index, k) and advances.
  Int next();

  std::uint64_t index() const { return index_; }

private:
  std::int64_t k_;
  std::uint64_t index_ = 0;
  Int current_ = 1;
};

/// c(0,k) .. c(n_max,k) as a vector.
std::vector<Int> c_values(std::uint64_t n_max, std::int64_t k);

/// Numerator of the reduced fraction c(n,k) / k^n.
Int tilde_c(std::uint64_t n, std::int64_t k);

struct CauchyCheck {
  bool ok = false;
  Int multisum;
  Int power;  // k^{2m}
};

/// Sums prod_j c(i_j,k) over all k-tuples of nonnegative integers with
/// i_1 + ... + i_k = m and compares against k^{2m}. Refuses when the number
/// of compositions exceeds the budget.
CauchyCheck verify_cauchy_identity(std::uint64_t m, std::int64_t k,
                                   std::uint64_t budget = 10'000'000);

/// True iff k divides c(n,k) for all 1 <= n <= n_max.
bool verify_k_divisibility(std::uint64_t n_max, std::int64_t k);

}  // namespace kcb

#endif
