#include "kcb/kcentral.hpp"

namespace kcb {

static void require_k(std::int64_t k, const char* who) {
  if (k < 1)
    throw std::invalid_argument(std::string(who) + ": k must be >= 1");
}

Int kcentral_c(std::uint64_t n, std::int64_t k) {
  require_k(k, "kcentral_c");
  Int num;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(n));
  for (std::uint64_t m = 1; m < n; ++m)
    num *= Int(1 + k * static_cast<std::int64_t>(m));
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
              fact.get_mpz_t());
  if (r != 0)
    throw std::logic_error("kcentral_c: k^n * prod(1+km) not divisible by n!");
  return q;
}

CSequence::CSequence(std::int64_t k) : k_(k) {
  require_k(k, "CSequence");
}

Int CSequence::next() {
  Int out = current_;
  // c(n+1,k) = k(1+kn)/(n+1) c(n,k)
  Int num = current_ * k_;
  num *= Int(1 + k_ * static_cast<std::int64_t>(index_));
  Int q, r;
  Int den(static_cast<unsigned long>(index_ + 1));
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0)
    throw std::logic_error("CSequence: recurrence step not exact");
  current_ = q;
  ++index_;
  return out;
}

std::vector<Int> c_values(std::uint64_t n_max, std::int64_t k) {
  CSequence seq(k);
  std::vector<Int> out;
  out.reserve(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) out.push_back(seq.next());
  return out;
}

Int tilde_c(std::uint64_t n, std::int64_t k) {
  require_k(k, "tilde_c");
  Int kn;
  mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(n));
  Rat f(kcentral_c(n, k), kn);
  f.canonicalize();
  return f.get_num();
}

namespace {

// Sum of prod_j c(i_j,k) over the remaining `slots` indices summing to
// `remaining`, given the table of c values.
Int composition_sum(const std::vector<Int>& cvals, std::uint64_t remaining,
                    std::uint64_t slots, const Int& partial) {
  if (slots == 1) return partial * cvals[remaining];
  Int total = 0;
  for (std::uint64_t i = 0; i <= remaining; ++i)
    total += composition_sum(cvals, remaining - i, slots - 1,
                             Int(partial * cvals[i]));
  return total;
}

}  // namespace

CauchyCheck verify_cauchy_identity(std::uint64_t m, std::int64_t k,
                                   std::uint64_t budget) {
  require_k(k, "verify_cauchy_identity");
  // number of weak compositions of m into k parts: C(m+k-1, k-1)
  Int count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(m + k - 1),
               static_cast<unsigned long>(k - 1));
  if (count > Int(static_cast<unsigned long>(budget)))
    throw BudgetExceeded("verify_cauchy_identity: composition count " +
                         count.get_str() + " exceeds budget");
  auto cvals = c_values(m, k);
  CauchyCheck out;
  out.multisum = composition_sum(cvals, m, static_cast<std::uint64_t>(k), 1);
  mpz_ui_pow_ui(out.power.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(2 * m));
  out.ok = (out.multisum == out.power);
  return out;
}

bool verify_k_divisibility(std::uint64_t n_max, std::int64_t k) {
  require_k(k, "verify_k_divisibility");
  CSequence seq(k);
  seq.next();  // skip n = 0
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    Int v = seq.next();
    if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(k)))
      return false;
  }
  return true;
}

}  // namespace kcb
