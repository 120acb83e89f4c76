#include "kcb/search.hpp"

#include <algorithm>
#include <thread>

#include "kcb/kcentral.hpp"
#include "kcb/valuation.hpp"

namespace kcb {

const char* to_string(SquarefreeVerdict v) {
  switch (v) {
    case SquarefreeVerdict::squarefree: return "squarefree";
    case SquarefreeVerdict::not_squarefree: return "not_squarefree";
    case SquarefreeVerdict::unknown: return "unknown";
  }
  return "?";
}

std::vector<std::uint64_t> enumerate_digit_bounded(
    std::uint32_t p, std::uint32_t A, std::uint32_t q, std::uint32_t B,
    std::size_t limit, std::uint64_t max_candidates) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw std::invalid_argument(
        "enumerate_digit_bounded: p and q must be distinct primes");
  if (A >= p || B >= q)
    throw std::invalid_argument(
        "enumerate_digit_bounded: digit bounds must be below their base");

  std::vector<std::uint64_t> out;
  if (limit == 0 || A == 0) return out;  // only n = 0 has all-zero digits

  auto q_digits_ok = [&](std::uint64_t n) {
    for (; n > 0; n /= q)
      if (n % q > B) return false;
    return true;
  };

  // Odometer over base-p digit strings with digits in [0, A]; enumerates
  // the admissible n in ascending order.
  std::vector<std::uint32_t> digits{0};
  std::uint64_t n = 0;
  for (std::uint64_t seen = 0; out.size() < limit; ++seen) {
    if (seen >= max_candidates)
      throw BudgetExceeded("enumerate_digit_bounded: candidate budget "
                           "exhausted");
    // increment
    std::size_t pos = 0;
    std::uint64_t pw = 1;
    while (pos < digits.size() && digits[pos] == A) {
      n -= static_cast<std::uint64_t>(A) * pw;
      digits[pos] = 0;
      pw *= p;
      ++pos;
    }
    if (pos == digits.size()) {
      digits.push_back(0);
      if (digits.size() > 40)
        throw BudgetExceeded("enumerate_digit_bounded: value range exceeded");
    }
    ++digits[pos];
    n += pw;
    if (q_digits_ok(n)) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> search_zero_valuation(
    std::int64_t k, const std::vector<std::uint32_t>& primes,
    std::uint64_t n_max, unsigned jobs) {
  if (k < 1)
    throw std::invalid_argument("search_zero_valuation: k must be >= 1");
  for (std::uint32_t p : primes) {
    require_prime(p, "search_zero_valuation");
    if (k % p == 0)
      throw std::invalid_argument("search_zero_valuation: p divides k");
  }
  if (jobs == 0) jobs = 1;

  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi,
                        std::vector<std::uint64_t>& hits) {
    for (std::uint64_t n = lo; n <= hi && n >= lo; ++n) {
      bool all_zero = true;
      for (std::uint32_t p : primes)
        if (!is_coprime_digit_test(n, k, p)) {
          all_zero = false;
          break;
        }
      if (all_zero) hits.push_back(n);
    }
  };

  if (n_max == 0) return {};
  if (jobs == 1) {
    std::vector<std::uint64_t> hits;
    scan_range(1, n_max, hits);
    return hits;
  }

  std::vector<std::vector<std::uint64_t>> parts(jobs);
  std::vector<std::thread> workers;
  std::uint64_t chunk = (n_max + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    std::uint64_t lo = 1 + w * chunk;
    std::uint64_t hi = std::min<std::uint64_t>(n_max, lo + chunk - 1);
    if (lo > n_max) break;
    workers.emplace_back(scan_range, lo, hi, std::ref(parts[w]));
  }
  for (auto& t : workers) t.join();
  std::vector<std::uint64_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::optional<bool> is_prime_checked(const Int& n) {
  // The first 13 primes are a deterministic Miller-Rabin base set below
  // 3317044064679887385961981.
  static const Int limit("3317044064679887385961981");
  if (n >= limit) return std::nullopt;
  if (n < 2) return false;
  static const unsigned long bases[] = {2,  3,  5,  7,  11, 13, 17,
                                        19, 23, 29, 31, 37, 41};
  for (unsigned long b : bases) {
    if (n == static_cast<long>(b)) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b))
      return false;
  }
  Int d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned long b : bases) {
    Int x, base(static_cast<long>(b));
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

SquarefreeStatus squarefree_status(const Int& m,
                                   std::uint64_t trial_division_bound) {
  if (m < 1)
    throw std::invalid_argument("squarefree_status: m must be >= 1");
  SquarefreeStatus st;
  Int rest = m;
  for (std::uint64_t d = 2; d <= trial_division_bound; d = (d == 2) ? 3 : d + 2) {
    Int dd(static_cast<unsigned long>(d));
    if (dd * dd > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d)))
      continue;
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                    static_cast<unsigned long>(d));
    if (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d))) {
      st.verdict = SquarefreeVerdict::not_squarefree;
      st.witness = dd;
      return st;
    }
  }
  if (rest == 1) {
    st.verdict = SquarefreeVerdict::squarefree;
    return st;
  }
  if (mpz_perfect_power_p(rest.get_mpz_t())) {
    st.verdict = SquarefreeVerdict::not_squarefree;
    for (unsigned long e = 2;; ++e) {
      Int root;
      if (mpz_root(root.get_mpz_t(), rest.get_mpz_t(), e)) {
        if (is_prime_checked(root).value_or(false)) st.witness = root;
        break;
      }
      if (e > 2 && mpz_sizeinbase(rest.get_mpz_t(), 2) < e) break;
    }
    st.residual = rest;
    return st;
  }
  auto prime = is_prime_checked(rest);
  if (prime.has_value() && *prime) {
    // residual is a proven prime; all stripped factors appeared once
    st.verdict = SquarefreeVerdict::squarefree;
    return st;
  }
  st.verdict = SquarefreeVerdict::unknown;
  st.residual = rest;
  return st;
}

std::vector<std::pair<std::uint64_t, SquarefreeStatus>> scan_tilde_squarefree(
    std::int64_t k, std::uint64_t n_max, std::uint64_t trial_division_bound,
    unsigned jobs) {
  if (jobs == 0) jobs = 1;
  std::vector<Int> tildes;
  tildes.reserve(n_max + 1);
  {
    CSequence seq(k);
    Int kn = 1;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      Rat f(seq.next(), kn);
      f.canonicalize();
      tildes.push_back(f.get_num());
      kn *= k;
    }
  }
  std::vector<std::pair<std::uint64_t, SquarefreeStatus>> out(n_max);
  auto classify = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t n = lo; n <= hi; ++n)
      out[n - 1] = {n, squarefree_status(tildes[n], trial_division_bound)};
  };
  if (n_max == 0) return out;
  if (jobs == 1) {
    classify(1, n_max);
    return out;
  }
  std::vector<std::thread> workers;
  std::uint64_t chunk = (n_max + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    std::uint64_t lo = 1 + w * chunk;
    if (lo > n_max) break;
    std::uint64_t hi = std::min<std::uint64_t>(n_max, lo + chunk - 1);
    workers.emplace_back(classify, lo, hi);
  }
  for (auto& t : workers) t.join();
  return out;
}

}  // namespace kcb
