// Command-line front end: exact k-central binomial coefficients, their
// p-adic valuations, p-adic inverse digits, q-analogue polynomials and
// digit-constrained searches. JSON on stdout by default, CSV with
// --format csv; diagnostics on stderr.
//
// Exit codes: 0 success, 2 invalid input, 3 cross-check mismatch,
// 4 budget exceeded.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcb/core_arith.hpp"
#include "kcb/kcentral.hpp"
#include "kcb/padic_inverse.hpp"
#include "kcb/qanalogue.hpp"
#include "kcb/search.hpp"
#include "kcb/valuation.hpp"
#include "kcb/verify_suite.hpp"

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

struct Output {
  std::string format = "json";
  bool no_timing = false;
  Clock::time_point start = Clock::now();

  void emit(json record) {
    if (!no_timing) {
      record["timing_ms"] =
          std::chrono::duration<double, std::milli>(Clock::now() - start)
              .count();
    }
    if (format == "csv") {
      emit_csv(record);
    } else {
      std::cout << record.dump(2) << "\n";
    }
  }

  // Flat records become a header and one row; list-valued fields are
  // joined with ';'.
  void emit_csv(const json& record) {
    std::string header, row;
    for (auto& [key, value] : record.items()) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += key;
      if (value.is_array()) {
        std::string cell;
        for (auto& v : value) {
          if (!cell.empty()) cell += ';';
          cell += v.is_string() ? v.get<std::string>() : v.dump();
        }
        row += '"' + cell + '"';
      } else if (value.is_string()) {
        row += value.get<std::string>();
      } else {
        row += value.dump();
      }
    }
    std::cout << header << "\n" << row << "\n";
  }
};

json poly_coeffs(const kcb::QPolynomial& p) {
  json arr = json::array();
  for (const kcb::Int& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

json factor_list(const std::vector<kcb::QFactor>& fs) {
  json arr = json::array();
  for (const auto& f : fs)
    arr.push_back(json{{"q_exp", f.q_exp}, {"t_exp", f.t_exp}});
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for k-central binomial coefficients"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-timing", out.no_timing, "omit the timing field");

  // ---- c ----
  auto* cmd_c = app.add_subcommand("c", "compute c(n,k)");
  std::uint64_t n = 0, j = 1, n_max = 0, limit = 10, digits = 32;
  std::int64_t k = 2;
  std::uint32_t p = 2, q = 3, A = 0, B = 0;
  bool sequence = false;
  cmd_c->add_option("--n", n, "index")->required();
  cmd_c->add_option("--k", k, "parameter")->required();
  cmd_c->add_flag("--sequence", sequence, "print c(0,k)..c(n,k)");

  // ---- tilde ----
  auto* cmd_tilde = app.add_subcommand("tilde", "numerator of c(n,k)/k^n");
  cmd_tilde->add_option("--n", n, "index")->required();
  cmd_tilde->add_option("--k", k, "parameter")->required();

  // ---- valuation ----
  auto* cmd_val = app.add_subcommand("valuation", "nu_p(c(n,k))");
  std::string method = "auto";
  bool all_methods = false;
  cmd_val->add_option("--n", n, "index")->required();
  cmd_val->add_option("--k", k, "parameter")->required();
  cmd_val->add_option("--p", p, "prime")->required();
  cmd_val->add_option("--method", method, "computation method")
      ->check(CLI::IsMember(
          {"auto", "floor_sum", "carry_count", "p_divides_k", "brute_force"}));
  cmd_val->add_flag("--all-methods", all_methods,
                    "run every applicable method and cross-check");

  // ---- inverse ----
  auto* cmd_inv = app.add_subcommand("inverse", "p-adic inverse digits of k");
  cmd_inv->add_option("--k", k, "integer to invert")->required();
  cmd_inv->add_option("--p", p, "prime")->required();
  cmd_inv->add_option("--digits", digits, "number of digits");

  // ---- qpoly ----
  auto* cmd_q = app.add_subcommand("qpoly", "q-analogue polynomials");
  std::string mode = "F";
  cmd_q->add_option("--mode", mode, "F, G or H")
      ->check(CLI::IsMember({"F", "G", "H"}));
  cmd_q->add_option("--n", n, "index")->required();
  cmd_q->add_option("--k", k, "parameter")->required();
  cmd_q->add_option("--j", j, "exponent in t = q^j (H mode)");

  // ---- search ----
  auto* cmd_s = app.add_subcommand("search", "digit-constrained searches");
  std::string smode = "coprime";
  std::vector<std::uint32_t> prime_set{3, 5, 7};
  unsigned jobs = 1;
  std::uint64_t trial_bound = 100'000, max_candidates = 10'000'000;
  cmd_s->add_option("--mode", smode, "digits, coprime or squarefree")
      ->check(CLI::IsMember({"digits", "coprime", "squarefree"}));
  cmd_s->add_option("--k", k, "parameter (coprime/squarefree)");
  cmd_s->add_option("--primes", prime_set, "prime set (coprime mode)");
  cmd_s->add_option("--n-max", n_max, "scan bound (coprime/squarefree)");
  cmd_s->add_option("--p", p, "first base (digits mode)");
  cmd_s->add_option("--A", A, "digit bound in base p");
  cmd_s->add_option("--q", q, "second base (digits mode)");
  cmd_s->add_option("--B", B, "digit bound in base q");
  cmd_s->add_option("--limit", limit, "number of indices (digits mode)");
  cmd_s->add_option("--jobs", jobs, "parallel workers");
  cmd_s->add_option("--trial-bound", trial_bound,
                    "trial division bound (squarefree mode)");
  cmd_s->add_option("--max-candidates", max_candidates,
                    "candidate budget (digits mode)");

  // ---- verify ----
  auto* cmd_v = app.add_subcommand("verify", "run the verification suite");
  std::string suite = "paper";
  cmd_v->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*cmd_c) {
      json rec{{"command", "c"}, {"n", n}, {"k", k}};
      if (sequence) {
        json vals = json::array();
        for (const kcb::Int& v : kcb::c_values(n, k))
          vals.push_back(v.get_str());
        rec["values"] = vals;
      } else {
        rec["value"] = kcb::kcentral_c(n, k).get_str();
      }
      out.emit(rec);
    } else if (*cmd_tilde) {
      out.emit(json{{"command", "tilde"},
                    {"n", n},
                    {"k", k},
                    {"value", kcb::tilde_c(n, k).get_str()}});
    } else if (*cmd_val) {
      bool p_div_k = (k % p == 0);
      json rec{{"command", "valuation"}, {"n", n}, {"k", k}, {"p", p}};
      if (all_methods) {
        json methods;
        std::uint64_t first = 0;
        bool have_first = false, mismatch = false;
        auto note = [&](const char* name, std::uint64_t v) {
          methods[name] = v;
          if (have_first && v != first) mismatch = true;
          first = v;
          have_first = true;
        };
        if (p_div_k) {
          note("p_divides_k", kcb::valuation_p_divides_k(n, k, p));
        } else {
          note("floor_sum", kcb::valuation_floor_sum(n, k, p));
          auto rep = kcb::valuation_carry_count(n, k, p);
          note("carry_count", rep.value);
          rec["witnesses"] = rep.witnesses;
          rec["bounds"] = json{{"v1", rep.v1}, {"v2", rep.v2}};
        }
        note("brute_force", kcb::valuation_bruteforce(n, k, p));
        rec["methods"] = methods;
        rec["agree"] = !mismatch;
        out.emit(rec);
        if (mismatch) {
          std::cerr << "valuation: methods disagree\n";
          return kExitMismatch;
        }
      } else {
        std::string chosen = method;
        if (chosen == "auto") chosen = p_div_k ? "p_divides_k" : "carry_count";
        std::uint64_t value = 0;
        if (chosen == "floor_sum") {
          value = kcb::valuation_floor_sum(n, k, p);
        } else if (chosen == "carry_count") {
          auto rep = kcb::valuation_carry_count(n, k, p);
          value = rep.value;
          rec["witnesses"] = rep.witnesses;
          rec["bounds"] = json{{"v1", rep.v1}, {"v2", rep.v2}};
        } else if (chosen == "p_divides_k") {
          value = kcb::valuation_p_divides_k(n, k, p);
        } else {
          value = kcb::valuation_bruteforce(n, k, p);
        }
        rec["method"] = chosen;
        rec["value"] = value;
        out.emit(rec);
      }
    } else if (*cmd_inv) {
      kcb::PAdicExpansion e =
          kcb::inverse_digits(k, p, static_cast<std::size_t>(digits));
      out.emit(json{{"command", "inverse"},
                    {"k", k},
                    {"p", p},
                    {"digits", e.digits},
                    {"period", e.period}});
    } else if (*cmd_q) {
      json rec{{"command", "qpoly"}, {"mode", mode}, {"n", n}, {"k", k}};
      if (mode == "F") {
        kcb::QPolynomial f = kcb::q_central(n, k);
        rec["coefficients"] = poly_coeffs(f);
        rec["value_at_1"] = f.eval_one().get_str();
      } else if (mode == "G") {
        kcb::QRationalFactored g = kcb::q_central_bivariate(n, k);
        rec["numerator_factors"] = factor_list(g.numerator);
        rec["denominator_factors"] = factor_list(g.denominator);
      } else {
        rec["j"] = j;
        kcb::HResult h = kcb::q_central_substituted(n, k, j);
        rec["numerator_factors"] = factor_list(h.form.numerator);
        rec["denominator_factors"] = factor_list(h.form.denominator);
        rec["is_polynomial"] = h.is_polynomial;
        if (h.quotient) rec["coefficients"] = poly_coeffs(*h.quotient);
      }
      out.emit(rec);
    } else if (*cmd_s) {
      json rec{{"command", "search"}, {"mode", smode}};
      if (smode == "digits") {
        auto hits =
            kcb::enumerate_digit_bounded(p, A, q, B, limit, max_candidates);
        rec["p"] = p;
        rec["A"] = A;
        rec["q"] = q;
        rec["B"] = B;
        rec["indices"] = hits;
        // independent re-verification in both bases
        for (std::uint64_t h : hits)
          for (auto [base, bound] : {std::pair{p, A}, std::pair{q, B}})
            for (std::uint32_t dig : kcb::base_digits(h, base).digits)
              if (dig > bound) {
                std::cerr << "search: digit re-verification failed\n";
                return kExitMismatch;
              }
      } else if (smode == "coprime") {
        rec["k"] = k;
        rec["primes"] = prime_set;
        rec["n_max"] = n_max;
        rec["indices"] =
            kcb::search_zero_valuation(k, prime_set, n_max, jobs);
      } else {
        rec["k"] = k;
        rec["n_max"] = n_max;
        json table = json::array();
        std::uint64_t largest_squarefree = 0;
        for (const auto& [idx, st] :
             kcb::scan_tilde_squarefree(k, n_max, trial_bound, jobs)) {
          json row{{"n", idx}, {"verdict", kcb::to_string(st.verdict)}};
          if (st.witness) row["witness"] = st.witness->get_str();
          if (st.residual) row["residual"] = st.residual->get_str();
          if (st.verdict == kcb::SquarefreeVerdict::squarefree)
            largest_squarefree = idx;
          table.push_back(row);
        }
        rec["table"] = table;
        rec["largest_squarefree_n"] = largest_squarefree;
      }
      out.emit(rec);
    } else if (*cmd_v) {
      auto results = kcb::run_paper_suite(&std::cerr);
      json rec{{"command", "verify"}, {"suite", suite}};
      json list = json::array();
      for (const auto& r : results)
        list.push_back(json{{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"warning_only", r.warning_only},
                            {"detail", r.detail},
                            {"seconds", r.seconds}});
      rec["criteria"] = list;
      bool ok = kcb::suite_passed(results);
      rec["pass"] = ok;
      out.emit(rec);
      if (!ok) return kExitMismatch;
    }
  } catch (const kcb::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}
