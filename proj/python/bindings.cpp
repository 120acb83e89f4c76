// pybind11 surface for the exact-arithmetic core. Big integers cross the
// boundary as Python ints (via decimal strings, so nothing truncates).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kcb/core_arith.hpp"
#include "kcb/kcentral.hpp"
#include "kcb/padic_inverse.hpp"
#include "kcb/qanalogue.hpp"
#include "kcb/search.hpp"
#include "kcb/valuation.hpp"
#include "kcb/verify_suite.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const kcb::Int& v) {
  std::string s = v.get_str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

kcb::Int from_pyint(const py::object& obj) {
  return kcb::Int(py::str(obj).cast<std::string>());
}

py::list to_pyint_list(const std::vector<kcb::Int>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_pyint(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_kcentral, m) {
  m.doc() = "exact arithmetic for k-central binomial coefficients";

  py::register_exception<kcb::BudgetExceeded>(m, "BudgetExceeded",
                                              PyExc_RuntimeError);

  // core digit machinery
  m.def("base_digits", [](std::uint64_t n, std::uint32_t base) {
    return kcb::base_digits(n, base).digits;
  });
  m.def("digit_sum", &kcb::digit_sum);
  m.def("factorial_valuation", &kcb::factorial_valuation);
  m.def("integer_valuation", &kcb::integer_valuation);
  m.def("binomial_valuation", &kcb::binomial_valuation);

  // k-central coefficients
  m.def("c", [](std::uint64_t n, std::int64_t k) {
    return to_pyint(kcb::kcentral_c(n, k));
  });
  m.def("c_sequence", [](std::uint64_t n_max, std::int64_t k) {
    return to_pyint_list(kcb::c_values(n_max, k));
  });
  m.def("tilde_c", [](std::uint64_t n, std::int64_t k) {
    return to_pyint(kcb::tilde_c(n, k));
  });
  m.def("verify_cauchy_identity",
        [](std::uint64_t mm, std::int64_t k, std::uint64_t budget) {
          auto r = kcb::verify_cauchy_identity(mm, k, budget);
          return py::make_tuple(r.ok, to_pyint(r.multisum),
                                to_pyint(r.power));
        },
        py::arg("m"), py::arg("k"), py::arg("budget") = 10'000'000);
  m.def("verify_k_divisibility", &kcb::verify_k_divisibility);

  // p-adic inverse
  m.def("inverse_mod",
        [](std::int64_t k, std::uint32_t p, std::uint32_t alpha) {
          return to_pyint(kcb::inverse_mod(k, p, alpha));
        });
  m.def("inverse_digits",
        [](std::int64_t k, std::uint32_t p, std::size_t count) {
          auto e = kcb::inverse_digits(k, p, count);
          py::dict d;
          d["p"] = e.p;
          d["k"] = e.k;
          d["digits"] = e.digits;
          d["period"] = e.period;
          return d;
        });
  m.def("digit_period", &kcb::digit_period);

  // valuations
  m.def("valuation_floor_sum", &kcb::valuation_floor_sum);
  m.def("valuation_carry_count",
        [](std::uint64_t n, std::int64_t k, std::uint32_t p) {
          auto r = kcb::valuation_carry_count(n, k, p);
          py::dict d;
          d["value"] = r.value;
          d["witnesses"] = r.witnesses;
          d["v1"] = r.v1;
          d["v2"] = r.v2;
          return d;
        });
  m.def("valuation_p_divides_k", &kcb::valuation_p_divides_k);
  m.def("is_coprime_digit_test", &kcb::is_coprime_digit_test);
  m.def("is_coprime_k3", &kcb::is_coprime_k3);
  m.def("is_coprime_p1modk", &kcb::is_coprime_p1modk);
  m.def("valuation_bounds", &kcb::valuation_bounds);
  m.def("valuation_bruteforce", &kcb::valuation_bruteforce, py::arg("n"),
        py::arg("k"), py::arg("p"), py::arg("n_budget") = 20'000);

  // q-analogues
  m.def("q_bracket", [](std::uint64_t n) {
    std::vector<kcb::Int> cs = kcb::q_bracket(n).coeffs();
    return to_pyint_list(cs);
  });
  m.def("F", [](std::uint64_t n, std::int64_t k) {
    return to_pyint_list(kcb::q_central(n, k).coeffs());
  });
  m.def("H", [](std::uint64_t n, std::int64_t k, std::uint64_t j) {
    auto h = kcb::q_central_substituted(n, k, j);
    py::dict d;
    d["is_polynomial"] = h.is_polynomial;
    if (h.quotient) d["coefficients"] = to_pyint_list(h.quotient->coeffs());
    return d;
  });
  m.def("predicted_H_polynomial", &kcb::predicted_H_polynomial);
  m.def("verify_functional_equation", &kcb::verify_functional_equation);

  // searches
  m.def("enumerate_digit_bounded", &kcb::enumerate_digit_bounded,
        py::arg("p"), py::arg("A"), py::arg("q"), py::arg("B"),
        py::arg("limit"), py::arg("max_candidates") = 10'000'000);
  m.def("search_zero_valuation", &kcb::search_zero_valuation, py::arg("k"),
        py::arg("primes"), py::arg("n_max"), py::arg("jobs") = 1);
  m.def("squarefree_status",
        [](const py::object& mm, std::uint64_t trial_bound) {
          auto st = kcb::squarefree_status(from_pyint(mm), trial_bound);
          py::dict d;
          d["verdict"] = kcb::to_string(st.verdict);
          if (st.witness) d["witness"] = to_pyint(*st.witness);
          if (st.residual) d["residual"] = to_pyint(*st.residual);
          return d;
        },
        py::arg("m"), py::arg("trial_division_bound") = 100'000);
  m.def("scan_tilde_squarefree",
        [](std::int64_t k, std::uint64_t n_max, std::uint64_t trial_bound,
           unsigned jobs) {
          py::list out;
          for (const auto& [n, st] :
               kcb::scan_tilde_squarefree(k, n_max, trial_bound, jobs))
            out.append(py::make_tuple(n, kcb::to_string(st.verdict)));
          return out;
        },
        py::arg("k"), py::arg("n_max"),
        py::arg("trial_division_bound") = 100'000, py::arg("jobs") = 1);
}
