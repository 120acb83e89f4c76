#include <doctest.h>

#include "kcb/kcentral.hpp"
#include "kcb/qanalogue.hpp"

using namespace kcb;

namespace {

// Independent route for F: expand the full numerator and denominator
// products and divide once.
QPolynomial expand_then_divide_F(std::uint64_t n, std::int64_t k) {
  std::uint64_t ku = static_cast<std::uint64_t>(k);
  std::vector<std::uint64_t> num, den;
  for (std::uint64_t m = 1; m <= n; ++m) {
    num.push_back(ku * m);
    num.push_back(ku * (m - 1) + 1);
    den.push_back(m);
    den.push_back(m);
  }
  auto q = expand_univariate(num).divide_exact(expand_univariate(den));
  REQUIRE(q.has_value());
  return *q;
}

}  // namespace

TEST_CASE("q_bracket") {
  CHECK(q_bracket(0).is_zero());
  CHECK(q_bracket(1) == QPolynomial({Int(1)}));
  CHECK(q_bracket(3) == QPolynomial({Int(1), Int(1), Int(1)}));
  for (std::uint64_t n = 0; n <= 20; ++n)
    CHECK(q_bracket(n).eval_one() == static_cast<long>(n));
}

TEST_CASE("polynomial division") {
  QPolynomial a({Int(1), Int(1)});
  auto q = (a * a).divide_exact(a);
  REQUIRE(q.has_value());
  CHECK(*q == a);
  CHECK(!QPolynomial({Int(1), Int(0), Int(1)})
             .divide_exact(QPolynomial({Int(1), Int(1)}))
             .has_value());
  CHECK_THROWS_AS(a.divide_exact(QPolynomial()), std::invalid_argument);
}

TEST_CASE("q-analogue of c(n,k)") {
  CHECK(q_central(0, 4) == QPolynomial::one());
  CHECK(q_central(1, 2) == QPolynomial({Int(1), Int(1)}));

  SUBCASE("value at q = 1 and degree bookkeeping") {
    for (std::uint64_t n = 0; n <= 12; ++n)
      for (std::int64_t k = 1; k <= 4; ++k) {
        QPolynomial f = q_central(n, k);
        CHECK(f.eval_one() == kcentral_c(n, k));
        CHECK(f.degree() ==
              static_cast<std::int64_t>((k - 1) * n * n));
      }
  }
  SUBCASE("iterated division equals expand-then-divide") {
    for (std::uint64_t n = 0; n <= 20; ++n)
      for (std::int64_t k = 1; k <= 5; ++k)
        CHECK(q_central(n, k) == expand_then_divide_F(n, k));
  }
}

TEST_CASE("bivariate factored form of G") {
  QRationalFactored g21 = q_central_bivariate(2, 1);
  CHECK(g21.numerator == std::vector<QFactor>{{1, 1}});
  CHECK(g21.denominator == std::vector<QFactor>{{2, 0}});

  QRationalFactored g12 = q_central_bivariate(1, 2);
  CHECK(g12.numerator == std::vector<QFactor>{{2, 0}});
  CHECK(g12.denominator == std::vector<QFactor>{{1, 0}});
}

TEST_CASE("H substitutions") {
  SUBCASE("H(n,k,1) recovers F") {
    for (std::uint64_t n = 0; n <= 6; ++n)
      for (std::int64_t k = 1; k <= 6; ++k) {
        HResult h = q_central_substituted(n, k, 1);
        REQUIRE(h.is_polynomial);
        CHECK(*h.quotient == q_central(n, k));
      }
  }
  SUBCASE("examples") {
    HResult h211 = q_central_substituted(2, 1, 1);
    CHECK(h211.is_polynomial);
    CHECK(*h211.quotient == QPolynomial::one());

    HResult h212 = q_central_substituted(2, 1, 2);
    CHECK(!h212.is_polynomial);  // (1-q^3)/(1-q^2)
  }
}

TEST_CASE("H-polynomiality prediction") {
  CHECK(!predicted_H_polynomial(2, 1, 2));
  for (std::uint64_t n = 1; n <= 10; ++n)
    for (std::int64_t k = 1; k <= 10; ++k)
      CHECK(predicted_H_polynomial(n, k, 1));
  CHECK_THROWS_AS(predicted_H_polynomial(2, 3, 0), std::invalid_argument);
}

TEST_CASE("functional equation in t") {
  CHECK(verify_functional_equation(1, 1));
  CHECK(verify_functional_equation(0, 4));
  for (std::uint64_t n = 0; n <= 5; ++n)
    for (std::int64_t k = 1; k <= 5; ++k)
      CHECK(verify_functional_equation(n, k));
}
