#ifndef KCB_QANALOGUE_HPP
#define KCB_QANALOGUE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kcb/common.hpp"

namespace kcb {

/// Dense integer-coefficient polynomial in q, little-endian coefficient
/// list. The highest-index coefficient is nonzero unless the polynomial is
/// zero (empty list).
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs);
  static QPolynomial one() { return QPolynomial({Int(1)}); }
  /// 1 - q^e; e = 0 gives the zero polynomial.
  static QPolynomial one_minus_q_pow(std::uint64_t e);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, -1 for the zero polynomial.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Int(0);
  }
  Int eval_one() const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Long division over the integers; nullopt when the remainder is nonzero
  /// or some leading-coefficient division is inexact.
  std::optional<QPolynomial> divide_exact(const QPolynomial& divisor) const;

private:
  void normalize();
  std::vector<Int> coeffs_;
};

/// [q]_n = 1 + q + ... + q^{n-1}; n = 0 gives the zero polynomial.
QPolynomial q_bracket(std::uint64_t n);

/// F_{n,k}(q) = prod_{m=1}^n (1-q^{km})(1-q^{k(m-1)+1}) / (1-q^m)^2,
/// computed by iterated exact division. A nonzero remainder anywhere would
/// contradict the integrality theorem and raises a logic error.
QPolynomial q_central(std::uint64_t n, std::int64_t k);

/// One factor (1 - q^a t^b) of a factored rational function.
struct QFactor {
  std::uint64_t q_exp = 0;
  std::uint64_t t_exp = 0;
  bool operator==(const QFactor&) const = default;
};

/// Dense bivariate polynomial in (q,t): rows[t_degree][q_degree].
class QTPolynomial {
public:
  static QTPolynomial one();
  /// Expands a product of (1 - q^a t^b) factors.
  static QTPolynomial expand(const std::vector<QFactor>& factors);

  bool operator==(const QTPolynomial& o) const { return rows_ == o.rows_; }
  const std::vector<std::vector<Int>>& rows() const { return rows_; }

private:
  void mul_factor(const QFactor& f);
  void normalize();
  std::vector<std::vector<Int>> rows_;
};

/// Rational function in (q,t) kept as numerator/denominator multisets of
/// factors (1 - q^a t^b) with a unit scalar. Only syntactically identical
/// factors are ever cancelled.
struct QRationalFactored {
  std::vector<QFactor> numerator;
  std::vector<QFactor> denominator;
  Int unit = 1;

  void cancel();
  /// t -> t q^k, i.e. (a,b) -> (a + k b, b) on every factor.
  QRationalFactored shift_t_by_qk(std::int64_t k) const;
  /// t -> q^j; returns (numerator exponents, denominator exponents) of the
  /// resulting univariate factors 1 - q^e.
  std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
  substitute_t_power(std::uint64_t j) const;
};

/// Product of (1 - q^e) over the exponent list, as a dense polynomial.
QPolynomial expand_univariate(const std::vector<std::uint64_t>& exps);

/// G_{n,k}(q,t) = (1-q)/(1-t q^{kn}) prod_{m=1}^n (1-q^{km})(1-t q^{km})
///               / (1-q^m)^2, in factored form.
QRationalFactored q_central_bivariate(std::uint64_t n, std::int64_t k);

struct HResult {
  QRationalFactored form;
  bool is_polynomial = false;
  std::optional<QPolynomial> quotient;
};

/// H_{n,k,j}(q) = G_{n,k}(q, q^j), expanded and divided exactly; a nonzero
/// remainder is the legitimate "not a polynomial" outcome.
HResult q_central_substituted(std::uint64_t n, std::int64_t k, std::uint64_t j);

/// The polynomiality prediction k == 0 mod gcd(n,j).
bool predicted_H_polynomial(std::uint64_t n, std::int64_t k, std::uint64_t j);

/// Checks G_{n,k}(q, t q^k) = (1 - q^{kn} t)/(1 - q^k t) G_{n,k}(q,t) by
/// cross-multiplied bivariate expansion.
bool verify_functional_equation(std::uint64_t n, std::int64_t k);

}  // namespace kcb

#endif
