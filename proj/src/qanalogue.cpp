#include "kcb/qanalogue.hpp"

#include <algorithm>
#include <numeric>

namespace kcb {

QPolynomial::QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::one_minus_q_pow(std::uint64_t e) {
  if (e == 0) return QPolynomial();  // 1 - q^0 = 0
  std::vector<Int> c(e + 1, Int(0));
  c[0] = 1;
  c[e] = -1;
  return QPolynomial(std::move(c));
}

Int QPolynomial::eval_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return QPolynomial();
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

std::optional<QPolynomial> QPolynomial::divide_exact(
    const QPolynomial& divisor) const {
  if (divisor.is_zero())
    throw std::invalid_argument("QPolynomial: division by zero polynomial");
  if (is_zero()) return QPolynomial();
  if (degree() < divisor.degree()) return std::nullopt;

  std::vector<Int> rem = coeffs_;
  const auto& div = divisor.coeffs_;
  const Int& lead = div.back();
  std::vector<Int> quot(coeffs_.size() - div.size() + 1, Int(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    Int& top = rem[i + div.size() - 1];
    if (top == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                lead.get_mpz_t());
    if (r != 0) return std::nullopt;
    quot[i] = q;
    for (std::size_t j = 0; j < div.size(); ++j) rem[i + j] -= q * div[j];
  }
  for (const Int& c : rem)
    if (c != 0) return std::nullopt;
  return QPolynomial(std::move(quot));
}

QPolynomial q_bracket(std::uint64_t n) {
  return QPolynomial(std::vector<Int>(n, Int(1)));
}

QPolynomial q_central(std::uint64_t n, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("q_central: k must be >= 1");
  QPolynomial f = QPolynomial::one();
  for (std::uint64_t m = 1; m <= n; ++m) {
    f = f * QPolynomial::one_minus_q_pow(k * m);
    f = f * QPolynomial::one_minus_q_pow(k * (m - 1) + 1);
    QPolynomial den = QPolynomial::one_minus_q_pow(m);
    for (int rep = 0; rep < 2; ++rep) {
      auto q = f.divide_exact(den);
      if (!q)
        throw std::logic_error("q_central: division left a remainder");
      f = std::move(*q);
    }
  }
  return f;
}

QTPolynomial QTPolynomial::one() {
  QTPolynomial p;
  p.rows_ = {{Int(1)}};
  return p;
}

void QTPolynomial::mul_factor(const QFactor& f) {
  // multiply by (1 - q^a t^b): subtract a shifted copy
  std::size_t tmax = rows_.size() + f.t_exp;
  std::size_t qmax = 0;
  for (const auto& row : rows_) qmax = std::max(qmax, row.size());
  qmax += f.q_exp;
  std::vector<std::vector<Int>> out(tmax, std::vector<Int>(qmax, Int(0)));
  for (std::size_t t = 0; t < rows_.size(); ++t)
    for (std::size_t q = 0; q < rows_[t].size(); ++q) {
      out[t][q] += rows_[t][q];
      out[t + f.t_exp][q + f.q_exp] -= rows_[t][q];
    }
  rows_ = std::move(out);
  normalize();
}

void QTPolynomial::normalize() {
  for (auto& row : rows_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

QTPolynomial QTPolynomial::expand(const std::vector<QFactor>& factors) {
  QTPolynomial p = one();
  for (const QFactor& f : factors) p.mul_factor(f);
  return p;
}

void QRationalFactored::cancel() {
  for (auto it = denominator.begin(); it != denominator.end();) {
    auto hit = std::find(numerator.begin(), numerator.end(), *it);
    if (hit != numerator.end()) {
      numerator.erase(hit);
      it = denominator.erase(it);
    } else {
      ++it;
    }
  }
}

QRationalFactored QRationalFactored::shift_t_by_qk(std::int64_t k) const {
  QRationalFactored out = *this;
  for (auto& f : out.numerator) f.q_exp += k * f.t_exp;
  for (auto& f : out.denominator) f.q_exp += k * f.t_exp;
  return out;
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
QRationalFactored::substitute_t_power(std::uint64_t j) const {
  std::vector<std::uint64_t> num, den;
  for (const auto& f : numerator) num.push_back(f.q_exp + j * f.t_exp);
  for (const auto& f : denominator) den.push_back(f.q_exp + j * f.t_exp);
  return {num, den};
}

QPolynomial expand_univariate(const std::vector<std::uint64_t>& exps) {
  QPolynomial p = QPolynomial::one();
  for (std::uint64_t e : exps) p = p * QPolynomial::one_minus_q_pow(e);
  return p;
}

QRationalFactored q_central_bivariate(std::uint64_t n, std::int64_t k) {
  if (k < 1)
    throw std::invalid_argument("q_central_bivariate: k must be >= 1");
  std::uint64_t ku = static_cast<std::uint64_t>(k);
  QRationalFactored g;
  g.numerator.push_back({1, 0});
  g.denominator.push_back({ku * n, 1});
  for (std::uint64_t m = 1; m <= n; ++m) {
    g.numerator.push_back({ku * m, 0});
    g.numerator.push_back({ku * m, 1});
    g.denominator.push_back({m, 0});
    g.denominator.push_back({m, 0});
  }
  g.cancel();
  return g;
}

HResult q_central_substituted(std::uint64_t n, std::int64_t k,
                              std::uint64_t j) {
  HResult out;
  out.form = q_central_bivariate(n, k);
  auto [num_e, den_e] = out.form.substitute_t_power(j);
  if (std::find(den_e.begin(), den_e.end(), 0ull) != den_e.end())
    throw std::invalid_argument(
        "q_central_substituted: substitution collapses a denominator factor");
  QPolynomial num = expand_univariate(num_e);
  QPolynomial den = expand_univariate(den_e);
  auto q = num.divide_exact(den);
  out.is_polynomial = q.has_value();
  if (q) out.quotient = std::move(*q);
  return out;
}

bool predicted_H_polynomial(std::uint64_t n, std::int64_t k, std::uint64_t j) {
  if (n < 1 || k < 1 || j < 1)
    throw std::invalid_argument("predicted_H_polynomial: need n,k,j >= 1");
  std::uint64_t g = std::gcd(n, j);
  return static_cast<std::uint64_t>(k) % g == 0;
}

bool verify_functional_equation(std::uint64_t n, std::int64_t k) {
  QRationalFactored g = q_central_bivariate(n, k);
  QRationalFactored shifted = g.shift_t_by_qk(k);
  std::uint64_t ku = static_cast<std::uint64_t>(k);

  // N'(q,t) (1 - q^k t) D(q,t)  ==  (1 - q^{kn} t) N(q,t) D'(q,t)
  std::vector<QFactor> lhs = shifted.numerator;
  lhs.push_back({ku, 1});
  lhs.insert(lhs.end(), g.denominator.begin(), g.denominator.end());

  std::vector<QFactor> rhs = g.numerator;
  rhs.push_back({ku * n, 1});
  rhs.insert(rhs.end(), shifted.denominator.begin(),
             shifted.denominator.end());

  return QTPolynomial::expand(lhs) == QTPolynomial::expand(rhs);
}

}  // namespace kcb
