#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bigrat.hpp"
#include "errors.hpp"

namespace qcon {

/// Dense univariate polynomial in q over BigRat. Coefficients are indexed by
/// exponent; the highest stored coefficient is nonzero unless the polynomial
/// is zero (empty vector).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial one() { return constant(BigRat(1)); }
  static QPolynomial constant(const BigRat& v) {
    QPolynomial p;
    if (!v.is_zero()) p.c_.push_back(v);
    return p;
  }
  static QPolynomial monomial(std::size_t e, const BigRat& v = BigRat(1)) {
    QPolynomial p;
    if (!v.is_zero()) {
      p.c_.assign(e + 1, BigRat());
      p.c_[e] = v;
    }
    return p;
  }
  /// 1 - q^e for e >= 1.
  static QPolynomial one_minus_qpow(std::size_t e) {
    QPolynomial p;
    p.c_.assign(e + 1, BigRat());
    p.c_[0] = BigRat(1);
    p.c_[e] = BigRat(-1);
    return p;
  }
  /// q^e - 1 for e >= 1.
  static QPolynomial qpow_minus_one(std::size_t e) {
    QPolynomial p;
    p.c_.assign(e + 1, BigRat());
    p.c_[0] = BigRat(-1);
    p.c_[e] = BigRat(1);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  const BigRat& coeff(std::size_t i) const {
    static const BigRat kZero;
    return i < c_.size() ? c_[i] : kZero;
  }
  const std::vector<BigRat>& coeffs() const { return c_; }

  const BigRat& constant_term() const { return coeff(0); }
  const BigRat& leading() const { return c_.back(); }  // pre: !is_zero()
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  /// Index of the lowest nonzero coefficient; -1 for zero.
  long long low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long long>(i);
    return -1;
  }

  QPolynomial operator-() const {
    QPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial();
    // Iterate the shorter factor on the outside; zero coefficients are skipped,
    // which matters for the sparse cyclotomic factors this code multiplies by.
    const QPolynomial& s = a.c_.size() <= b.c_.size() ? a : b;
    const QPolynomial& l = a.c_.size() <= b.c_.size() ? b : a;
    QPolynomial r;
    r.c_.assign(s.c_.size() + l.c_.size() - 1, BigRat());
    mpq_t tmp;
    mpq_init(tmp);
    for (std::size_t i = 0; i < s.c_.size(); ++i) {
      if (s.c_[i].is_zero()) continue;
      const mpq_srcptr si = s.c_[i].raw().get_mpq_t();
      for (std::size_t j = 0; j < l.c_.size(); ++j) {
        if (l.c_[j].is_zero()) continue;
        mpq_mul(tmp, si, l.c_[j].raw().get_mpq_t());
        mpq_ptr acc = r.c_[i + j].raw_mut().get_mpq_t();
        mpq_add(acc, acc, tmp);
      }
    }
    mpq_clear(tmp);
    r.trim();
    return r;
  }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  QPolynomial scaled(const BigRat& v) const {
    if (v.is_zero()) return QPolynomial();
    QPolynomial r = *this;
    for (auto& c : r.c_) c *= v;
    return r;
  }

  /// Multiply by q^e, e >= 0.
  QPolynomial shifted_up(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    QPolynomial r;
    r.c_.assign(c_.size() + e, BigRat());
    std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<long>(e));
    return r;
  }

  /// Divide by q^e exactly; pre: low_degree() >= e (or zero polynomial).
  QPolynomial shifted_down(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    QPolynomial r;
    r.c_.assign(c_.begin() + static_cast<long>(e), c_.end());
    return r;
  }

  QPolynomial pow(unsigned e) const {
    QPolynomial r = one();
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  BigRat eval(const BigRat& x) const {
    BigRat v;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  /// Long division; returns (quotient, remainder). Throws on zero divisor.
  std::pair<QPolynomial, QPolynomial> divrem(const QPolynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (degree() < d.degree()) return {QPolynomial(), *this};
    QPolynomial rem = *this;
    QPolynomial quot;
    quot.c_.assign(static_cast<std::size_t>(degree() - d.degree()) + 1, BigRat());
    const BigRat lead_inv = d.leading().inverse();
    mpq_t tmp;
    mpq_init(tmp);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      const std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
      BigRat f = rem.leading() * lead_inv;
      quot.c_[shift] = f;
      // rem -= f * q^shift * d
      const mpq_srcptr fq = f.raw().get_mpq_t();
      for (std::size_t i = 0; i < d.c_.size(); ++i) {
        if (d.c_[i].is_zero()) continue;
        mpq_mul(tmp, fq, d.c_[i].raw().get_mpq_t());
        mpq_ptr acc = rem.c_[i + shift].raw_mut().get_mpq_t();
        mpq_sub(acc, acc, tmp);
      }
      rem.trim();
    }
    mpq_clear(tmp);
    quot.trim();
    return {std::move(quot), std::move(rem)};
  }

  /// Quotient when the division is exact; nullopt otherwise.
  std::optional<QPolynomial> exact_div(const QPolynomial& d) const {
    auto [quot, rem] = divrem(d);
    if (!rem.is_zero()) return std::nullopt;
    return quot;
  }

  QPolynomial monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(leading().inverse());
  }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return a.c_ != b.c_; }

  std::string str(const char* var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigRat& c = c_[i];
      if (c.is_zero()) continue;
      BigRat av = abs(c);
      if (first) {
        if (c.sign() < 0) os << "-";
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      if (i == 0) {
        os << av.str();
      } else {
        if (!av.is_one()) os << av.str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<BigRat> c_;
};

/// Monic gcd via the Euclidean algorithm, normalizing each remainder to monic
/// to keep coefficient growth in check. gcd(f, 0) is monic f; gcd(0, 0) = 0.
inline QPolynomial poly_gcd(QPolynomial f, QPolynomial g) {
  while (!g.is_zero()) {
    QPolynomial r = f.divrem(g).second;
    f = std::move(g);
    g = r.monic();
  }
  return f.monic();
}

/// Multiplicity of the (nonconstant) factor pi in p; counts exact divisions.
/// A nonnegative cap bounds the count (valuations at or above the cap are
/// reported as the cap). For p = 0 the valuation is unbounded; the cap (or a
/// large sentinel) is returned.
inline long long poly_valuation(QPolynomial p, const QPolynomial& pi, long long cap = -1) {
  if (p.is_zero()) return cap >= 0 ? cap : (1LL << 60);
  long long v = 0;
  while (cap < 0 || v < cap) {
    auto quot = p.exact_div(pi);
    if (!quot) break;
    p = std::move(*quot);
    ++v;
    if (p.is_constant()) break;
  }
  return v;
}

}  // namespace qcon
