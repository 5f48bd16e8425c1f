#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "poly.hpp"
#include "ratfun.hpp"

namespace qcon {

/// Bivariate polynomial in (a, q): coefficients of a^i are q-polynomials.
/// The highest stored coefficient is nonzero unless the value is zero.
class APoly {
 public:
  APoly() = default;
  explicit APoly(std::vector<QPolynomial> coeffs) : c_(std::move(coeffs)) { trim(); }

  static APoly zero() { return APoly(); }
  static APoly one() { return constant(QPolynomial::one()); }
  static APoly constant(QPolynomial p) {
    APoly r;
    if (!p.is_zero()) r.c_.push_back(std::move(p));
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  long long deg_a() const { return static_cast<long long>(c_.size()) - 1; }
  long long low_a() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long long>(i);
    return -1;
  }
  const QPolynomial& coeff(std::size_t i) const {
    static const QPolynomial kZero;
    return i < c_.size() ? c_[i] : kZero;
  }
  const std::vector<QPolynomial>& coeffs() const { return c_; }

  APoly operator-() const {
    APoly r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
  }
  APoly& operator+=(const APoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  APoly& operator-=(const APoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend APoly operator+(APoly x, const APoly& y) { return x += y; }
  friend APoly operator-(APoly x, const APoly& y) { return x -= y; }

  friend APoly operator*(const APoly& x, const APoly& y) {
    if (x.is_zero() || y.is_zero()) return APoly();
    APoly r;
    r.c_.assign(x.c_.size() + y.c_.size() - 1, QPolynomial());
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) {
        if (y.c_[j].is_zero()) continue;
        r.c_[i + j] += x.c_[i] * y.c_[j];
      }
    }
    r.trim();
    return r;
  }
  APoly& operator*=(const APoly& o) { return *this = *this * o; }

  APoly times_qpoly(const QPolynomial& p) const {
    if (p.is_zero()) return APoly();
    APoly r = *this;
    for (auto& cp : r.c_) cp = cp * p;
    return r;
  }
  APoly scaled(const BigRat& v) const {
    if (v.is_zero()) return APoly();
    APoly r = *this;
    for (auto& cp : r.c_) cp = cp.scaled(v);
    return r;
  }
  /// Multiply by q^e, e >= 0.
  APoly shift_q(std::size_t e) const {
    APoly r = *this;
    for (auto& cp : r.c_) cp = cp.shifted_up(e);
    return r;
  }
  /// Multiply by a^j, j >= 0.
  APoly shift_a(std::size_t j) const {
    if (is_zero() || j == 0) return *this;
    APoly r;
    r.c_.assign(c_.size() + j, QPolynomial());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + j] = c_[i];
    return r;
  }
  /// Divide by a^j exactly; pre: low_a() >= j (or zero).
  APoly unshift_a(std::size_t j) const {
    if (is_zero() || j == 0) return *this;
    APoly r;
    r.c_.assign(c_.begin() + static_cast<long>(j), c_.end());
    r.trim();
    return r;
  }

  /// Multiply by (1 - a q^e), e >= 0.
  APoly times_one_minus_aq(std::size_t e) const { return *this - shift_a(1).shift_q(e); }
  /// Multiply by (a - q^e), e >= 0.
  APoly times_a_minus_q(std::size_t e) const { return shift_a(1) - shift_q(e); }

  /// Exact division by (1 - a q^e); processes coefficients from a^0 upward.
  std::optional<APoly> div_one_minus_aq(std::size_t e) const {
    if (is_zero()) return APoly();
    if (c_.size() == 1) return std::nullopt;
    std::vector<QPolynomial> quot(c_.size() - 1);
    quot[0] = c_[0];
    for (std::size_t i = 1; i + 1 < c_.size(); ++i)
      quot[i] = c_[i] + quot[i - 1].shifted_up(e);
    // remainder: top coefficient must equal -q^e * quot.back()
    if (c_.back() + quot.back().shifted_up(e) != QPolynomial())
      return std::nullopt;
    return APoly(std::move(quot));
  }

  /// Exact division by (a - q^e); processes coefficients from the top down.
  std::optional<APoly> div_a_minus_q(std::size_t e) const {
    if (is_zero()) return APoly();
    if (c_.size() == 1) return std::nullopt;
    std::vector<QPolynomial> quot(c_.size() - 1);
    quot.back() = c_.back();
    for (std::size_t i = c_.size() - 2; i >= 1; --i)
      quot[i - 1] = c_[i] + quot[i].shifted_up(e);
    if (c_[0] + quot[0].shifted_up(e) != QPolynomial())
      return std::nullopt;
    return APoly(std::move(quot));
  }

  /// Exact division of every coefficient by a q-polynomial.
  std::optional<APoly> div_qpoly(const QPolynomial& g) const {
    std::vector<QPolynomial> quot(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      auto d = c_[i].exact_div(g);
      if (!d) return std::nullopt;
      quot[i] = std::move(*d);
    }
    return APoly(std::move(quot));
  }

  /// Substitute a = c.
  QPolynomial eval_a(const BigRat& c) const {
    QPolynomial r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r.scaled(c) + c_[i];
    return r;
  }

  friend bool operator==(const APoly& x, const APoly& y) { return x.c_ == y.c_; }
  friend bool operator!=(const APoly& x, const APoly& y) { return x.c_ != y.c_; }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!first) s += " + ";
      first = false;
      if (i == 0) {
        s += "(" + c_[i].str() + ")";
      } else {
        s += "(" + c_[i].str() + ")*a";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<QPolynomial> c_;
};

/// Reduced bivariate fraction in (a, q): den nonzero, gcd(num, den) a unit.
class ABiRational {
 public:
  ABiRational() : den_(APoly::one()) {}

  static ABiRational reduced_unchecked(APoly num, APoly den) {
    ABiRational r;
    if (num.is_zero()) return r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize_unit();
    return r;
  }

  bool is_zero() const { return num_.is_zero(); }
  const APoly& num() const { return num_; }
  const APoly& den() const { return den_; }

  /// Value equality via cross-multiplication.
  bool same_value(const ABiRational& o) const {
    return num_ * o.den_ == o.num_ * den_;
  }

  std::string str() const {
    if (is_zero()) return "0";
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  void normalize_unit() {
    const QPolynomial& lead = den_.coeff(static_cast<std::size_t>(den_.deg_a()));
    const BigRat u = lead.leading();
    if (!u.is_one()) {
      const BigRat inv = u.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  APoly num_;
  APoly den_;
};

namespace detail {

inline QPolynomial q_content(const APoly& p) {
  QPolynomial g;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

inline std::vector<QRational> to_fractions(const APoly& p) {
  std::vector<QRational> r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.push_back(QRational::from_poly(c));
  return r;
}

inline long long frac_degree(const std::vector<QRational>& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) return static_cast<long long>(i);
  return -1;
}

/// Remainder of p mod d in Q(q)[a]; d must be nonzero.
inline std::vector<QRational> frac_rem(std::vector<QRational> p,
                                       const std::vector<QRational>& d) {
  long long dd = frac_degree(d);
  const QRational lead = d[static_cast<std::size_t>(dd)];
  for (long long pd = frac_degree(p); pd >= dd; pd = frac_degree(p)) {
    QRational f = p[static_cast<std::size_t>(pd)] / lead;
    for (long long i = 0; i <= dd; ++i) {
      if (d[static_cast<std::size_t>(i)].is_zero()) continue;
      p[static_cast<std::size_t>(pd - dd + i)] -= f * d[static_cast<std::size_t>(i)];
    }
    p[static_cast<std::size_t>(pd)] = QRational();  // force the cancellation
  }
  return p;
}

/// Monic gcd in Q(q)[a] by the Euclidean algorithm; intended for the small
/// a-degrees of the public reduction entry point.
inline std::vector<QRational> frac_gcd(std::vector<QRational> f, std::vector<QRational> g) {
  while (frac_degree(g) >= 0) {
    auto r = frac_rem(std::move(f), g);
    f = std::move(g);
    g = std::move(r);
  }
  long long df = frac_degree(f);
  if (df >= 0) {
    const QRational inv = QRational::one() / f[static_cast<std::size_t>(df)];
    for (auto& c : f) c = c * inv;
    f.resize(static_cast<std::size_t>(df) + 1);
  }
  return f;
}

/// Clears a monic Q(q)[a] polynomial to a q-primitive APoly.
inline APoly clear_to_primitive(const std::vector<QRational>& g) {
  // common q-denominator and the shift needed to clear negative q-powers
  QPolynomial lcm = QPolynomial::one();
  long long minshift = 0;
  for (const auto& c : g) {
    if (c.is_zero()) continue;
    lcm = lcm * *c.den().exact_div(poly_gcd(lcm, c.den()));
    minshift = std::min(minshift, c.shift());
  }
  std::vector<QPolynomial> coeffs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    QPolynomial p = g[i].num() * (*lcm.exact_div(g[i].den()));
    coeffs[i] = p.shifted_up(static_cast<std::size_t>(g[i].shift() - minshift));
  }
  APoly cleared{std::move(coeffs)};
  QPolynomial cont = q_content(cleared);
  if (!cont.is_constant()) cleared = *cleared.div_qpoly(cont);
  return cleared;
}

/// Exact division num / g in Q(q)[a] with a polynomial result.
inline APoly frac_exact_div(const APoly& num, const APoly& g) {
  std::vector<QRational> n = to_fractions(num);
  std::vector<QRational> d = to_fractions(g);
  long long dd = frac_degree(d);
  long long nd = frac_degree(n);
  std::vector<QRational> quot(static_cast<std::size_t>(nd - dd) + 1);
  const QRational lead = d[static_cast<std::size_t>(dd)];
  for (long long pd = frac_degree(n); pd >= dd; pd = frac_degree(n)) {
    QRational f = n[static_cast<std::size_t>(pd)] / lead;
    quot[static_cast<std::size_t>(pd - dd)] = f;
    for (long long i = 0; i <= dd; ++i) {
      if (d[static_cast<std::size_t>(i)].is_zero()) continue;
      n[static_cast<std::size_t>(pd - dd + i)] -= f * d[static_cast<std::size_t>(i)];
    }
    n[static_cast<std::size_t>(pd)] = QRational();
  }
  std::vector<QPolynomial> coeffs(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (quot[i].is_zero()) continue;
    // exactness: the quotient coefficients must already be polynomials
    if (!quot[i].den().is_one() || quot[i].shift() < 0)
      throw DivisionByZero("inexact bivariate division");
    coeffs[i] = quot[i].num().shifted_up(static_cast<std::size_t>(quot[i].shift()));
  }
  return APoly(std::move(coeffs));
}

}  // namespace detail

/// Reduced form of num/den: gcd computed in a over the fraction field of
/// q-polynomials, then q-content extracted. Intended for modest degrees.
inline ABiRational abirat_reduce(APoly num, APoly den) {
  if (den.is_zero()) throw DivisionByZero("bivariate fraction with zero denominator");
  if (num.is_zero()) return ABiRational();
  QPolynomial cn = detail::q_content(num);
  QPolynomial cd = detail::q_content(den);
  QPolynomial cg = poly_gcd(cn, cd);
  if (!cg.is_constant()) {
    num = *num.div_qpoly(cg);
    den = *den.div_qpoly(cg);
  }
  auto g = detail::frac_gcd(detail::to_fractions(num), detail::to_fractions(den));
  if (detail::frac_degree(g) >= 1) {
    APoly gp = detail::clear_to_primitive(g);
    num = detail::frac_exact_div(num, gp);
    den = detail::frac_exact_div(den, gp);
    // division by the primitive gcd can reintroduce a common q-content
    cg = poly_gcd(detail::q_content(num), detail::q_content(den));
    if (!cg.is_constant()) {
      num = *num.div_qpoly(cg);
      den = *den.div_qpoly(cg);
    }
  }
  return ABiRational::reduced_unchecked(std::move(num), std::move(den));
}

}  // namespace qcon
