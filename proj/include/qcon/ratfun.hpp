#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "laurent.hpp"
#include "poly.hpp"

namespace qcon {

/// Rational function in q in canonical form: num/den in lowest terms times
/// q^shift, with the denominator monic and neither num nor den divisible by q.
/// Equal values have identical representation.
class QRational {
 public:
  QRational() : den_(QPolynomial::one()) {}

  static QRational from_laurent(const QLaurent& num, const QLaurent& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) return QRational();
    QPolynomial n = num.base();
    QPolynomial d = den.base();
    QPolynomial g = poly_gcd(n, d);
    if (!g.is_constant()) {
      n = *n.exact_div(g);
      d = *d.exact_div(g);
    }
    const BigRat lead = d.leading();
    if (!lead.is_one()) {
      const BigRat inv = lead.inverse();
      n = n.scaled(inv);
      d = d.scaled(inv);
    }
    return QRational(std::move(n), std::move(d), num.shift() - den.shift());
  }

  static QRational from_laurent(const QLaurent& num) {
    return num.is_zero() ? QRational()
                         : QRational(num.base(), QPolynomial::one(), num.shift());
  }
  static QRational from_poly(const QPolynomial& p) { return from_laurent(QLaurent(p)); }
  static QRational constant(const BigRat& c) { return from_laurent(QLaurent(c)); }
  static QRational one() { return constant(BigRat(1)); }

  /// Trusted constructor: inputs must already satisfy the invariants
  /// (gcd(num, den) = 1, den monic, q dividing neither, zero is 0/1 shift 0).
  static QRational reduced_unchecked(QPolynomial num, QPolynomial den, long long shift) {
    return QRational(std::move(num), std::move(den), shift);
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one() && shift_ >= 0; }
  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }
  long long shift() const { return shift_; }
  QLaurent num_laurent() const { return QLaurent(num_, shift_); }

  QRational operator-() const { return QRational(-num_, den_, shift_); }

  friend QRational operator+(const QRational& a, const QRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    QLaurent n = QLaurent(a.num_, a.shift_) * QLaurent(b.den_) +
                 QLaurent(b.num_, b.shift_) * QLaurent(a.den_);
    return from_laurent(n, QLaurent(a.den_ * b.den_));
  }
  friend QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }
  friend QRational operator*(const QRational& a, const QRational& b) {
    if (a.is_zero() || b.is_zero()) return QRational();
    return from_laurent(QLaurent(a.num_ * b.num_, a.shift_ + b.shift_),
                        QLaurent(a.den_ * b.den_));
  }
  friend QRational operator/(const QRational& a, const QRational& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    if (a.is_zero()) return QRational();
    return from_laurent(QLaurent(a.num_ * b.den_, a.shift_ - b.shift_),
                        QLaurent(a.den_ * b.num_));
  }
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  QRational& operator/=(const QRational& o) { return *this = *this / o; }

  QRational scaled(const BigRat& c) const {
    if (c.is_zero()) return QRational();
    return QRational(num_.scaled(c), den_, shift_);
  }
  QRational mul_qpow(long long e) const {
    if (is_zero()) return QRational();
    return QRational(num_, den_, shift_ + e);
  }

  friend bool operator==(const QRational& a, const QRational& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

  /// Value at q = c; throws PoleAtPoint when the denominator (or a negative
  /// q-shift at c = 0) vanishes.
  BigRat eval(const BigRat& c) const {
    BigRat d = den_.eval(c);
    if (d.is_zero()) throw PoleAtPoint("pole at q = " + c.str());
    if (c.is_zero() && shift_ < 0 && !num_.is_zero())
      throw PoleAtPoint("pole at q = 0");
    BigRat v = num_.eval(c) / d;
    if (shift_ != 0 && !v.is_zero()) v *= c.pow(shift_);
    return v;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    if (shift_ != 0) s += "q^(" + std::to_string(shift_) + ")*";
    if (den_.is_one()) {
      s += "(" + num_.str() + ")";
    } else {
      s += "(" + num_.str() + ")/(" + den_.str() + ")";
    }
    return s;
  }

 private:
  QRational(QPolynomial num, QPolynomial den, long long shift)
      : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
    if (num_.is_zero()) {
      den_ = QPolynomial::one();
      shift_ = 0;
    }
  }

  QPolynomial num_;
  QPolynomial den_;
  long long shift_ = 0;
};

inline QRational ratfun_new(const QLaurent& num, const QLaurent& den) {
  return QRational::from_laurent(num, den);
}

inline BigRat ratfun_eval(const QRational& x, const BigRat& c) { return x.eval(c); }

/// One summand of a q-sum: coeff * q^qpow * prod (1 - q^e) / prod (1 - q^e).
/// A zero exponent in `num` makes the term vanish; in `den` it is a division
/// by the zero polynomial.
struct QTerm {
  BigRat coeff = BigRat(1);
  long long qpow = 0;
  std::vector<long long> num;
  std::vector<long long> den;

  QTerm& times_qint(long long k) {  // multiply by [k]
    num.push_back(k);
    den.push_back(1);
    return *this;
  }
  QTerm& over_qint(long long k) {  // divide by [k]
    den.push_back(k);
    num.push_back(1);
    return *this;
  }
  QTerm& times_poch(long long s, long long d, long long len) {
    append_poch(num, den, s, d, len);
    return *this;
  }
  QTerm& over_poch(long long s, long long d, long long len) {
    append_poch(den, num, s, d, len);
    return *this;
  }

  /// (q^s; q^d)_len appended to `fwd`; a negative length flips to the
  /// reciprocal product on `rev` via (a;q)_{-n} = 1/(a q^{-n}; q)_n.
  static void append_poch(std::vector<long long>& fwd, std::vector<long long>& rev,
                          long long s, long long d, long long len) {
    if (len >= 0) {
      for (long long j = 0; j < len; ++j) fwd.push_back(s + j * d);
    } else {
      for (long long j = 1; j <= -len; ++j) rev.push_back(s - j * d);
    }
  }
};

/// Incremental sum of QTerms over a common factored denominator. Denominator
/// factors are tracked as a cyclotomic multiset, so reduction to lowest terms
/// is trial division by small irreducibles instead of a big-polynomial gcd.
class QTermSum {
 public:
  void add(const QTerm& t) {
    QLaurent p(t.coeff);
    p = p.mul_qpow(t.qpow);
    for (long long e : t.num) {
      if (e == 0) return;  // zero factor: the whole term vanishes
      p = p.times_one_minus_qpow(e);
      if (p.is_zero()) return;
    }
    add_with_numerator(std::move(p), t.den);
  }

  /// Adds numerator_part / prod (1 - q^e) with a prebuilt numerator.
  void add_with_numerator(QLaurent numerator_part, const std::vector<long long>& den) {
    if (numerator_part.is_zero()) return;
    CycloMultiset dt;
    int sign = 1;
    long long unit_shift = 0;
    for (long long e : den) {
      if (e == 0) throw DivisionByZero("division by the zero q-Pochhammer factor");
      one_minus_qpow_factors(e, dt, sign, unit_shift);
    }
    if (sign < 0) numerator_part = -numerator_part;
    numerator_part = numerator_part.mul_qpow(-unit_shift);
    // put both the accumulator and the term over the merged denominator
    CycloMultiset merged = den_;
    cyclo_merge_max(merged, dt);
    if (merged != den_) num_ = laurent_times_cyclo(num_, cyclo_diff(merged, den_));
    numerator_part = laurent_times_cyclo(std::move(numerator_part), cyclo_diff(merged, dt));
    num_ += numerator_part;
    den_ = std::move(merged);
  }

  /// Merges another accumulated sum into this one over the lcm denominator.
  void merge(QTermSum&& other) {
    CycloMultiset lcm = den_;
    cyclo_merge_max(lcm, other.den_);
    if (lcm != den_) num_ = laurent_times_cyclo(std::move(num_), cyclo_diff(lcm, den_));
    if (lcm != other.den_)
      other.num_ = laurent_times_cyclo(std::move(other.num_), cyclo_diff(lcm, other.den_));
    num_ += other.num_;
    den_ = std::move(lcm);
  }

  /// Balanced pairwise sum of one accumulator per term. Adjacent terms of the
  /// q-sums share most denominator factors, so combining neighbors first keeps
  /// the cofactor multiplications small.
  static QTermSum tree_sum(const std::vector<QTerm>& terms) {
    std::vector<QTermSum> parts;
    parts.reserve(terms.size());
    for (const auto& t : terms) {
      QTermSum s;
      s.add(t);
      parts.push_back(std::move(s));
    }
    if (parts.empty()) return QTermSum();
    while (parts.size() > 1) {
      std::vector<QTermSum> next;
      next.reserve(parts.size() / 2 + 1);
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
        parts[i].merge(std::move(parts[i + 1]));
        next.push_back(std::move(parts[i]));
      }
      if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
      parts = std::move(next);
    }
    return std::move(parts.front());
  }

  bool numerator_is_zero() const { return num_.is_zero(); }
  const QLaurent& numerator() const { return num_; }
  const CycloMultiset& denominator_factors() const { return den_; }

  /// Lowest-terms reduction by cyclotomic trial division. The denominator's
  /// factorization into distinct irreducibles is known, so the result is
  /// canonical without a generic gcd.
  QRational reduce() const {
    if (num_.is_zero()) return QRational();
    QPolynomial n = num_.base();
    CycloMultiset rest = den_;
    for (auto& [t, mult] : rest) {
      const QPolynomial& phi = cyclotomic(t);
      while (mult > 0) {
        auto quot = n.exact_div(phi);
        if (!quot) break;
        n = std::move(*quot);
        --mult;
      }
    }
    return QRational::reduced_unchecked(std::move(n), cyclo_expand(rest), num_.shift());
  }

 private:
  QLaurent num_;
  CycloMultiset den_;
};

}  // namespace qcon
