#pragma once

#include <string>
#include <utility>

#include "poly.hpp"

namespace qcon {

/// Laurent polynomial in q: base * q^shift where the base has a nonzero
/// constant term (canonical shift). Zero has shift 0.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(QPolynomial base, long long shift = 0) : base_(std::move(base)), shift_(shift) {
    normalize();
  }
  explicit QLaurent(const BigRat& c) : base_(QPolynomial::constant(c)) {}

  static QLaurent one() { return QLaurent(QPolynomial::one()); }
  static QLaurent qpow(long long e) { return QLaurent(QPolynomial::one(), e); }

  bool is_zero() const { return base_.is_zero(); }
  const QPolynomial& base() const { return base_; }
  long long shift() const { return shift_; }
  /// Degree of the top term (shift + base degree); only for nonzero values.
  long long top_degree() const { return shift_ + base_.degree(); }

  QLaurent operator-() const { return QLaurent(-base_, shift_, no_normalize{}); }

  friend QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long s = std::min(a.shift_, b.shift_);
    QPolynomial r = a.base_.shifted_up(static_cast<std::size_t>(a.shift_ - s)) +
                    b.base_.shifted_up(static_cast<std::size_t>(b.shift_ - s));
    return QLaurent(std::move(r), s);
  }
  friend QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() || b.is_zero()) return QLaurent();
    return QLaurent(a.base_ * b.base_, a.shift_ + b.shift_, no_normalize{});
  }
  QLaurent& operator+=(const QLaurent& o) { return *this = *this + o; }
  QLaurent& operator-=(const QLaurent& o) { return *this = *this - o; }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  QLaurent scaled(const BigRat& v) const {
    if (v.is_zero()) return QLaurent();
    return QLaurent(base_.scaled(v), shift_, no_normalize{});
  }
  QLaurent mul_qpow(long long e) const {
    if (is_zero()) return QLaurent();
    return QLaurent(base_, shift_ + e, no_normalize{});
  }
  /// Multiply by (1 - q^e); e = 0 gives zero.
  QLaurent times_one_minus_qpow(long long e) const {
    if (e == 0) return QLaurent();
    return *this - mul_qpow(e);
  }

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.shift_ == b.shift_ && a.base_ == b.base_;
  }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    if (shift_ == 0) return base_.str();
    return "q^(" + std::to_string(shift_) + ")*(" + base_.str() + ")";
  }

 private:
  struct no_normalize {};
  QLaurent(QPolynomial base, long long shift, no_normalize)
      : base_(std::move(base)), shift_(shift) {
    if (base_.is_zero()) shift_ = 0;
  }

  void normalize() {
    if (base_.is_zero()) {
      shift_ = 0;
      return;
    }
    long long low = base_.low_degree();
    if (low > 0) {
      base_ = base_.shifted_down(static_cast<std::size_t>(low));
      shift_ += low;
    }
  }

  QPolynomial base_;
  long long shift_ = 0;
};

}  // namespace qcon
