#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "errors.hpp"

namespace qcon {

using BigInt = mpz_class;

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator. Zero is 0/1. Backed by GMP.
class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(long n) : v_(n) {}  // NOLINT: implicit by design, coefficients read naturally
  BigRat(long n, long d) : v_(n, d) { canonical_check(); }
  BigRat(const BigInt& n, const BigInt& d) : v_(n, d) { canonical_check(); }
  explicit BigRat(const BigInt& n) : v_(n) {}
  explicit BigRat(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
  }

  /// Parses "n" or "n/d" (optionally signed).
  static BigRat parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw InvalidParams("cannot parse rational: " + s);
    if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + s);
    v.canonicalize();
    return BigRat(std::move(v));
  }

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRat operator-() const { return BigRat(mpq_class(-v_)); }
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

  BigRat inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return BigRat(mpq_class(1) / v_);
  }

  BigRat pow(long e) const {
    if (e == 0) return BigRat(1);
    if (is_zero()) {
      if (e < 0) throw DivisionByZero("zero to a negative power");
      return BigRat();
    }
    mpq_class base = e < 0 ? mpq_class(1) / v_ : v_;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
    return BigRat(std::move(r));
  }

  std::string str() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }
  /// Mutable access for GMP-level accumulation loops; the caller must keep
  /// the value canonical (mpq_add/mpq_mul on canonical inputs do).
  mpq_class& raw_mut() { return v_; }

 private:
  void canonical_check() {
    if (v_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

inline BigRat abs(const BigRat& x) { return x.sign() < 0 ? -x : x; }

}  // namespace qcon
