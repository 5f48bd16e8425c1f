#pragma once

#include <random>
#include <vector>

#include "qcon/congruence.hpp"
#include "qcon/qobjects.hpp"
#include "qcon/ratfun.hpp"

namespace qtest {

using namespace qcon;

/// Deterministic generator for the randomized suites.
struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long long range(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng);
  }
  BigRat rat(long long maxabs = 9, long long maxden = 5) {
    long long n = range(-maxabs, maxabs);
    long long d = range(1, maxden);
    return BigRat(n, d);
  }
  BigRat nonzero_rat(long long maxabs = 9, long long maxden = 5) {
    for (;;) {
      BigRat v = rat(maxabs, maxden);
      if (!v.is_zero()) return v;
    }
  }

  QPolynomial poly(long long maxdeg = 5, long long maxabs = 6) {
    std::vector<BigRat> c(static_cast<std::size_t>(range(0, maxdeg)) + 1);
    for (auto& v : c) v = BigRat(range(-maxabs, maxabs));
    return QPolynomial(std::move(c));
  }
  QPolynomial nonzero_poly(long long maxdeg = 5, long long maxabs = 6) {
    for (;;) {
      QPolynomial p = poly(maxdeg, maxabs);
      if (!p.is_zero()) return p;
    }
  }

  /// Product of factors drawn from a small pool of q-Pochhammer pieces.
  QPolynomial factored_poly(long long nfactors) {
    QPolynomial p = QPolynomial::one();
    for (long long i = 0; i < nfactors; ++i) {
      switch (range(0, 2)) {
        case 0:
          p *= QPolynomial::one_minus_qpow(static_cast<std::size_t>(range(1, 6)));
          break;
        case 1:
          p *= cyclotomic(range(1, 8));
          break;
        default: {
          std::vector<BigRat> c(static_cast<std::size_t>(range(1, 3)) + 1);
          for (auto& v : c) v = BigRat(range(-3, 3));
          QPolynomial f(std::move(c));
          p *= f.is_zero() ? QPolynomial::one() : f;
          break;
        }
      }
    }
    return p;
  }

  QRational ratfun(long long maxdeg = 4) {
    QPolynomial den = nonzero_poly(maxdeg);
    return ratfun_new(QLaurent(poly(maxdeg), range(-3, 3)), QLaurent(den, range(-3, 3)));
  }
  QRational nonzero_ratfun(long long maxdeg = 4) {
    for (;;) {
      QRational x = ratfun(maxdeg);
      if (!x.is_zero()) return x;
    }
  }

  std::mt19937_64 eng;
};

}  // namespace qtest
