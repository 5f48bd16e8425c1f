#pragma once

#include <numeric>
#include <string>

#include "aterms.hpp"
#include "bivariate.hpp"
#include "cyclotomic.hpp"
#include "ratfun.hpp"

namespace qcon {

inline long long gcd_ll(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Least nonnegative m with m*d = -r (mod n). Requires gcd(n, d) = 1.
inline long long residue_m(long long n, long long d, long long r) {
  if (n < 1 || d < 1) throw InvalidParams("n and d must be positive");
  if (gcd_ll(n, d) != 1) throw InvalidParams("gcd(n, d) must be 1");
  if (n == 1) return 0;
  // inverse of d mod n by the extended Euclidean algorithm
  long long t = 0, newt = 1, a = n, b = d % n;
  while (b != 0) {
    long long quo = a / b;
    long long tmp = t - quo * newt;
    t = newt;
    newt = tmp;
    tmp = a - quo * b;
    a = b;
    b = tmp;
  }
  long long dinv = ((t % n) + n) % n;
  long long mr = ((-r % n) + n) % n;
  return (mr * dinv) % n;
}

enum class MVariant { AtM, AtNMinus1 };

inline const char* mvariant_name(MVariant v) { return v == MVariant::AtM ? "m" : "full"; }

/// Parameter bundle for the truncated-sum claims: gcd(n,d) = gcd(r,d) = 1,
/// with m the least nonnegative residue of -r/d mod n.
struct ClaimParams {
  long long n = 1;
  long long d = 1;
  long long r = 1;
  long long m = 0;
  MVariant variant = MVariant::AtM;

  static ClaimParams make(long long n, long long d, long long r,
                          MVariant variant = MVariant::AtM) {
    if (n < 1) throw InvalidParams("n must be positive");
    if (d < 1) throw InvalidParams("d must be positive");
    if (gcd_ll(n, d) != 1) throw InvalidParams("gcd(n, d) must be 1");
    if (gcd_ll(r, d) != 1) throw InvalidParams("gcd(r, d) must be 1");
    ClaimParams p;
    p.n = n;
    p.d = d;
    p.r = r;
    p.m = residue_m(n, d, r);
    p.variant = variant;
    return p;
  }

  long long truncation() const { return variant == MVariant::AtM ? m : n - 1; }
  std::string str() const {
    return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " r=" + std::to_string(r) +
           " M=" + mvariant_name(variant);
  }
};

/// q-integer [k] = (1 - q^k)/(1 - q); a Laurent polynomial for k < 0.
inline QLaurent q_int(long long k) {
  if (k == 0) return QLaurent();
  if (k > 0) {
    std::vector<BigRat> c(static_cast<std::size_t>(k), BigRat(1));
    return QLaurent(QPolynomial(std::move(c)));
  }
  // [-k] entries at exponents k..-1, all -1
  std::vector<BigRat> c(static_cast<std::size_t>(-k), BigRat(-1));
  return QLaurent(QPolynomial(std::move(c)), k);
}

/// (q^s; q^d)_k = prod_{j=0}^{k-1} (1 - q^{s+jd}), k >= 0.
inline QLaurent q_poch(long long s, long long d, long long k) {
  if (d < 1) throw InvalidParams("Pochhammer base step must be positive");
  if (k < 0) throw InvalidParams("q_poch length must be nonnegative");
  QLaurent p = QLaurent::one();
  for (long long j = 0; j < k; ++j) {
    p = p.times_one_minus_qpow(s + j * d);
    if (p.is_zero()) break;
  }
  return p;
}

enum class ASign { A, AInverse };

/// (a q^e; q^d)_k for ASign::A, (q^e/a; q^d)_k for ASign::AInverse, the latter
/// returned with its a-denominator cleared.
inline ABiRational a_poch(long long e, ASign sign, long long d, long long k) {
  if (d < 1) throw InvalidParams("Pochhammer base step must be positive");
  if (k < 0) throw InvalidParams("a_poch length must be nonnegative");
  ATermSum sum;
  ATerm t;
  if (sign == ASign::A) {
    t.times_apoch(e, d, k);
  } else {
    t.times_ainv_poch(e, d, k);
  }
  sum.add(t);
  return sum.reduce();
}

/// Gaussian binomial coefficient; 0 outside 0 <= k <= n, a polynomial inside.
inline QPolynomial q_binom(long long n, long long k) {
  if (n < 0) throw InvalidParams("q_binom upper index must be nonnegative");
  if (k < 0 || k > n) return QPolynomial();
  QTermSum sum;
  QTerm t;
  t.times_poch(1, 1, n);
  t.over_poch(1, 1, k);
  t.over_poch(1, 1, n - k);
  sum.add(t);
  QRational r = sum.reduce();
  // the quotient of Pochhammers is a genuine polynomial with shift 0
  return r.num().shifted_up(static_cast<std::size_t>(r.shift()));
}

/// [n] * Phi_n(q)^e, expanded.
inline QPolynomial modulus(long long n, long long e) {
  if (n < 1) throw InvalidParams("modulus index must be positive");
  if (e < 0) throw InvalidParams("modulus exponent must be nonnegative");
  QPolynomial p = cyclotomic(n).pow(static_cast<unsigned>(e));
  for (long long t : divisors(n))
    if (t > 1) p *= cyclotomic(t);
  return p;
}

namespace detail {

/// Shared shape of the WZ pair: sign, q-power and the Pochhammer factor lists.
/// `extra_qint` is the [2dk+r] prefactor of F; G carries 1/(1-q) instead.
inline QRational wz_term(bool is_f, long long k, long long l, long long d, long long r) {
  if (k < 0) throw InvalidParams("WZ terms need k >= 0");
  if (d < 1) throw InvalidParams("WZ terms need d >= 1");
  if (l > k) return QRational();          // reciprocal of (q^d;q^d)_{k-l} vanishes
  if (!is_f && k == 0) return QRational();  // reciprocal of (q^d;q^d)_{-1} vanishes
  QTerm t;
  t.coeff = BigRat(((k + l) % 2 == 0) ? 1 : -1);
  long long kl = k - l + 1;
  t.qpow = d * (kl * (kl - 1) / 2) - r * k + r * l;
  t.times_poch(r, d, k);
  t.times_poch(r, d, k);
  if (is_f) {
    t.times_poch(r, d, k + l);
    t.times_qint(2 * d * k + r);
    t.over_poch(d, d, k);
    t.over_poch(d, d, k);
  } else {
    t.times_poch(r, d, k + l - 1);
    t.den.push_back(1);  // the 1/(1-q) prefactor
    t.over_poch(d, d, k - 1);
    t.over_poch(d, d, k - 1);
  }
  t.over_poch(d, d, k - l);
  t.over_poch(r, d, l);
  t.over_poch(r, d, l);
  QTermSum sum;
  sum.add(t);
  return sum.reduce();
}

}  // namespace detail

/// WZ pair certificate functions. F(k,l) vanishes for l > k; G(k,l) vanishes
/// for l > k and for k = 0.
inline QRational wz_F(long long k, long long l, long long d, long long r) {
  return detail::wz_term(true, k, l, d, r);
}
inline QRational wz_G(long long k, long long l, long long d, long long r) {
  return detail::wz_term(false, k, l, d, r);
}

/// One member of the WZ pair, addressed by kind and indices. The value is
/// zero whenever a reciprocal (q^d;q^d)_j with j < 0 appears.
struct WZTerm {
  enum class Kind { F, G };
  Kind kind = Kind::F;
  long long k = 0;
  long long l = 0;
  long long d = 1;
  long long r = 1;

  QRational value() const {
    return kind == Kind::F ? wz_F(k, l, d, r) : wz_G(k, l, d, r);
  }
};

namespace detail {

/// Summand shape of the main truncated sum:
///   (-1)^k q^{d C(k+1,2) - kr} [2dk+r] (q^r;q^d)_k^3 / (q^d;q^d)_k^3
/// appended to `sum` for k = 0..M, with the cube maintained incrementally.
/// The optional scale multiplies every term (used for difference sums).
inline void add_main_sum_terms(QTermSum& sum, long long d, long long r, long long from,
                               long long to, const BigRat& scale) {
  QLaurent cube = QLaurent::one();
  long long built = 0;  // factors of (q^r;q^d)_.^3 already in `cube`
  for (long long k = from; k <= to; ++k) {
    while (built < k && !cube.is_zero()) {
      QLaurent f = QLaurent::one().times_one_minus_qpow(r + built * d);
      cube = cube * f * f * f;
      ++built;
    }
    if (cube.is_zero()) return;  // all later numerators vanish too
    BigRat c = scale;
    if (k % 2 != 0) c = -c;
    QLaurent numpart = cube.scaled(c).mul_qpow(d * (k * (k + 1) / 2) - k * r);
    numpart = numpart.times_one_minus_qpow(2 * d * k + r);  // [2dk+r] numerator
    std::vector<long long> den;
    den.push_back(1);  // [2dk+r] denominator
    for (long long j = 1; j <= k; ++j) {
      den.push_back(j * d);
      den.push_back(j * d);
      den.push_back(j * d);
    }
    sum.add_with_numerator(std::move(numpart), den);
  }
}

/// Right-hand side terms of the main congruence, scaled.
inline void add_main_rhs_terms(QTermSum& sum, const ClaimParams& p, const BigRat& scale) {
  const long long m = p.m, d = p.d, r = p.r;
  BigRat outer = scale;
  if (m % 2 != 0) outer = -outer;
  const long long opow = d * (m * (m - 1) / 2) + m * r;
  {
    QTerm t;
    t.coeff = outer;
    t.qpow = opow;
    t.times_qint(m * d + r);
    sum.add(t);
  }
  for (long long k = 1; k <= m; ++k) {
    QTerm t;
    t.coeff = (k % 2 == 0) ? outer : -outer;
    t.qpow = opow + d * (k * (k + 1) / 2);
    t.times_qint(m * d + r);
    t.times_qint(m * d + r);
    t.times_qint(m * d + r);
    // (1 + q^{dk}) = (1 - q^{2dk})/(1 - q^{dk})
    t.num.push_back(2 * d * k);
    t.den.push_back(d * k);
    t.over_qint(d * k);
    t.over_qint(d * k);
    sum.add(t);
  }
}

}  // namespace detail

/// Truncated sum side of the main congruence, in lowest terms.
inline QRational mainth_lhs(const ClaimParams& p) {
  QTermSum sum;
  detail::add_main_sum_terms(sum, p.d, p.r, 0, p.truncation(), BigRat(1));
  return sum.reduce();
}

/// Closed side of the main congruence, in lowest terms.
inline QRational mainth_rhs(const ClaimParams& p) {
  QTermSum sum;
  detail::add_main_rhs_terms(sum, p, BigRat(1));
  return sum.reduce();
}

}  // namespace qcon
