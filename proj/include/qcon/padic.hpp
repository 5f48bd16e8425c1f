#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "bigrat.hpp"
#include "congruence.hpp"

namespace qcon {

/// Deterministic primality by trial division; desk-scale primes only.
inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

struct PadicValuation {
  bool finite = true;
  long long v = 0;

  bool operator==(const PadicValuation&) const = default;
  static PadicValuation infinite() { return {false, 0}; }
  static PadicValuation of(long long v) { return {true, v}; }
};

/// p-adic valuation of a rational; vp(0) is +infinity.
inline PadicValuation vp(const BigRat& x, long long p) {
  if (!is_prime(p)) throw InvalidParams("vp needs a prime p");
  if (x.is_zero()) return PadicValuation::infinite();
  BigInt pz(static_cast<long>(p));
  BigInt tmp;
  long long vn = static_cast<long long>(mpz_remove(tmp.get_mpz_t(), x.num().get_mpz_t(), pz.get_mpz_t()));
  long long vd = static_cast<long long>(mpz_remove(tmp.get_mpz_t(), x.den().get_mpz_t(), pz.get_mpz_t()));
  return PadicValuation::of(vn - vd);
}

inline BigInt pow_int(long long p, long long t) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(t));
  return r;
}

/// Residue of a p-adic integer x in [0, p^t), inverting the denominator.
inline BigInt mod_pow(const BigRat& x, long long p, long long t) {
  if (t < 1) throw InvalidParams("mod_pow needs t >= 1");
  PadicValuation v = vp(x, p);
  if (v.finite && v.v < 0)
    throw NotPAdicInteger(x.str() + " has negative " + std::to_string(p) + "-adic valuation");
  BigInt m = pow_int(p, t);
  BigInt num = x.num() % m;
  if (num < 0) num += m;
  BigInt dinv;
  if (mpz_invert(dinv.get_mpz_t(), x.den().get_mpz_t(), m.get_mpz_t()) == 0)
    throw NotPAdicInteger("denominator not invertible mod " + m.get_str());
  BigInt r = (num * dinv) % m;
  if (r < 0) r += m;
  return r;
}

/// Rising factorial (x)_k = x (x+1) ... (x+k-1).
inline BigRat poch_rat(const BigRat& x, long long k) {
  if (k < 0) throw InvalidParams("poch_rat length must be nonnegative");
  BigRat v(1);
  for (long long j = 0; j < k; ++j) v *= x + BigRat(j);
  return v;
}

namespace detail {

struct EulerTable {
  std::mutex mu;
  std::vector<std::vector<BigRat>> coeffs;  // coeffs[k][i] = [x^i] E_k(x)
};
inline EulerTable& euler_table() {
  static EulerTable t;
  return t;
}

inline BigRat binom_big(long long n, long long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRat(r);
}

/// Coefficients of E_k(x) via sum_j C(k,j) E_j(x) + E_k(x) = 2 x^k.
inline std::vector<BigRat> euler_coeffs(long long k) {
  auto& tab = euler_table();
  std::scoped_lock lock(tab.mu);
  while (static_cast<long long>(tab.coeffs.size()) <= k) {
    long long j = static_cast<long long>(tab.coeffs.size());
    std::vector<BigRat> c(static_cast<std::size_t>(j) + 1);
    c[static_cast<std::size_t>(j)] = BigRat(2);
    for (long long i = 0; i < j; ++i) {
      const BigRat b = binom_big(j, i);
      const auto& ei = tab.coeffs[static_cast<std::size_t>(i)];
      for (std::size_t u = 0; u < ei.size(); ++u) c[u] -= b * ei[u];
    }
    for (auto& v : c) v /= BigRat(2);
    tab.coeffs.push_back(std::move(c));
  }
  return tab.coeffs[static_cast<std::size_t>(k)];
}

}  // namespace detail

/// E_k(x), the k-th Euler polynomial evaluated at a rational point.
inline BigRat euler_poly(long long k, const BigRat& x) {
  if (k < 0) throw InvalidParams("Euler polynomial index must be nonnegative");
  const auto c = detail::euler_coeffs(k);
  BigRat v;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

/// E_k = 2^k E_k(1/2), the k-th Euler number.
inline BigRat euler_number(long long k) {
  return BigRat(2).pow(k) * euler_poly(k, BigRat(1, 2));
}

/// Least nonnegative residue of -alpha mod p for a p-adic integer alpha.
inline long long neg_residue(const BigRat& alpha, long long p) {
  PadicValuation v = vp(alpha, p);
  if (v.finite && v.v < 0)
    throw NotPAdicInteger(alpha.str() + " is not a " + std::to_string(p) + "-adic integer");
  BigInt r = mod_pow(-alpha, p, 1);
  return r.get_si();
}

/// Prime-power context for residue checks.
struct PadicParams {
  long long p = 5;
  long long s = 1;
  long long t = 1;

  static PadicParams make(long long p, long long s, long long t) {
    if (!is_prime(p) || p <= 3) throw InvalidParams("p must be a prime > 3");
    if (s < 1 || t < 1) throw InvalidParams("s and t must be positive");
    return {p, s, t};
  }
};

enum class PTrunc { Short, Full };
inline const char* ptrunc_name(PTrunc t) { return t == PTrunc::Short ? "m" : "full"; }

enum class VHVariant { B2, E2, F2 };
inline const char* vh_name(VHVariant v) {
  switch (v) {
    case VHVariant::B2: return "B2";
    case VHVariant::E2: return "E2";
    case VHVariant::F2: return "F2";
  }
  return "?";
}

namespace detail {

inline Verdict residue_verdict(const BigRat& lhs, const BigRat& rhs, long long p, long long t) {
  BigInt lm = mod_pow(lhs, p, t);
  BigInt rm = mod_pow(rhs, p, t);
  std::string mod = std::to_string(p) + "^" + std::to_string(t);
  if (lm == rm)
    return Verdict::pass(lm.get_str() + " = " + rm.get_str() + " (mod " + mod + ")");
  return Verdict::fail("lhs = " + lm.get_str() + " but rhs = " + rm.get_str() + " (mod " +
                       mod + ")");
}

inline BigRat factorial(long long k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return BigRat(r);
}

}  // namespace detail

/// The three classical truncated sums modulo p^3.
inline Verdict verify_vanhamme(long long p, VHVariant variant) {
  if (!is_prime(p) || p <= 3) throw InvalidParams("vanhamme needs a prime p > 3");
  long long denom = variant == VHVariant::B2 ? 2 : (variant == VHVariant::E2 ? 3 : 4);
  if (variant == VHVariant::E2 && p % 3 != 1)
    throw InvalidParams("E2 needs p = 1 (mod 3)");
  if (variant == VHVariant::F2 && p % 4 != 1)
    throw InvalidParams("F2 needs p = 1 (mod 4)");
  const long long M = (p - 1) / denom;
  const BigRat base(1, denom);
  BigRat lhs;
  for (long long k = 0; k <= M; ++k) {
    BigRat term = BigRat(2 * denom * k + 1) * poch_rat(base, k).pow(3) /
                  detail::factorial(k).pow(3);
    lhs += (k % 2 == 0) ? term : -term;
  }
  BigRat rhs(p);
  if (variant == VHVariant::B2 && ((p - 1) / 2) % 2 != 0) rhs = -rhs;
  if (variant == VHVariant::F2 && ((p - 1) / 4) % 2 != 0) rhs = -rhs;
  return detail::residue_verdict(lhs, rhs, p, 3);
}

/// The refined B2 sum modulo p^4, with the Euler-number correction term.
inline Verdict verify_sun(long long p, PTrunc trunc) {
  if (!is_prime(p) || p <= 3) throw InvalidParams("sun needs a prime p > 3");
  const long long M = trunc == PTrunc::Short ? (p - 1) / 2 : p - 1;
  BigRat lhs;
  for (long long k = 0; k <= M; ++k) {
    BigRat term = BigRat(4 * k + 1) * poch_rat(BigRat(1, 2), k).pow(3) /
                  detail::factorial(k).pow(3);
    lhs += (k % 2 == 0) ? term : -term;
  }
  BigRat rhs = BigRat(((p - 1) / 2) % 2 == 0 ? p : -p) +
               BigRat(p).pow(3) * euler_number(p - 3);
  return detail::residue_verdict(lhs, rhs, p, 4);
}

/// The parametric extension at a p-adic integer alpha, modulo p^4.
inline Verdict verify_guowang(long long p, const BigRat& alpha, PTrunc trunc) {
  if (!is_prime(p) || p <= 3) throw InvalidParams("guowang needs a prime p > 3");
  const long long la = neg_residue(alpha, p);
  const long long M = trunc == PTrunc::Short ? la : p - 1;
  BigRat lhs;
  for (long long k = 0; k <= M; ++k) {
    BigRat term = (BigRat(2 * k) + alpha) * poch_rat(alpha, k).pow(3) /
                  detail::factorial(k).pow(3);
    lhs += (k % 2 == 0) ? term : -term;
  }
  BigRat shifted = alpha + BigRat(la);
  BigRat rhs = (la % 2 == 0 ? shifted : -shifted) +
               shifted.pow(3) * euler_poly(p - 3, alpha);
  return detail::residue_verdict(lhs, rhs, p, 4);
}

/// The prime-power corollary modulo p^{s+3}.
inline Verdict verify_corollary(long long p, long long s, long long d, long long r,
                                PTrunc trunc) {
  if (!is_prime(p) || p <= 3) throw InvalidParams("corollary needs a prime p > 3");
  if (s < 1) throw InvalidParams("corollary needs s >= 1");
  if (d < 1 || d % p == 0) throw InvalidParams("corollary needs d >= 1 with p not dividing d");
  if (gcd_ll(r, d) != 1) throw InvalidParams("gcd(r, d) must be 1");
  const BigInt ps = pow_int(p, s);
  BigInt dinv;
  BigInt dz(static_cast<long>(d));
  mpz_invert(dinv.get_mpz_t(), dz.get_mpz_t(), ps.get_mpz_t());
  BigInt mz = ((BigInt(static_cast<long>(-r)) * dinv) % ps + ps) % ps;
  const long long m = mz.get_si();
  const long long M = trunc == PTrunc::Short ? m : ps.get_si() - 1;
  const BigRat base(r, d);
  BigRat lhs;
  for (long long k = 0; k <= M; ++k) {
    BigRat term = BigRat(2 * d * k + r) * poch_rat(base, k).pow(3) /
                  detail::factorial(k).pow(3);
    lhs += (k % 2 == 0) ? term : -term;
  }
  BigRat inner;
  for (long long k = 1; k <= m; ++k) {
    BigRat t = BigRat(1, k * k);
    inner += (k % 2 == 0) ? t : -t;
  }
  const long long sign = m % 2 == 0 ? 1 : -1;
  BigRat rhs = BigRat(sign * (m * d + r)) +
               BigRat(2 * sign, d * d) * BigRat(m * d + r).pow(3) * inner;
  return detail::residue_verdict(lhs, rhs, p, s + 3);
}

}  // namespace qcon
