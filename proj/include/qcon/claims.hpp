#pragma once

#include <optional>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "qobjects.hpp"

namespace qcon {

enum class ClaimId {
  Sym3,
  ModPhi2,
  LiangduanA,
  Truncon,
  Denoms,
  Fmm,
  Gm1k,
  Identity,
  IdentityRec,
  JacksonTrunc,
  WZRelation,
  Telescoping,
  MainTh,
  Guo2018,
  Guo2022,
};

inline const char* claim_name(ClaimId c) {
  switch (c) {
    case ClaimId::Sym3: return "sym3";
    case ClaimId::ModPhi2: return "modphi2";
    case ClaimId::LiangduanA: return "liangduan";
    case ClaimId::Truncon: return "truncon";
    case ClaimId::Denoms: return "denoms";
    case ClaimId::Fmm: return "fmm";
    case ClaimId::Gm1k: return "gm1k";
    case ClaimId::Identity: return "identity";
    case ClaimId::IdentityRec: return "identityrec";
    case ClaimId::JacksonTrunc: return "jackson";
    case ClaimId::WZRelation: return "wz";
    case ClaimId::Telescoping: return "telescoping";
    case ClaimId::MainTh: return "mainth";
    case ClaimId::Guo2018: return "guo2018";
    case ClaimId::Guo2022: return "guo2022";
  }
  return "?";
}

inline std::optional<ClaimId> claim_from_name(const std::string& s) {
  static const std::pair<const char*, ClaimId> table[] = {
      {"sym3", ClaimId::Sym3},           {"modphi2", ClaimId::ModPhi2},
      {"liangduan", ClaimId::LiangduanA}, {"truncon", ClaimId::Truncon},
      {"denoms", ClaimId::Denoms},       {"fmm", ClaimId::Fmm},
      {"gm1k", ClaimId::Gm1k},           {"identity", ClaimId::Identity},
      {"identityrec", ClaimId::IdentityRec}, {"jackson", ClaimId::JacksonTrunc},
      {"wz", ClaimId::WZRelation},       {"telescoping", ClaimId::Telescoping},
      {"mainth", ClaimId::MainTh},       {"guo2018", ClaimId::Guo2018},
      {"guo2022", ClaimId::Guo2022},
  };
  for (const auto& [name, id] : table)
    if (s == name) return id;
  return std::nullopt;
}

namespace detail {

inline long long c2(long long x) { return x * (x - 1) / 2; }

/// Raw summand of the WZ pair as a QTerm; nullopt when the value is zero by
/// the negative-index reciprocal rule.
inline std::optional<QTerm> wz_qterm(bool is_f, long long k, long long l, long long d,
                                     long long r, const BigRat& scale) {
  if (k < 0 || l > k || (!is_f && k == 0)) return std::nullopt;
  QTerm t;
  t.coeff = ((k + l) % 2 == 0) ? scale : -scale;
  t.qpow = d * c2(k - l + 1) - r * k + r * l;
  t.times_poch(r, d, k);
  t.times_poch(r, d, k);
  if (is_f) {
    t.times_poch(r, d, k + l);
    t.times_qint(2 * d * k + r);
    t.over_poch(d, d, k);
    t.over_poch(d, d, k);
  } else {
    t.times_poch(r, d, k + l - 1);
    t.den.push_back(1);
    t.over_poch(d, d, k - 1);
    t.over_poch(d, d, k - 1);
  }
  t.over_poch(d, d, k - l);
  t.over_poch(r, d, l);
  t.over_poch(r, d, l);
  return t;
}

inline void add_opt(QTermSum& sum, const std::optional<QTerm>& t) {
  if (t) sum.add(*t);
}

/// Summand of the indeterminate-a sum shared by the bivariate lemmas.
inline ATerm a_sum_term(long long d, long long r, long long k) {
  ATerm t;
  t.coeff = BigRat(k % 2 == 0 ? 1 : -1);
  t.qpow = d * c2(k + 1) - k * r;
  t.times_apoch(r, d, k);
  t.times_ainv_poch(r, d, k);
  t.times_poch(r, d, k);
  t.times_qint(2 * d * k + r);
  t.over_apoch(d, d, k);
  t.over_ainv_poch(d, d, k);
  t.over_poch(d, d, k);
  return t;
}

/// Same summand specialized at a = q^E, with an overall sign.
inline QTerm a_sum_term_at(long long d, long long r, long long k, long long E, int sign) {
  QTerm t;
  t.coeff = BigRat((k % 2 == 0) ? sign : -sign);
  t.qpow = d * c2(k + 1) - k * r;
  t.times_poch(E + r, d, k);
  t.times_poch(r - E, d, k);
  t.times_poch(r, d, k);
  t.times_qint(2 * d * k + r);
  t.over_poch(E + d, d, k);
  t.over_poch(d - E, d, k);
  t.over_poch(d, d, k);
  return t;
}

}  // namespace detail

/// Integer exponent congruence behind the index reflection of the truncated
/// sum: both exponent expressions agree modulo n for 0 <= k <= n-m-2.
inline Verdict verify_sym3(long long n, long long d, long long r, long long k) {
  ClaimParams p = ClaimParams::make(n, d, r);
  if (k < 0 || k > n - p.m - 2)
    throw InvalidParams("k out of range for sym3: " + std::to_string(k));
  using detail::c2;
  long long lhs = 3 * d * c2(n - p.m - 1) + d * c2(n - k) + d * k - 2 * d - 2 * k * r + 2 * r;
  long long rhs = d * c2(p.m + k + 2) - (p.m + 1 + k) * r;
  long long diff = (lhs - rhs) % n;
  if (diff == 0) return Verdict::pass();
  return Verdict::fail("exponent mismatch at k=" + std::to_string(k) + ": difference " +
                       std::to_string(lhs - rhs) + " != 0 mod " + std::to_string(n));
}

/// All k in [0, n-m-2]; vacuously true when the range is empty.
inline Verdict verify_sym3_all(long long n, long long d, long long r) {
  ClaimParams p = ClaimParams::make(n, d, r);
  Verdict v = Verdict::pass();
  if (n - p.m - 2 < 0) return Verdict::pass("empty range");
  for (long long k = 0; k <= n - p.m - 2; ++k) v.merge(verify_sym3(n, d, r, k));
  return v;
}

/// The tail k = m+1..n-1 of the a-parametric sum vanishes mod Phi_n(q)^2.
inline Verdict verify_modphi2(long long n, long long d, long long r) {
  if (n <= 1) throw InvalidParams("modphi2 needs n > 1");
  ClaimParams p = ClaimParams::make(n, d, r);
  if (p.m >= n - 1) return Verdict::pass("empty sum");
  ATermSum sum;
  for (long long k = p.m + 1; k <= n - 1; ++k) sum.add(detail::a_sum_term(d, r, k));
  return a_congruent(sum.reduce(), ABiRational(), BiModulus::phi_power(n, 2));
}

/// The m- and (n-1)-truncations of the a-parametric sum agree modulo
/// [n] Phi_n (a - q^{md+r})(1 - a q^{md+r}), and agree exactly at the two
/// specializations a = q^{+-(md+r)}.
inline Verdict verify_liangduan(long long n, long long d, long long r) {
  if (n <= 1) throw InvalidParams("liangduan needs n > 1");
  ClaimParams p = ClaimParams::make(n, d, r);
  const long long E = p.m * d + r;
  if (p.m >= n - 1) return Verdict::pass("both truncations identical");
  ATermSum tail;
  for (long long k = p.m + 1; k <= n - 1; ++k) tail.add(detail::a_sum_term(d, r, k));
  Verdict v = a_congruent(tail.reduce(), ABiRational(), BiModulus::qint_phi_linear(n, E));
  if (!v.passed()) return v;
  for (long long spec : {E, -E}) {
    QTermSum diff;
    for (long long k = 0; k <= p.m; ++k) diff.add(detail::a_sum_term_at(d, r, k, spec, 1));
    for (long long k = 0; k <= n - 1; ++k) diff.add(detail::a_sum_term_at(d, r, k, spec, -1));
    if (!diff.numerator_is_zero())
      return Verdict::fail("truncations differ at a = q^" + std::to_string(spec) + ": " +
                           diff.reduce().str());
  }
  return Verdict::pass();
}

/// The m- and (n-1)-truncations of the main sum agree mod [n] Phi_n(q)^3.
inline Verdict verify_truncon(long long n, long long d, long long r) {
  ClaimParams am = ClaimParams::make(n, d, r, MVariant::AtM);
  ClaimParams full = ClaimParams::make(n, d, r, MVariant::AtNMinus1);
  if (n == 1) {
    return mainth_lhs(am) == mainth_lhs(full)
               ? Verdict::pass("both sums identical")
               : Verdict::fail("truncations differ at n = 1");
  }
  return congruent(mainth_lhs(am), mainth_lhs(full), modulus(n, 3));
}

/// Coprimality of the reduced denominators feeding the boundary-term lemmas.
/// Parts (i) and (ii) are checked against 1 - q^n; part (iii) against
/// [n] Phi_n^3 by default and against 1 - q^n in strict mode.
inline Verdict verify_denoms(long long n, long long d, long long r, bool strict = false) {
  if (n <= 1) throw InvalidParams("denoms needs n > 1");
  ClaimParams p = ClaimParams::make(n, d, r);
  const long long m = p.m;
  const QPolynomial one_minus_qn = QPolynomial::one_minus_qpow(static_cast<std::size_t>(n));
  Verdict v = Verdict::pass();
  {
    QTermSum s;
    QTerm t;
    t.times_poch(r, d, m);
    t.times_poch(r + (m + 1) * d, d, m);
    t.over_poch(d, d, m);
    t.over_poch(d, d, m);
    s.add(t);
    Verdict part = denom_coprime(s.reduce(), one_minus_qn);
    if (!part.passed()) part.witness = "part (i): " + part.witness;
    v.merge(part);
  }
  for (long long k = 1; k <= m; ++k) {
    QTermSum s;
    QTerm t;
    t.num.push_back(m * d + r);
    t.den.push_back(d * k);
    s.add(t);
    Verdict part = denom_coprime(s.reduce(), one_minus_qn);
    if (!part.passed()) part.witness = "part (ii) k=" + std::to_string(k) + ": " + part.witness;
    v.merge(part);
  }
  const QPolynomial target = strict ? one_minus_qn : modulus(n, 3);
  for (long long k = 1; k <= m; ++k) {
    QTermSum s;
    QTerm t;
    t.times_qint(m * d + r);
    t.times_poch(d, d, k - 1);
    t.over_poch(-m * d, d, k);
    s.add(t);
    Verdict part = denom_coprime(s.reduce(), target);
    if (!part.passed())
      part.witness = "part (iii) k=" + std::to_string(k) + ": " + part.witness;
    v.merge(part);
  }
  return v;
}

/// Boundary term F(m,m) against its closed form mod [n] Phi_n(q)^3.
inline Verdict verify_fmm(long long n, long long d, long long r) {
  if (n <= 1) throw InvalidParams("fmm needs n > 1");
  ClaimParams p = ClaimParams::make(n, d, r);
  const long long m = p.m;
  QTermSum rhs;
  const long long opow = d * detail::c2(m) + m * r;
  const BigRat outer(m % 2 == 0 ? 1 : -1);
  {
    QTerm t;
    t.coeff = outer;
    t.qpow = opow;
    t.times_qint(m * d + r);
    rhs.add(t);
  }
  for (long long k = 1; k <= m; ++k) {
    QTerm t;
    t.coeff = -outer;
    t.qpow = opow + d * k;
    t.times_qint(m * d + r);
    t.times_qint(m * d + r);
    t.times_qint(m * d + r);
    t.over_qint(d * k);
    t.over_qint(d * k);
    rhs.add(t);
  }
  return congruent(wz_F(m, m, d, r), rhs.reduce(), modulus(n, 3));
}

/// G(m+1, k) against its closed form mod [n] Phi_n(q)^3 for k = 1..m.
inline Verdict verify_gm1k(long long n, long long d, long long r) {
  if (n <= 1) throw InvalidParams("gm1k needs n > 1");
  ClaimParams p = ClaimParams::make(n, d, r);
  const long long m = p.m;
  if (m == 0) return Verdict::inapplicable("empty range: m = 0");
  Verdict v = Verdict::pass();
  for (long long k = 1; k <= m; ++k) {
    QTermSum rhs;
    QTerm t;
    t.qpow = -m * d * k;
    t.times_qint(m * d + r);
    t.times_qint(m * d + r);
    t.times_qint(m * d + r);
    t.times_poch(d, d, k);
    t.over_qint(d * k);
    t.over_qint(d * k - (m + 1) * d);
    t.over_poch(-m * d, d, k);
    rhs.add(t);
    Verdict part = congruent(wz_G(m + 1, k, d, r), rhs.reduce(), modulus(n, 3));
    if (!part.passed()) part.witness = "k=" + std::to_string(k) + ": " + part.witness;
    v.merge(part);
  }
  return v;
}

/// Exact identity between the inverse-binomial sum and its split form.
inline Verdict verify_identity(long long n) {
  if (n < 1) throw InvalidParams("identity needs n >= 1");
  using detail::c2;
  std::vector<QTerm> terms;
  const BigRat lsign(n % 2 == 0 ? 1 : -1);
  for (long long k = 1; k <= n; ++k) {
    QTerm t;
    t.coeff = lsign;
    t.qpow = c2(n + 1) - n * k;
    t.times_poch(1, 1, k);
    t.over_qint(k);
    t.over_qint(k - n - 1);
    t.over_poch(-n, 1, k);
    terms.push_back(std::move(t));
  }
  for (long long k = 1; k <= n; ++k) {
    QTerm t;  // alternating part of the right side, negated
    t.coeff = BigRat(k % 2 == 0 ? -1 : 1);
    t.qpow = c2(k + 1);
    t.num.push_back(2 * k);
    t.den.push_back(k);
    t.over_qint(k);
    t.over_qint(k);
    terms.push_back(std::move(t));
    QTerm u;  // plain part of the right side, negated
    u.coeff = BigRat(-1);
    u.qpow = k;
    u.over_qint(k);
    u.over_qint(k);
    terms.push_back(std::move(u));
  }
  QTermSum diff = QTermSum::tree_sum(terms);
  if (diff.numerator_is_zero()) return Verdict::pass();
  return Verdict::fail("sides differ by " + diff.reduce().str());
}

/// The q-binomial form of the same sum satisfies its first-order recurrence.
inline Verdict verify_identity_rec(long long n) {
  if (n < 1) throw InvalidParams("identity recurrence needs n >= 1");
  using detail::c2;
  std::vector<QTerm> terms;
  auto add_binform = [&terms](long long nu, int sign) {
    const BigRat s(((nu % 2 == 0) ? 1 : -1) * sign);
    for (long long k = 1; k <= nu; ++k) {
      QTerm t;
      t.coeff = (k % 2 == 0) ? s : -s;
      t.qpow = c2(nu + 1) + k * (1 - k) / 2;
      t.over_qint(k);
      t.over_qint(k - nu - 1);
      t.over_poch(1, 1, nu);
      t.times_poch(1, 1, k);
      t.times_poch(1, 1, nu - k);
      terms.push_back(std::move(t));
    }
  };
  add_binform(n + 1, +1);
  add_binform(n, -1);
  {
    QTerm t;
    t.coeff = BigRat(-1);
    t.qpow = n + 1;
    t.over_qint(n + 1);
    t.over_qint(n + 1);
    terms.push_back(std::move(t));
    QTerm u;
    u.coeff = BigRat(n % 2 == 0 ? 1 : -1);  // -(-1)^{n+1}
    u.qpow = c2(n + 2);
    u.num.push_back(2 * (n + 1));
    u.den.push_back(n + 1);
    u.over_qint(n + 1);
    u.over_qint(n + 1);
    terms.push_back(std::move(u));
  }
  QTermSum diff = QTermSum::tree_sum(terms);
  if (diff.numerator_is_zero()) return Verdict::pass();
  return Verdict::fail("recurrence residue " + diff.reduce().str());
}

/// Terminating summation: the m-truncated specialized sum equals
/// [r](q^{d+r};q^d)_m / (q^{d-md-r};q^d)_m exactly.
inline Verdict verify_jackson_trunc(long long n, long long d, long long r) {
  ClaimParams p = ClaimParams::make(n, d, r);
  const long long m = p.m;
  using detail::c2;
  try {
    QTermSum diff;
    for (long long k = 0; k <= m; ++k) {
      QTerm t;
      t.coeff = BigRat(k % 2 == 0 ? 1 : -1);
      t.qpow = d * c2(k + 1) - k * r;
      t.times_poch(-m * d, d, k);
      t.times_poch(m * d + 2 * r, d, k);
      t.times_poch(r, d, k);
      t.times_qint(2 * d * k + r);
      t.over_poch(m * d + d + r, d, k);
      t.over_poch(d - m * d - r, d, k);
      t.over_poch(d, d, k);
      diff.add(t);
    }
    QTerm t;
    t.coeff = BigRat(-1);
    t.times_qint(r);
    t.times_poch(d + r, d, m);
    t.over_poch(d - m * d - r, d, m);
    diff.add(t);
    if (diff.numerator_is_zero()) return Verdict::pass();
    return Verdict::fail("sides differ by " + diff.reduce().str());
  } catch (const DivisionByZero& e) {
    return Verdict::inapplicable(std::string("zero denominator factor: ") + e.what());
  }
}

/// The WZ pair relation F(k,l-1) - F(k,l) = G(k+1,l) - G(k,l), exactly, on
/// the grid [0,kmax] x [1,lmax].
inline Verdict verify_wz_relation(long long d, long long r, long long kmax, long long lmax) {
  if (d < 1) throw InvalidParams("wz needs d >= 1");
  if (gcd_ll(r, d) != 1) throw InvalidParams("gcd(r, d) must be 1");
  if (kmax < 1 || lmax < 1) throw InvalidParams("wz grid bounds must be >= 1");
  for (long long k = 0; k <= kmax; ++k) {
    for (long long l = 1; l <= lmax; ++l) {
      QTermSum diff;
      detail::add_opt(diff, detail::wz_qterm(true, k, l - 1, d, r, BigRat(1)));
      detail::add_opt(diff, detail::wz_qterm(true, k, l, d, r, BigRat(-1)));
      detail::add_opt(diff, detail::wz_qterm(false, k + 1, l, d, r, BigRat(-1)));
      detail::add_opt(diff, detail::wz_qterm(false, k, l, d, r, BigRat(1)));
      if (!diff.numerator_is_zero())
        return Verdict::fail("relation breaks at (k,l) = (" + std::to_string(k) + "," +
                             std::to_string(l) + "): " + diff.reduce().str());
    }
  }
  return Verdict::pass();
}

/// Double-summation certificate: sum F(k,0) = F(m,m) + sum G(m+1,k), exactly.
inline Verdict verify_telescoping(long long n, long long d, long long r) {
  ClaimParams p = ClaimParams::make(n, d, r);
  const long long m = p.m;
  QTermSum diff;
  for (long long k = 0; k <= m; ++k)
    detail::add_opt(diff, detail::wz_qterm(true, k, 0, d, r, BigRat(1)));
  detail::add_opt(diff, detail::wz_qterm(true, m, m, d, r, BigRat(-1)));
  for (long long k = 1; k <= m; ++k)
    detail::add_opt(diff, detail::wz_qterm(false, m + 1, k, d, r, BigRat(-1)));
  if (diff.numerator_is_zero()) return Verdict::pass();
  return Verdict::fail("telescoped sides differ by " + diff.reduce().str());
}

/// The refined congruence itself: truncated sum against the closed side,
/// mod [n] Phi_n(q)^3, for either truncation point. At n = 1 the modulus is
/// plain (q-1)^3 and the difference is identically zero.
inline Verdict verify_mainth(long long n, long long d, long long r, MVariant variant) {
  ClaimParams p = ClaimParams::make(n, d, r, variant);
  return congruent(mainth_lhs(p), mainth_rhs(p), modulus(n, 3));
}

/// Half-truncated d=2, r=1 specialization against its single-term closed
/// form, mod [n] Phi_n(q)^2.
inline Verdict verify_guo2018(long long n) {
  if (n <= 1 || n % 2 == 0) throw InvalidParams("guo2018 needs odd n > 1");
  const long long h = (n - 1) / 2;
  QTermSum lhs;
  detail::add_main_sum_terms(lhs, 2, 1, 0, h, BigRat(1));
  QTermSum rhs;
  QTerm t;
  t.coeff = BigRat(h % 2 == 0 ? 1 : -1);
  t.qpow = (n - 1) * (n - 1) / 4;
  t.times_qint(n);
  rhs.add(t);
  return congruent(lhs.reduce(), rhs.reduce(), modulus(n, 2));
}

/// d=2, r=1 refinement with the extra inverse-binomial sum on the right,
/// mod [n] Phi_n(q)^3; AtM is the half truncation (n-1)/2.
inline Verdict verify_guo2022(long long n, MVariant variant) {
  if (n <= 1 || n % 2 == 0) throw InvalidParams("guo2022 needs odd n > 1");
  const long long h = (n - 1) / 2;
  const long long M = variant == MVariant::AtM ? h : n - 1;
  QTermSum lhs;
  detail::add_main_sum_terms(lhs, 2, 1, 0, M, BigRat(1));
  QTermSum rhs;
  const BigRat hsign(h % 2 == 0 ? 1 : -1);
  {
    QTerm t;
    t.coeff = hsign;
    t.qpow = (1 - n * n) / 4 + detail::c2(n);
    t.times_qint(n);
    rhs.add(t);
  }
  {
    QTerm t;  // (n^2-1)(1-q)^2 [n]^3 / 24 = (n^2-1)(1-q^n)^3 / (24 (1-q))
    t.coeff = hsign * BigRat(n * n - 1, 24);
    t.qpow = (1 - n * n) / 4;
    t.num.push_back(n);
    t.num.push_back(n);
    t.num.push_back(n);
    t.den.push_back(1);
    rhs.add(t);
  }
  for (long long k = 1; k <= h; ++k) {
    QTerm t;
    t.qpow = k;
    t.times_qint(n);
    t.times_qint(n);
    t.times_qint(n);
    t.times_poch(2, 2, k);
    t.over_qint(2 * k);
    t.over_qint(2 * k - 1);
    t.over_poch(1, 2, k);
    rhs.add(t);
  }
  return congruent(lhs.reduce(), rhs.reduce(), modulus(n, 3));
}

}  // namespace qcon
