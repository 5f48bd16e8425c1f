#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bivariate.hpp"
#include "cyclotomic.hpp"
#include "qobjects.hpp"
#include "ratfun.hpp"

namespace qcon {

enum class Status { Pass, Fail, Inapplicable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inapplicable: return "inapplicable";
  }
  return "?";
}

/// Structured verifier outcome. Fail and Inapplicable always carry a witness.
struct Verdict {
  Status status = Status::Pass;
  std::string witness;
  std::chrono::microseconds elapsed{0};

  static Verdict pass(std::string w = "") { return {Status::Pass, std::move(w), {}}; }
  static Verdict fail(std::string w) { return {Status::Fail, std::move(w), {}}; }
  static Verdict inapplicable(std::string w) { return {Status::Inapplicable, std::move(w), {}}; }

  bool passed() const { return status == Status::Pass; }

  /// Combines componentwise checks: any Fail dominates, then Inapplicable.
  Verdict& merge(const Verdict& o) {
    if (o.status == Status::Fail && status != Status::Fail) {
      status = o.status;
      witness = o.witness;
    } else if (o.status == Status::Inapplicable && status == Status::Pass) {
      status = o.status;
      witness = o.witness;
    } else if (status == Status::Pass && witness.empty()) {
      witness = o.witness;
    }
    return *this;
  }
};

namespace detail {

inline std::string short_poly(const QPolynomial& p) {
  if (p.degree() <= 24) return p.str();
  return "degree-" + std::to_string(p.degree()) + " polynomial, leading " +
         p.leading().str() + "*q^" + std::to_string(p.degree());
}

/// An irreducible factor of a modulus together with its multiplicity.
struct ModFactor {
  QPolynomial poly;
  int mult = 0;
  std::string label;
};

/// Splits a nonconstant modulus into q^k times cyclotomic factors; whatever
/// is left over is returned as `leftover` (constant when the split is full).
struct ModulusSplit {
  long long qpow = 0;
  std::vector<ModFactor> factors;
  QPolynomial leftover = QPolynomial::one();
  bool complete() const { return leftover.is_constant(); }
};

inline ModulusSplit split_modulus(const QPolynomial& mod) {
  ModulusSplit s;
  QPolynomial rest = mod.monic();
  long long low = rest.low_degree();
  if (low > 0) {
    s.qpow = low;
    rest = rest.shifted_down(static_cast<std::size_t>(low));
  }
  // Cyclotomic trial division pays off only at the modest degrees the claim
  // moduli have; larger inputs fall through to the generic path.
  if (rest.degree() <= 128) {
    const long long dmax = rest.degree();
    for (long long t = 1; t <= 2 * dmax * dmax + 8 && !rest.is_constant(); ++t) {
      if (euler_phi(t) > rest.degree()) continue;
      const QPolynomial& phi = cyclotomic(t);
      int mult = 0;
      while (true) {
        auto quot = rest.exact_div(phi);
        if (!quot) break;
        rest = std::move(*quot);
        ++mult;
      }
      if (mult > 0) s.factors.push_back({phi, mult, "Phi_" + std::to_string(t)});
    }
  }
  s.leftover = rest;
  return s;
}

/// Verdict for q^s * N0/D0 = 0 modulo a factored modulus, via per-factor
/// valuations. N0/D0 need not be in lowest terms; valuations of the value are
/// representation independent.
inline Verdict verdict_from_valuations(const QPolynomial& num0, const QPolynomial& den0,
                                       long long qshift, long long mod_qpow,
                                       const std::vector<ModFactor>& factors,
                                       const QPolynomial& mod) {
  if (num0.is_zero()) return Verdict::pass("difference is zero");
  Status st = Status::Pass;
  std::string witness;
  long long cancel_total = 0;
  QPolynomial reduced = num0;  // numerator with shared modulus factors cleared, for witnesses

  if (mod_qpow > 0) {
    long long vq = qshift + num0.low_degree() - den0.low_degree();
    if (vq < 0) return Verdict::inapplicable("denominator shares the factor q with the modulus");
    if (vq < mod_qpow) {
      st = Status::Fail;
      witness = "difference has q-valuation " + std::to_string(vq) + ", modulus needs " +
                std::to_string(mod_qpow);
    }
  }
  for (const auto& f : factors) {
    long long vden = poly_valuation(den0, f.poly);
    long long vnum = poly_valuation(num0, f.poly, vden + f.mult);
    long long v = vnum - vden;
    if (v < 0)
      return Verdict::inapplicable("reduced denominator shares " + f.label +
                                   " with the modulus");
    if (v < f.mult && st != Status::Fail) {
      st = Status::Fail;
      witness = f.label + " divides the difference " + std::to_string(v) +
                " times, modulus needs " + std::to_string(f.mult);
    }
    long long cancel = std::min(vnum, vden);
    for (long long i = 0; i < cancel; ++i) reduced = *reduced.exact_div(f.poly);
    cancel_total += cancel;
  }
  if (st == Status::Fail) {
    QPolynomial rem = reduced.divrem(mod).second;
    witness += "; residue " + short_poly(rem);
    return Verdict::fail(witness);
  }
  (void)cancel_total;
  return Verdict::pass();
}

}  // namespace detail

/// Congruence of rational functions modulo a nonconstant polynomial: the
/// lowest-terms numerator of x - y must be divisible by mod while the
/// denominator stays coprime to it. Laurent shifts are cleared through q,
/// which is sound because every in-scope modulus has unit constant term; a
/// q-divisible modulus is still handled via the q-valuation of the value.
inline Verdict congruent(const QRational& x, const QRational& y, const QPolynomial& mod) {
  if (mod.is_zero() || mod.is_constant())
    throw InvalidModulus("congruence modulus must be nonconstant");
  long long s = std::min(x.shift(), y.shift());
  QPolynomial num0 =
      x.num().shifted_up(static_cast<std::size_t>(x.shift() - s)) * y.den() -
      y.num().shifted_up(static_cast<std::size_t>(y.shift() - s)) * x.den();
  QPolynomial den0 = x.den() * y.den();
  if (num0.is_zero()) return Verdict::pass("difference is zero");

  auto split = detail::split_modulus(mod);
  if (split.complete())
    return detail::verdict_from_valuations(num0, den0, s, split.qpow, split.factors, mod);

  // Generic fallback for moduli outside the cyclotomic family: reduce to
  // lowest terms honestly, then test divisibility and coprimality.
  QPolynomial g = poly_gcd(num0, den0);
  if (!g.is_constant()) {
    num0 = *num0.exact_div(g);
    den0 = *den0.exact_div(g);
  }
  if (s > 0) {
    num0 = num0.shifted_up(static_cast<std::size_t>(s));
  } else if (s < 0) {
    den0 = den0.shifted_up(static_cast<std::size_t>(-s));
  }
  QPolynomial shared = poly_gcd(den0, mod);
  if (!shared.is_constant())
    return Verdict::inapplicable("denominator shares " + shared.str() + " with the modulus");
  auto [quot, rem] = num0.divrem(mod);
  (void)quot;
  if (rem.is_zero()) return Verdict::pass();
  return Verdict::fail("residue " + detail::short_poly(rem));
}

/// Coprimality of the reduced denominator of x with mod; the witness carries
/// the reduced denominator on Pass and the offending gcd otherwise. A zero
/// target degenerates to gcd(den, 0) = den, so only unit denominators pass.
inline Verdict denom_coprime(const QRational& x, const QPolynomial& mod) {
  if (mod.is_zero()) {
    if (x.den().is_constant() && x.shift() >= 0)
      return Verdict::pass("reduced denominator 1");
    return Verdict::fail("gcd " + detail::short_poly(x.den()));
  }
  if (x.shift() < 0 && mod.low_degree() > 0)
    return Verdict::fail("denominator shares q^" + std::to_string(-x.shift()) +
                         " with the modulus");
  QPolynomial g = poly_gcd(x.den(), mod);
  if (g.is_constant()) {
    std::string w = "reduced denominator ";
    if (x.shift() < 0) w += "q^" + std::to_string(-x.shift()) + " * ";
    return Verdict::pass(w + detail::short_poly(x.den()));
  }
  return Verdict::fail("gcd " + g.str());
}

/// Modulus for the bivariate congruences, carried in factored form:
/// cyclotomic part times a-linear factors (1 - a q^e) and (a - q^e).
struct BiModulus {
  CycloMultiset cyclo;
  std::vector<std::pair<long long, int>> one_minus_aq;  // (e, mult), e >= 1
  std::vector<std::pair<long long, int>> a_minus_q;     // (e, mult), e >= 0

  /// Phi_n(q)^e.
  static BiModulus phi_power(long long n, int e) {
    BiModulus m;
    m.cyclo[n] = e;
    return m;
  }

  /// [n] Phi_n(q) (a - q^e)(1 - a q^e), with e normalized to be nonnegative.
  static BiModulus qint_phi_linear(long long n, long long e) {
    BiModulus m;
    for (long long t : divisors(n))
      if (t > 1) ++m.cyclo[t];
    ++m.cyclo[n];
    long long ae = e < 0 ? -e : e;
    // for e < 0 the two linear factors are unit multiples of the e > 0 pair
    if (ae == 0) {
      m.a_minus_q.push_back({0, 2});  // (a - 1)(1 - a) up to sign
    } else {
      m.a_minus_q.push_back({ae, 1});
      m.one_minus_aq.push_back({ae, 1});
    }
    return m;
  }

  bool trivial() const {
    return cyclo.empty() && one_minus_aq.empty() && a_minus_q.empty();
  }

  APoly poly() const {
    APoly p = APoly::constant(cyclo_expand(cyclo));
    for (const auto& [e, mult] : one_minus_aq)
      for (int i = 0; i < mult; ++i) p = p.times_one_minus_aq(static_cast<std::size_t>(e));
    for (const auto& [e, mult] : a_minus_q)
      for (int i = 0; i < mult; ++i) p = p.times_a_minus_q(static_cast<std::size_t>(e));
    return p;
  }

  std::string str() const {
    std::string s;
    for (const auto& [t, mult] : cyclo) {
      s += (s.empty() ? "" : " * ");
      s += "Phi_" + std::to_string(t);
      if (mult > 1) s += "^" + std::to_string(mult);
    }
    for (const auto& [e, mult] : one_minus_aq) {
      s += (s.empty() ? "" : " * ");
      s += "(1 - a*q^" + std::to_string(e) + ")";
      if (mult > 1) s += "^" + std::to_string(mult);
    }
    for (const auto& [e, mult] : a_minus_q) {
      s += (s.empty() ? "" : " * ");
      s += "(a - q^" + std::to_string(e) + ")";
      if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s;
  }
};

namespace detail {

inline long long apoly_valuation_linear(const APoly& p, bool plus, long long e,
                                        long long cap) {
  APoly cur = p;
  long long v = 0;
  while (v < cap) {
    auto d = plus ? cur.div_one_minus_aq(static_cast<std::size_t>(e))
                  : cur.div_a_minus_q(static_cast<std::size_t>(e));
    if (!d) break;
    cur = std::move(*d);
    ++v;
    if (cur.is_zero()) break;
  }
  return v;
}

inline long long apoly_valuation_qpoly(const APoly& p, const QPolynomial& g, long long cap) {
  APoly cur = p;
  long long v = 0;
  while (v < cap) {
    auto d = cur.div_qpoly(g);
    if (!d) break;
    cur = std::move(*d);
    ++v;
    if (cur.is_zero()) break;
  }
  return v;
}

inline bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace detail

/// Bivariate congruence x = y modulo a factored BiModulus. The verdict comes
/// from per-factor valuations of the combined difference; a univariate
/// specialization cross-check at deg_a + 1 rational points always runs as
/// well and any disagreement is reported as a failure in its own right.
inline Verdict a_congruent(const ABiRational& x, const ABiRational& y, const BiModulus& mod) {
  if (mod.trivial()) throw InvalidModulus("bivariate modulus must be nonconstant");
  APoly num0, den0;
  if (y.is_zero()) {
    num0 = x.num();
    den0 = x.den();
  } else if (x.is_zero()) {
    num0 = -y.num();
    den0 = y.den();
  } else {
    num0 = x.num() * y.den() - y.num() * x.den();
    den0 = x.den() * y.den();
  }
  if (num0.is_zero()) return Verdict::pass("difference is zero");

  Status st = Status::Pass;
  std::string witness;
  auto note = [&](Status s, std::string w) {
    if (s == Status::Inapplicable || (s == Status::Fail && st == Status::Pass)) {
      st = s;
      witness = std::move(w);
    }
  };
  struct LinF { bool plus; long long e; int mult; };
  std::vector<LinF> linears;
  for (const auto& [e, mult] : mod.one_minus_aq) linears.push_back({true, e, mult});
  for (const auto& [e, mult] : mod.a_minus_q) linears.push_back({false, e, mult});

  std::vector<long long> den_vals;  // bivariate denominator valuations, reused below
  for (const auto& lf : linears) {
    long long vden = detail::apoly_valuation_linear(den0, lf.plus, lf.e, 1 << 20);
    long long vnum = detail::apoly_valuation_linear(num0, lf.plus, lf.e, vden + lf.mult);
    den_vals.push_back(vden);
    long long v = vnum - vden;
    std::string label = lf.plus ? "(1 - a*q^" + std::to_string(lf.e) + ")"
                                : "(a - q^" + std::to_string(lf.e) + ")";
    if (v < 0)
      note(Status::Inapplicable, "reduced denominator shares " + label + " with the modulus");
    else if (v < lf.mult)
      note(Status::Fail, label + " divides the difference " + std::to_string(v) +
                             " times, modulus needs " + std::to_string(lf.mult));
  }
  std::vector<long long> cyclo_den_vals;
  for (const auto& [t, mult] : mod.cyclo) {
    const QPolynomial& phi = cyclotomic(t);
    long long vden = detail::apoly_valuation_qpoly(den0, phi, 1 << 20);
    long long vnum = detail::apoly_valuation_qpoly(num0, phi, vden + mult);
    cyclo_den_vals.push_back(vden);
    long long v = vnum - vden;
    if (v < 0)
      note(Status::Inapplicable,
           "reduced denominator shares Phi_" + std::to_string(t) + " with the modulus");
    else if (v < mult)
      note(Status::Fail, "Phi_" + std::to_string(t) + " divides the difference " +
                             std::to_string(v) + " times, modulus needs " +
                             std::to_string(mult));
  }

  // Specialization cross-check at a = c for deg_a(num) + 1 usable prime values.
  // Candidates where a denominator valuation jumps past its bivariate value
  // are skipped: there the specialized congruence degenerates.
  const long long wanted = num0.deg_a() + 1;
  long long used = 0;
  bool spec_all_pass = true;
  bool spec_any_nonpass = false;
  for (long long c = 2; used < wanted && c < 4096; ++c) {
    if (!detail::is_prime_ll(c)) continue;
    const BigRat cv(c);
    QPolynomial nspec = num0.eval_a(cv);
    QPolynomial dspec = den0.eval_a(cv);
    if (dspec.is_zero()) continue;
    std::vector<detail::ModFactor> factors;
    bool degenerate = false;
    std::size_t li = 0;
    for (const auto& lf : linears) {
      QPolynomial pi;
      if (lf.e == 0) {
        // (1 - a) or (a - 1) specializes to a nonzero constant: the factor
        // drops out of the specialized modulus
        ++li;
        continue;
      }
      if (lf.plus) {
        // 1 - c q^e, monic form q^e - 1/c
        pi = QPolynomial::monomial(static_cast<std::size_t>(lf.e)) -
             QPolynomial::constant(cv.inverse());
      } else {
        pi = QPolynomial::monomial(static_cast<std::size_t>(lf.e)) - QPolynomial::constant(cv);
      }
      if (poly_valuation(dspec, pi, den_vals[li] + 1) > den_vals[li]) degenerate = true;
      factors.push_back({pi, lf.mult, "specialized linear factor"});
      ++li;
    }
    std::size_t ci = 0;
    for (const auto& [t, mult] : mod.cyclo) {
      const QPolynomial& phi = cyclotomic(t);
      if (poly_valuation(dspec, phi, cyclo_den_vals[ci] + 1) > cyclo_den_vals[ci])
        degenerate = true;
      factors.push_back({phi, mult, "Phi_" + std::to_string(t)});
      ++ci;
    }
    if (degenerate) continue;
    ++used;
    QPolynomial modpoly = QPolynomial::one();
    for (const auto& f : factors)
      for (int i = 0; i < f.mult; ++i) modpoly *= f.poly;
    Verdict uv = modpoly.is_constant()
                     ? Verdict::pass()
                     : detail::verdict_from_valuations(nspec, dspec, 0, 0, factors, modpoly);
    if (!uv.passed()) {
      spec_all_pass = false;
      spec_any_nonpass = true;
    }
  }
  if (st == Status::Pass && !spec_all_pass)
    return Verdict::fail("bivariate check passed but a specialization disagreed");
  if (st != Status::Pass && used > 0 && !spec_any_nonpass)
    return Verdict::fail("bivariate check failed but every specialization passed; " + witness);

  if (st == Status::Pass) return Verdict::pass();
  return st == Status::Fail ? Verdict::fail(witness) : Verdict::inapplicable(witness);
}

}  // namespace qcon
