#pragma once

#include <map>
#include <vector>

#include "bivariate.hpp"
#include "cyclotomic.hpp"

namespace qcon {

/// One summand of a bivariate q-sum. Factor families:
///   num_q / den_q        exponents e of (1 - q^e)
///   num_aplus / den_aplus  exponents e of (1 - a q^e)
///   num_aminus / den_aminus exponents e of (a - q^e)
/// plus a net power of a (negative = denominator side). Exponents may be any
/// integers; factors are normalized internally. A zero (1 - q^e) numerator
/// factor annihilates the term.
struct ATerm {
  BigRat coeff = BigRat(1);
  long long qpow = 0;
  long long apow = 0;
  std::vector<long long> num_q, num_aplus, num_aminus;
  std::vector<long long> den_q, den_aplus, den_aminus;

  ATerm& times_qint(long long k) {
    num_q.push_back(k);
    den_q.push_back(1);
    return *this;
  }
  /// (a q^s; q^d)_len into the numerator.
  ATerm& times_apoch(long long s, long long d, long long len) {
    for (long long j = 0; j < len; ++j) num_aplus.push_back(s + j * d);
    return *this;
  }
  /// (q^s / a; q^d)_len into the numerator: each factor is (a - q^{s+jd})/a.
  ATerm& times_ainv_poch(long long s, long long d, long long len) {
    for (long long j = 0; j < len; ++j) num_aminus.push_back(s + j * d);
    apow -= len;
    return *this;
  }
  ATerm& times_poch(long long s, long long d, long long len) {
    for (long long j = 0; j < len; ++j) num_q.push_back(s + j * d);
    return *this;
  }
  ATerm& over_apoch(long long s, long long d, long long len) {
    for (long long j = 0; j < len; ++j) den_aplus.push_back(s + j * d);
    return *this;
  }
  ATerm& over_ainv_poch(long long s, long long d, long long len) {
    for (long long j = 0; j < len; ++j) den_aminus.push_back(s + j * d);
    apow += len;
    return *this;
  }
  ATerm& over_poch(long long s, long long d, long long len) {
    for (long long j = 0; j < len; ++j) den_q.push_back(s + j * d);
    return *this;
  }
};

/// Incremental bivariate sum over a common factored denominator, mirroring
/// QTermSum. Reduction is trial division by the known denominator factors,
/// so no bivariate gcd is ever needed here.
class ATermSum {
 public:
  void add(const ATerm& t) {
    int sign = 1;
    long long qsh = t.qpow;

    // canonical denominator factor collections for this term
    CycloMultiset dcyc;
    std::map<long long, int> dplus, dminus;
    for (long long e : t.den_q) {
      if (e == 0) throw DivisionByZero("division by the zero q-Pochhammer factor");
      long long ae = e < 0 ? -e : e;
      for (long long u : divisors(ae)) ++dcyc[u];
      if (e > 0) {
        sign = -sign;
      } else {
        qsh -= e;  // inverted unit of 1 - q^e = q^e * prod Phi
      }
    }
    for (long long e : t.den_aplus) add_linear(dplus, dminus, true, e, sign, qsh, -1);
    for (long long e : t.den_aminus) add_linear(dplus, dminus, false, e, sign, qsh, -1);
    long long danum = t.apow;  // net numerator a-power; negative goes to the denominator

    // term numerator
    APoly p = APoly::constant(QPolynomial::constant(t.coeff));
    for (long long e : t.num_q) {
      if (e == 0) return;
      if (e > 0) {
        p = p - p.shift_q(static_cast<std::size_t>(e));
      } else {
        p = p.shift_q(static_cast<std::size_t>(-e)) - p;
        qsh += e;
      }
    }
    std::map<long long, int> nplus, nminus;
    for (long long e : t.num_aplus) add_linear(nplus, nminus, true, e, sign, qsh, +1);
    for (long long e : t.num_aminus) add_linear(nplus, nminus, false, e, sign, qsh, +1);
    p = apply_linear(std::move(p), nplus, nminus);
    if (sign < 0) p = -p;

    // merge denominators
    CycloMultiset mc = den_cyclo_;
    cyclo_merge_max(mc, dcyc);
    auto mplus = merge_max(den_aplus_, dplus);
    auto mminus = merge_max(den_aminus_, dminus);
    long long mapow = std::max(den_apow_, std::max(-danum, 0LL));

    num_ = apply_cofactor(std::move(num_), cyclo_diff(mc, den_cyclo_),
                          map_diff(mplus, den_aplus_), map_diff(mminus, den_aminus_),
                          mapow - den_apow_);
    p = apply_cofactor(std::move(p), cyclo_diff(mc, dcyc), map_diff(mplus, dplus),
                       map_diff(mminus, dminus),
                       mapow - std::max(-danum, 0LL) + std::max(danum, 0LL));

    // align the global q-shift
    long long s = std::min(qshift_, qsh);
    if (num_.is_zero()) {
      s = qsh;
    } else if (qshift_ > s) {
      num_ = num_.shift_q(static_cast<std::size_t>(qshift_ - s));
    }
    if (qsh > s) p = p.shift_q(static_cast<std::size_t>(qsh - s));
    num_ += p;
    qshift_ = s;
    den_cyclo_ = std::move(mc);
    den_aplus_ = std::move(mplus);
    den_aminus_ = std::move(mminus);
    den_apow_ = mapow;
  }

  bool numerator_is_zero() const { return num_.is_zero(); }

  ABiRational reduce() const {
    if (num_.is_zero()) return ABiRational();
    APoly n = num_;
    auto plus = den_aplus_;
    auto minus = den_aminus_;
    CycloMultiset cyc = den_cyclo_;
    for (auto& [e, mult] : plus) {
      while (mult > 0) {
        auto d = n.div_one_minus_aq(static_cast<std::size_t>(e));
        if (!d) break;
        n = std::move(*d);
        --mult;
      }
    }
    for (auto& [e, mult] : minus) {
      while (mult > 0) {
        auto d = n.div_a_minus_q(static_cast<std::size_t>(e));
        if (!d) break;
        n = std::move(*d);
        --mult;
      }
    }
    for (auto& [t, mult] : cyc) {
      const QPolynomial& phi = cyclotomic(t);
      while (mult > 0) {
        auto d = n.div_qpoly(phi);
        if (!d) break;
        n = std::move(*d);
        --mult;
      }
    }
    long long apow = den_apow_;
    long long la = n.low_a();
    if (apow > 0 && la > 0) {
      long long c = std::min(apow, la);
      n = n.unshift_a(static_cast<std::size_t>(c));
      apow -= c;
    }
    // common q-power of the numerator coefficients, plus the global shift
    long long qlow = -1;
    for (const auto& cp : n.coeffs()) {
      if (cp.is_zero()) continue;
      long long l = cp.low_degree();
      qlow = qlow < 0 ? l : std::min(qlow, l);
    }
    if (qlow > 0) {
      APoly stripped;
      {
        std::vector<QPolynomial> cs(n.coeffs());
        for (auto& cp : cs)
          if (!cp.is_zero()) cp = cp.shifted_down(static_cast<std::size_t>(qlow));
        stripped = APoly(std::move(cs));
      }
      n = std::move(stripped);
    } else {
      qlow = 0;
    }
    long long net = qshift_ + qlow;
    long long den_qpow = 0;
    if (net > 0) {
      n = n.shift_q(static_cast<std::size_t>(net));
    } else {
      den_qpow = -net;
    }

    APoly dpoly = APoly::one();
    for (const auto& [e, mult] : plus)
      for (int i = 0; i < mult; ++i) dpoly = dpoly.times_one_minus_aq(static_cast<std::size_t>(e));
    for (const auto& [e, mult] : minus)
      for (int i = 0; i < mult; ++i) dpoly = dpoly.times_a_minus_q(static_cast<std::size_t>(e));
    dpoly = dpoly.times_qpoly(cyclo_expand(cyc));
    if (apow > 0) dpoly = dpoly.shift_a(static_cast<std::size_t>(apow));
    if (den_qpow > 0) dpoly = dpoly.shift_q(static_cast<std::size_t>(den_qpow));
    return ABiRational::reduced_unchecked(std::move(n), std::move(dpoly));
  }

 private:
  // Normalizes an a-linear factor into the canonical families
  //   (1 - a q^e), e >= 1   and   (a - q^e), e >= 0,
  // accumulating the unit into sign/qshift. `dir` is +1 on the numerator
  // side and -1 on the denominator side (units invert).
  static void add_linear(std::map<long long, int>& plus, std::map<long long, int>& minus,
                         bool is_plus, long long e, int& sign, long long& qsh, int dir) {
    if (is_plus) {
      if (e >= 1) {
        ++plus[e];
      } else {
        ++minus[-e];
        sign = -sign;
        qsh += dir * e;
      }
    } else {
      if (e >= 0) {
        ++minus[e];
      } else {
        ++plus[-e];
        sign = -sign;
        qsh += dir * e;
      }
    }
  }

  static std::map<long long, int> merge_max(const std::map<long long, int>& x,
                                            const std::map<long long, int>& y) {
    std::map<long long, int> r = x;
    for (const auto& [e, m] : y) {
      int& cur = r[e];
      if (m > cur) cur = m;
    }
    return r;
  }
  static std::map<long long, int> map_diff(const std::map<long long, int>& big,
                                           const std::map<long long, int>& small) {
    std::map<long long, int> r;
    for (const auto& [e, m] : big) {
      auto it = small.find(e);
      int rest = m - (it == small.end() ? 0 : it->second);
      if (rest > 0) r[e] = rest;
    }
    return r;
  }

  static APoly apply_linear(APoly p, const std::map<long long, int>& plus,
                            const std::map<long long, int>& minus) {
    for (const auto& [e, m] : plus)
      for (int i = 0; i < m; ++i) p = p.times_one_minus_aq(static_cast<std::size_t>(e));
    for (const auto& [e, m] : minus)
      for (int i = 0; i < m; ++i) p = p.times_a_minus_q(static_cast<std::size_t>(e));
    return p;
  }

  static APoly apply_cofactor(APoly p, const CycloMultiset& cyc,
                              const std::map<long long, int>& plus,
                              const std::map<long long, int>& minus, long long apow) {
    if (p.is_zero()) return p;
    p = apply_linear(std::move(p), plus, minus);
    if (!cyc.empty()) p = p.times_qpoly(cyclo_expand(cyc));
    if (apow > 0) p = p.shift_a(static_cast<std::size_t>(apow));
    return p;
  }

  APoly num_;
  long long qshift_ = 0;
  CycloMultiset den_cyclo_;
  std::map<long long, int> den_aplus_;
  std::map<long long, int> den_aminus_;
  long long den_apow_ = 0;
};

}  // namespace qcon
