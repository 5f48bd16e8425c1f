#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "laurent.hpp"
#include "poly.hpp"

namespace qcon {

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline long long euler_phi(long long n) {
  long long r = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace detail {
struct CyclotomicTable {
  std::mutex mu;
  std::map<long long, QPolynomial> table;
};
inline CyclotomicTable& cyclotomic_table() {
  static CyclotomicTable t;
  return t;
}
}  // namespace detail

namespace detail {
inline const QPolynomial& cyclotomic_locked(long long n) {
  auto& tab = cyclotomic_table();
  {
    std::scoped_lock lock(tab.mu);
    auto it = tab.table.find(n);
    if (it != tab.table.end()) return it->second;
  }
  QPolynomial result;
  if (n == 1) {
    result = QPolynomial::qpow_minus_one(1);
  } else {
    QPolynomial num = QPolynomial::qpow_minus_one(static_cast<std::size_t>(n));
    for (long long d : divisors(n)) {
      if (d == n) continue;
      num = *num.exact_div(cyclotomic_locked(d));
    }
    result = std::move(num);
  }
  std::scoped_lock lock(tab.mu);
  return tab.table.emplace(n, std::move(result)).first->second;
}
}  // namespace detail

/// n-th cyclotomic polynomial, computed by exact division of q^n - 1 by the
/// lower-index factors. Entries are node-stable and never erased, so the
/// shared table hands out references that stay valid; a thread-local pointer
/// cache keeps the shared mutex off the hot path.
inline const QPolynomial& cyclotomic(long long n) {
  if (n < 1) throw InvalidParams("cyclotomic index must be positive");
  thread_local std::map<long long, const QPolynomial*> local;
  auto it = local.find(n);
  if (it != local.end()) return *it->second;
  const QPolynomial& p = detail::cyclotomic_locked(n);
  local.emplace(n, &p);
  return p;
}

/// Multiset of cyclotomic indices with multiplicities; the product
/// prod Phi_t(q)^mult is always monic with constant term +-1.
using CycloMultiset = std::map<long long, int>;

inline void cyclo_merge_max(CycloMultiset& into, const CycloMultiset& other) {
  for (const auto& [t, m] : other) {
    int& cur = into[t];
    if (m > cur) cur = m;
  }
}

/// into - sub, assuming sub <= into pointwise.
inline CycloMultiset cyclo_diff(const CycloMultiset& into, const CycloMultiset& sub) {
  CycloMultiset r;
  for (const auto& [t, m] : into) {
    auto it = sub.find(t);
    int rest = m - (it == sub.end() ? 0 : it->second);
    if (rest > 0) r[t] = rest;
  }
  return r;
}

inline QPolynomial cyclo_expand(const CycloMultiset& ms) {
  QPolynomial p = QPolynomial::one();
  for (const auto& [t, m] : ms)
    for (int i = 0; i < m; ++i) p *= cyclotomic(t);
  return p;
}

inline QLaurent laurent_times_cyclo(QLaurent x, const CycloMultiset& ms) {
  for (const auto& [t, m] : ms) {
    const QPolynomial& phi = cyclotomic(t);
    for (int i = 0; i < m; ++i) x = QLaurent(x.base() * phi, x.shift());
  }
  return x;
}

/// Decomposes 1 - q^e (e != 0) into a unit times cyclotomics:
///   e > 0:  1 - q^e = -prod_{t|e} Phi_t(q)
///   e < 0:  1 - q^e = q^e * prod_{t|-e} Phi_t(q)
/// accumulating the cyclotomic part into `out` and the unit into sign/qshift.
inline void one_minus_qpow_factors(long long e, CycloMultiset& out, int& sign,
                                   long long& qshift) {
  long long ae = e < 0 ? -e : e;
  for (long long t : divisors(ae)) ++out[t];
  if (e > 0) {
    sign = -sign;
  } else {
    qshift += e;
  }
}

}  // namespace qcon
