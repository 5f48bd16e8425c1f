#include <catch2/catch_amalgamated.hpp>

#include "qcon/padic.hpp"
#include "support.hpp"

using namespace qcon;

namespace {
BigRat fact(long long k) {
  BigRat v(1);
  for (long long j = 2; j <= k; ++j) v *= BigRat(j);
  return v;
}
}  // namespace

TEST_CASE("p-adic valuation", "[padic]") {
  CHECK(vp(BigRat(50, 3), 5) == PadicValuation::of(2));
  CHECK(vp(BigRat(1, 25), 5) == PadicValuation::of(-2));
  CHECK(vp(BigRat(), 7) == PadicValuation::infinite());
  CHECK_THROWS_AS(vp(BigRat(1), 6), InvalidParams);
  // multiplicativity on random values
  qtest::Rng rng(83);
  for (int i = 0; i < 300; ++i) {
    BigRat a = rng.nonzero_rat(50, 30), b = rng.nonzero_rat(50, 30);
    long long p = std::vector<long long>{2, 3, 5, 7}[static_cast<std::size_t>(rng.range(0, 3))];
    CHECK(vp(a * b, p).v == vp(a, p).v + vp(b, p).v);
  }
}

TEST_CASE("mod_pow", "[padic]") {
  CHECK(mod_pow(BigRat(435, 512), 5, 3) == 5);
  CHECK(mod_pow(BigRat(-120), 5, 4) == 505);
  CHECK_THROWS_AS(mod_pow(BigRat(1, 5), 5, 2), NotPAdicInteger);
}

TEST_CASE("Euler polynomials and numbers", "[padic]") {
  CHECK(euler_poly(1, BigRat(1, 2)) == BigRat());
  CHECK(euler_number(2) == BigRat(-1));
  CHECK(euler_poly(2, BigRat(1, 3)) == BigRat(-2, 9));
  CHECK(euler_poly(0, BigRat(7)) == BigRat(1));
  // reflection E_k(1-x) = (-1)^k E_k(x) and vanishing odd Euler numbers
  qtest::Rng rng(89);
  for (long long k = 0; k <= 12; ++k) {
    for (int i = 0; i < 20; ++i) {
      BigRat x = rng.rat(6, 4);
      BigRat lhs = euler_poly(k, BigRat(1) - x);
      BigRat rhs = euler_poly(k, x);
      CHECK(lhs == (k % 2 == 0 ? rhs : -rhs));
    }
    if (k % 2 == 1) CHECK(euler_number(k) == BigRat());
  }
}

TEST_CASE("rising factorial", "[padic]") {
  CHECK(poch_rat(BigRat(1, 2), 2) == BigRat(3, 4));
  CHECK(poch_rat(BigRat(7, 3), 0) == BigRat(1));
  CHECK(poch_rat(BigRat(1, 3), 3) == BigRat(28, 27));
}

TEST_CASE("prime-power context validation", "[padic]") {
  PadicParams ctx = PadicParams::make(5, 2, 5);
  CHECK(ctx.p == 5);
  CHECK(ctx.t == 5);
  CHECK_THROWS_AS(PadicParams::make(4, 1, 1), InvalidParams);
  CHECK_THROWS_AS(PadicParams::make(3, 1, 1), InvalidParams);  // p must exceed 3
  CHECK_THROWS_AS(PadicParams::make(5, 0, 1), InvalidParams);
}

TEST_CASE("vanhamme", "[padic]") {
  Verdict b2 = verify_vanhamme(5, VHVariant::B2);
  CHECK(b2.passed());
  CHECK(b2.witness.find("5 = 5") != std::string::npos);
  // the p = 5 left side is exactly 435/512
  BigRat lhs;
  for (long long k = 0; k <= 2; ++k) {
    BigRat term = BigRat(4 * k + 1) * poch_rat(BigRat(1, 2), k).pow(3) / fact(k).pow(3);
    lhs += (k % 2 == 0) ? term : -term;
  }
  CHECK(lhs == BigRat(435, 512));
  CHECK(mod_pow(lhs, 5, 3) == 5);

  CHECK(verify_vanhamme(7, VHVariant::E2).passed());
  CHECK_THROWS_AS(verify_vanhamme(5, VHVariant::E2), InvalidParams);
  CHECK(verify_vanhamme(5, VHVariant::F2).passed());
  CHECK_THROWS_AS(verify_vanhamme(7, VHVariant::F2), InvalidParams);
  CHECK_THROWS_AS(verify_vanhamme(6, VHVariant::B2), InvalidParams);
}

TEST_CASE("sun refinement", "[padic]") {
  Verdict half = verify_sun(5, PTrunc::Short);
  CHECK(half.passed());
  CHECK(half.witness.find("505 = 505") != std::string::npos);
  CHECK(verify_sun(5, PTrunc::Full).passed());
  CHECK(verify_sun(7, PTrunc::Short).passed());
  CHECK(mod_pow(BigRat(5) + BigRat(125) * euler_number(2), 5, 4) == 505);
}

TEST_CASE("guowang extension", "[padic]") {
  CHECK(verify_guowang(5, BigRat(1), PTrunc::Full).passed());
  CHECK(verify_guowang(5, BigRat(1, 2), PTrunc::Short).passed());
  CHECK_THROWS_AS(verify_guowang(5, BigRat(1, 5), PTrunc::Full), NotPAdicInteger);
  // alpha = 1, p = 5, full truncation: the left side is 1 - 3 + 5 - 7 + 9 = 5
  BigRat lhs;
  for (long long k = 0; k <= 4; ++k) {
    BigRat term = BigRat(2 * k + 1);
    lhs += (k % 2 == 0) ? term : -term;
  }
  CHECK(lhs == BigRat(5));
}

TEST_CASE("corollary", "[padic]") {
  Verdict v = verify_corollary(5, 1, 2, 1, PTrunc::Short);
  CHECK(v.passed());
  CHECK(v.witness.find("505 = 505") != std::string::npos);
  CHECK(verify_corollary(5, 1, 2, 1, PTrunc::Full).passed());
  CHECK(verify_corollary(7, 1, 3, 1, PTrunc::Short).passed());
  CHECK_THROWS_AS(verify_corollary(5, 1, 5, 1, PTrunc::Short), InvalidParams);
  CHECK_THROWS_AS(verify_corollary(5, 1, 4, 2, PTrunc::Short), InvalidParams);
  // the closed side at (5,1,2,1) is -335/8 = 505 (mod 625)
  BigRat inner = BigRat(-1) + BigRat(1, 4);
  BigRat rhs = BigRat(5) + BigRat(2, 4) * BigRat(125) * inner;
  CHECK(rhs == BigRat(-335, 8));
  CHECK(mod_pow(rhs, 5, 4) == 505);
}

TEST_CASE("corollary agrees with sun on the shared right side", "[padic]") {
  // d = 2, r = 1, s = 1: both closed forms mod p^4
  for (long long p : {5LL, 7LL, 11LL, 13LL}) {
    long long m = (p - 1) / 2;
    BigRat inner;
    for (long long k = 1; k <= m; ++k) {
      BigRat t(1, k * k);
      inner += (k % 2 == 0) ? t : -t;
    }
    long long sign = m % 2 == 0 ? 1 : -1;
    BigRat cor_rhs = BigRat(sign * (2 * m + 1)) +
                     BigRat(2 * sign, 4) * BigRat(2 * m + 1).pow(3) * inner;
    BigRat sun_rhs = BigRat(sign * p) + BigRat(p).pow(3) * euler_number(p - 3);
    CHECK(mod_pow(cor_rhs, p, 4) == mod_pow(sun_rhs, p, 4));
  }
}

TEST_CASE("full-range truncation of the classical sum is trivial mod p^3", "[padic]") {
  for (long long p : {5LL, 7LL, 11LL}) {
    BigRat half, full;
    for (long long k = 0; k <= p - 1; ++k) {
      BigRat term = BigRat(4 * k + 1) * poch_rat(BigRat(1, 2), k).pow(3) / fact(k).pow(3);
      if (k % 2 != 0) term = -term;
      full += term;
      if (k <= (p - 1) / 2) half += term;
    }
    CHECK(mod_pow(full, p, 3) == mod_pow(half, p, 3));
  }
}

TEST_CASE("guowang at r/d matches the corollary at s = 1", "[padic]") {
  for (long long p : {5LL, 7LL}) {
    for (auto [d, r] : std::vector<std::pair<long long, long long>>{{2, 1}, {3, 1}, {3, 2}, {4, 3}}) {
      if (d % p == 0) continue;
      for (PTrunc t : {PTrunc::Short, PTrunc::Full}) {
        Verdict a = verify_guowang(p, BigRat(r, d), t);
        Verdict b = verify_corollary(p, 1, d, r, t);
        CHECK(a.status == b.status);
      }
    }
  }
}

TEST_CASE("alternating inverse-square sums reduce to Euler polynomial values mod p",
          "[padic]") {
  for (long long p : {5LL, 7LL, 11LL, 13LL}) {
    for (auto [d, r] : std::vector<std::pair<long long, long long>>{{2, 1}, {3, 2}, {4, 1}, {1, 1}}) {
      if (d % p == 0) continue;
      long long m = neg_residue(BigRat(r, d), p);
      BigRat inner;
      for (long long k = 1; k <= m; ++k) {
        BigRat t(1, k * k);
        inner += (k % 2 == 0) ? t : -t;
      }
      BigRat rhs = BigRat(m % 2 == 0 ? 1 : -1) * euler_poly(p - 3, BigRat(r, d)) / BigRat(2);
      CHECK(mod_pow(inner - rhs, p, 1) == 0);
    }
  }
}
