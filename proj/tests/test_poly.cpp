#include <catch2/catch_amalgamated.hpp>

#include "qcon/poly.hpp"
#include "support.hpp"

using namespace qcon;

namespace {
QPolynomial q_minus_1() { return QPolynomial::qpow_minus_one(1); }
}  // namespace

TEST_CASE("basic shape and degree", "[poly]") {
  QPolynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  QPolynomial p({BigRat(1), BigRat(0), BigRat(3)});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1) == BigRat(0));
  CHECK(p.coeff(5) == BigRat(0));
  CHECK(QPolynomial({BigRat(0), BigRat(0)}).is_zero());
  CHECK(p.eval(BigRat(2)) == BigRat(13));
  CHECK(p.str() == "3*q^2 + 1");
}

TEST_CASE("gcd of the stated examples", "[poly]") {
  // common root q = 1 only
  QPolynomial f = QPolynomial::qpow_minus_one(2);
  QPolynomial g = QPolynomial::qpow_minus_one(3);
  CHECK(poly_gcd(f, g) == q_minus_1());

  // gcd with zero is the monic normalization
  QPolynomial h({BigRat(2), BigRat(4)});
  CHECK(poly_gcd(h, QPolynomial()) == QPolynomial({BigRat(1, 2), BigRat(1)}));
  CHECK(poly_gcd(QPolynomial(), QPolynomial()).is_zero());

  // (1-q)(1-q^5) against (1-q^2)^2: factoring both into cyclotomics gives
  // Phi_1^2 Phi_5 and Phi_1^2 Phi_2^2, so the intersection is Phi_1^2.
  QPolynomial a = QPolynomial::one_minus_qpow(1) * QPolynomial::one_minus_qpow(5);
  QPolynomial b = QPolynomial::one_minus_qpow(2) * QPolynomial::one_minus_qpow(2);
  CHECK(poly_gcd(a, b) == q_minus_1() * q_minus_1());
}

TEST_CASE("divrem invariants on random pairs", "[poly]") {
  qtest::Rng rng(29);
  for (int i = 0; i < 300; ++i) {
    QPolynomial f = rng.poly(8);
    QPolynomial g = rng.nonzero_poly(5);
    auto [quot, rem] = f.divrem(g);
    CHECK(quot * g + rem == f);
    CHECK(rem.degree() < g.degree());
  }
  CHECK_THROWS_AS(rng.poly().divrem(QPolynomial()), DivisionByZero);
}

TEST_CASE("gcd divides both and any common divisor divides it", "[poly]") {
  qtest::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    QPolynomial common = rng.factored_poly(rng.range(0, 2));
    QPolynomial f = common * rng.factored_poly(rng.range(0, 2));
    QPolynomial g = common * rng.factored_poly(rng.range(0, 2));
    QPolynomial gcd = poly_gcd(f, g);
    CHECK(f.exact_div(gcd).has_value());
    CHECK(g.exact_div(gcd).has_value());
    CHECK(gcd.exact_div(poly_gcd(gcd, common)).has_value());
    CHECK(gcd.exact_div(common).has_value());
  }
}

TEST_CASE("valuation counts multiplicity", "[poly]") {
  QPolynomial p = q_minus_1() * q_minus_1() * QPolynomial::one_minus_qpow(2);
  CHECK(poly_valuation(p, q_minus_1()) == 3);
  CHECK(poly_valuation(p, q_minus_1(), 2) == 2);
  CHECK(poly_valuation(p, QPolynomial({BigRat(1), BigRat(1)})) == 1);  // q + 1
  CHECK(poly_valuation(QPolynomial::one(), q_minus_1()) == 0);
}

TEST_CASE("exact division detects failure", "[poly]") {
  QPolynomial f = QPolynomial::one_minus_qpow(3);
  CHECK(f.exact_div(q_minus_1()).has_value());
  CHECK_FALSE(f.exact_div(QPolynomial({BigRat(1), BigRat(1)})).has_value());
}
