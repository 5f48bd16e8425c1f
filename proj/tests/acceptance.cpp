// Acceptance suite: one checkable criterion per section, each printed as a
// single pass/fail line. All checks are exact or exact-modular; the time
// budgets are asserted where stated.
//
// Usage: qcon_acceptance [--criterion N]   (default: run all nine)

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcon/claims.hpp"
#include "qcon/padic.hpp"
#include "qcon/sweep.hpp"
#include "support.hpp"

using namespace qcon;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SweepConfig full_range_config(std::vector<std::string> claims, int jobs) {
  SweepConfig cfg;
  cfg.claims = std::move(claims);
  cfg.n_lo = 2;
  cfg.n_hi = 12;
  cfg.d_lo = 1;
  cfg.d_hi = 4;
  cfg.r_lo = -3;
  cfg.r_hi = 5;
  cfg.jobs = jobs;
  return cfg;
}

// 1. The refined congruence over the full desk-scale rectangle, both
//    truncations, with the stated wall-clock targets.
Outcome criterion1(std::ostringstream& note) {
  Outcome out;
  auto t0 = Clock::now();
  Report serial = run_sweep(full_range_config({"mainth"}, 1));
  double t_serial = seconds_since(t0);
  out.expect(serial.fail == 0 && serial.invalid == 0 && serial.inapplicable == 0,
             "serial sweep has non-pass records");
  out.expect(serial.pass == static_cast<long long>(serial.records.size()),
             "serial sweep pass count mismatch");
  out.expect(serial.pass >= 300, "unexpectedly few applicable cases");
  out.expect(t_serial < 600.0, "single-threaded sweep exceeded 10 minutes");
  t0 = Clock::now();
  Report par = run_sweep(full_range_config({"mainth"}, 4));
  double t_par = seconds_since(t0);
  out.expect(par.fail == 0 && par.pass == serial.pass, "4-worker sweep disagrees");
  out.expect(t_par < 180.0, "4-worker sweep exceeded 3 minutes");
  note << serial.pass << " cases; " << t_serial << " s serial, " << t_par << " s with 4 workers";
  return out;
}

// 2. The supporting-lemma suite over the same rectangle; inapplicable
//    verdicts may only come from the empty-range boundary-term claim, and the
//    strict-mode coprimality observation must reproduce its q - 1 witness.
Outcome criterion2(std::ostringstream& note) {
  Outcome out;
  Report rep = run_sweep(full_range_config(
      {"sym3", "modphi2", "liangduan", "truncon", "denoms", "fmm", "gm1k", "jackson",
       "telescoping"},
      4));
  out.expect(rep.fail == 0, "a lemma claim failed");
  out.expect(rep.invalid == 0, "a lemma claim rejected valid parameters");
  long long gm1k_inapplicable = 0;
  for (const auto& rec : rep.records) {
    if (rec.status == "inapplicable") {
      out.expect(rec.claim == "gm1k", "unexpected inapplicable claim " + rec.claim);
      ++gm1k_inapplicable;
    }
  }
  out.expect(rep.inapplicable == gm1k_inapplicable, "inapplicable tally mismatch");
  Verdict strict = verify_denoms(3, 2, 1, true);
  out.expect(strict.status == Status::Fail, "strict-mode coprimality did not trip");
  out.expect(strict.witness.find("q - 1") != std::string::npos,
             "strict-mode witness is not q - 1");
  note << rep.pass << " pass, " << rep.inapplicable << " empty-range inapplicable";
  return out;
}

// 3. The exact summation identity and its recurrence, under a minute.
Outcome criterion3(std::ostringstream& note) {
  Outcome out;
  auto t0 = Clock::now();
  for (long long n = 1; n <= 40 && out.ok; ++n)
    out.expect(verify_identity(n).passed(), "identity fails at n = " + std::to_string(n));
  for (long long n = 1; n <= 39 && out.ok; ++n)
    out.expect(verify_identity_rec(n).passed(),
               "identity recurrence fails at n = " + std::to_string(n));
  double t = seconds_since(t0);
  out.expect(t < 60.0, "identity suite exceeded 60 seconds");
  note << "n <= 40 exact, recurrence n <= 39; " << t << " s";
  return out;
}

// 4. The WZ pair certificate on the stated grid and parameter pairs.
Outcome criterion4(std::ostringstream& note) {
  Outcome out;
  auto t0 = Clock::now();
  for (auto [d, r] : std::vector<std::pair<long long, long long>>{
           {1, 1}, {2, 1}, {2, -1}, {3, 2}}) {
    out.expect(verify_wz_relation(d, r, 10, 10).passed(),
               "WZ relation fails for d=" + std::to_string(d) + " r=" + std::to_string(r));
  }
  double t = seconds_since(t0);
  out.expect(t < 120.0, "WZ grid exceeded 2 minutes");
  note << "[0,10]x[1,10] at four (d,r) pairs; " << t << " s";
  return out;
}

// 5. The three classical congruences at their stated primes, with the exact
//    435/512 = 5 (mod 125) reproduction.
Outcome criterion5(std::ostringstream& note) {
  Outcome out;
  for (long long p : {5, 7, 11, 13})
    out.expect(verify_vanhamme(p, VHVariant::B2).passed(), "B2 fails at p = " + std::to_string(p));
  for (long long p : {7, 13})
    out.expect(verify_vanhamme(p, VHVariant::E2).passed(), "E2 fails at p = " + std::to_string(p));
  for (long long p : {5, 13})
    out.expect(verify_vanhamme(p, VHVariant::F2).passed(), "F2 fails at p = " + std::to_string(p));
  BigRat lhs;
  for (long long k = 0; k <= 2; ++k) {
    BigRat fk(1);
    for (long long j = 2; j <= k; ++j) fk *= BigRat(j);
    BigRat term = BigRat(4 * k + 1) * poch_rat(BigRat(1, 2), k).pow(3) / fk.pow(3);
    lhs += (k % 2 == 0) ? term : -term;
  }
  out.expect(lhs == BigRat(435, 512), "B2 half sum at p = 5 is not 435/512");
  out.expect(mod_pow(lhs, 5, 3) == 5, "435/512 is not 5 mod 125");
  note << "B2 at {5,7,11,13}, E2 at {7,13}, F2 at {5,13}; 435/512 = 5 (mod 125)";
  return out;
}

// 6. The refined and parametric numerics, up to the p^{s+3} = 5^5 instance.
Outcome criterion6(std::ostringstream& note) {
  Outcome out;
  for (long long p : {5, 7, 11, 13})
    for (PTrunc t : {PTrunc::Short, PTrunc::Full})
      out.expect(verify_sun(p, t).passed(), "sun fails at p = " + std::to_string(p));
  out.expect(euler_number(2) == BigRat(-1), "E_2 is not -1");
  out.expect(mod_pow(BigRat(-120), 5, 4) == 505, "-120 is not 505 mod 625");
  {
    Verdict v = verify_sun(5, PTrunc::Short);
    out.expect(v.witness.find("505") != std::string::npos, "sun(5) does not show 505");
  }
  for (long long p : {5, 7, 11})
    for (const char* a : {"1", "1/2", "1/3", "2/3", "3/4"})
      for (PTrunc t : {PTrunc::Short, PTrunc::Full})
        out.expect(verify_guowang(p, BigRat::parse(a), t).passed(),
                   std::string("guowang fails at alpha = ") + a);
  for (long long p : {5, 7})
    for (long long s : {1, 2})
      for (auto [d, r] : std::vector<std::pair<long long, long long>>{
               {2, 1}, {3, 1}, {3, 2}, {4, 3}})
        for (PTrunc t : {PTrunc::Short, PTrunc::Full})
          out.expect(verify_corollary(p, s, d, r, t).passed(),
                     "corollary fails at p=" + std::to_string(p) + " s=" + std::to_string(s) +
                         " d=" + std::to_string(d) + " r=" + std::to_string(r));
  {
    Verdict v = verify_corollary(5, 2, 2, 1, PTrunc::Short);
    out.expect(v.witness.find("(mod 5^5)") != std::string::npos,
               "corollary at (5,2) does not reach modulus 5^5");
  }
  note << "sun {5,7,11,13}, guowang {5,7,11} x 5 alphas, corollary {5,7} x s in {1,2}";
  return out;
}

// 7. The corollary's closed side agrees with the refined one mod p^4 at
//    d = 2, r = 1, s = 1, including -335/8 = -120 (mod 625).
Outcome criterion7(std::ostringstream& note) {
  Outcome out;
  for (long long p : {5, 7, 11, 13}) {
    long long m = (p - 1) / 2;
    BigRat inner;
    for (long long k = 1; k <= m; ++k) {
      BigRat t(1, k * k);
      inner += (k % 2 == 0) ? t : -t;
    }
    long long sign = m % 2 == 0 ? 1 : -1;
    BigRat cor = BigRat(sign * (2 * m + 1)) +
                 BigRat(2 * sign, 4) * BigRat(2 * m + 1).pow(3) * inner;
    BigRat sun = BigRat(sign * p) + BigRat(p).pow(3) * euler_number(p - 3);
    out.expect(mod_pow(cor, p, 4) == mod_pow(sun, p, 4),
               "closed sides disagree at p = " + std::to_string(p));
    if (p == 5) {
      out.expect(cor == BigRat(-335, 8), "p = 5 closed side is not -335/8");
      out.expect(mod_pow(cor, 5, 4) == mod_pow(BigRat(-120), 5, 4),
                 "-335/8 and -120 disagree mod 625");
    }
  }
  note << "d=2 r=1 s=1 agreement mod p^4 at p in {5,7,11,13}; -335/8 = -120 (mod 625)";
  return out;
}

// 8. The two fixed d=2, r=1 specializations.
Outcome criterion8(std::ostringstream& note) {
  Outcome out;
  for (long long n : {3, 5, 7, 9, 11})
    out.expect(verify_guo2018(n).passed(), "guo2018 fails at n = " + std::to_string(n));
  for (long long n : {3, 5, 7, 9})
    for (MVariant v : {MVariant::AtM, MVariant::AtNMinus1})
      out.expect(verify_guo2022(n, v).passed(), "guo2022 fails at n = " + std::to_string(n));
  note << "guo2018 n in {3,5,7,9,11}; guo2022 n in {3,5,7,9}, both truncations";
  return out;
}

// 9. Randomized core property suites, at least 1000 instances each, plus the
//    deterministic cyclotomic reconstruction up to 60.
Outcome criterion9(std::ostringstream& note) {
  Outcome out;
  const int kRounds = 1000;
  {
    qtest::Rng rng(1009);
    for (int i = 0; i < kRounds && out.ok; ++i) {
      QRational x = rng.ratfun(3), y = rng.ratfun(3), z = rng.ratfun(3);
      out.expect(x + y == y + x, "addition commutativity");
      out.expect((x + y) + z == x + (y + z), "addition associativity");
      out.expect(x * y == y * x, "multiplication commutativity");
      out.expect((x * y) * z == x * (y * z), "multiplication associativity");
      out.expect(x * (y + z) == x * y + x * z, "distributivity");
      out.expect(x - x == QRational(), "additive inverse");
      if (!x.is_zero()) out.expect(x / x == QRational::one(), "multiplicative inverse");
    }
  }
  {
    qtest::Rng rng(1013);
    for (int i = 0; i < kRounds && out.ok; ++i) {
      QPolynomial common = rng.factored_poly(rng.range(0, 2));
      QPolynomial f = common * rng.factored_poly(rng.range(0, 2));
      QPolynomial g = common * rng.factored_poly(rng.range(0, 2));
      QPolynomial gc = poly_gcd(f, g);
      out.expect(f.exact_div(gc).has_value(), "gcd does not divide f");
      out.expect(g.exact_div(gc).has_value(), "gcd does not divide g");
      out.expect(gc.exact_div(common).has_value(), "common divisor does not divide gcd");
    }
  }
  {
    qtest::Rng rng(1019);
    for (int i = 0; i < kRounds && out.ok; ++i) {
      long long n = rng.range(2, 8);
      QPolynomial mod = modulus(n, rng.range(1, 2));
      QRational x = QRational::from_poly(rng.poly(5));
      QRational y = x + QRational::from_poly(mod * rng.poly(2));
      QRational z = y + QRational::from_poly(mod * rng.poly(2));
      out.expect(congruent(x, x, mod).passed(), "congruence reflexivity");
      out.expect(congruent(x, y, mod).passed() && congruent(y, x, mod).passed(),
                 "congruence symmetry");
      out.expect(congruent(x, z, mod).passed(), "congruence transitivity");
      long long t = rng.range(-6, 6);
      out.expect(congruent(x.mul_qpow(t), y.mul_qpow(t), mod).passed(),
                 "unit shift invariance");
      QPolynomial off = rng.nonzero_poly(mod.degree() - 1, 4);
      out.expect(congruent(x + QRational::from_poly(off), x, mod).status == Status::Fail,
                 "low-degree offsets must fail");
    }
  }
  for (long long n = 1; n <= 60 && out.ok; ++n) {
    QPolynomial prod = QPolynomial::one();
    for (long long t : divisors(n)) prod *= cyclotomic(t);
    out.expect(prod == QPolynomial::qpow_minus_one(static_cast<std::size_t>(n)),
               "cyclotomic product at n = " + std::to_string(n));
  }
  note << "3 x " << kRounds << " randomized instances, reconstruction n <= 60";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  using Fn = std::function<Outcome(std::ostringstream&)>;
  const std::vector<std::pair<const char*, Fn>> criteria = {
      {"main congruence sweep", criterion1},
      {"lemma suite sweep", criterion2},
      {"identity suite", criterion3},
      {"WZ certificate", criterion4},
      {"classical numerics", criterion5},
      {"refined numerics", criterion6},
      {"cross-consistency", criterion7},
      {"fixed specializations", criterion8},
      {"core property suites", criterion9},
  };
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int idx = static_cast<int>(i) + 1;
    if (only != 0 && only != idx) continue;
    std::ostringstream note;
    auto t0 = Clock::now();
    Outcome out;
    try {
      out = criteria[i].second(note);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double t = seconds_since(t0);
    std::cout << "criterion " << idx << " (" << criteria[i].first << "): "
              << (out.ok ? "PASS" : "FAIL");
    if (!out.ok) std::cout << " - " << out.detail;
    std::cout << " [" << note.str() << "] (" << t << " s)\n";
    all_ok = all_ok && out.ok;
  }
  return all_ok ? 0 : 1;
}
