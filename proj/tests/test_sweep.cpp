#include <catch2/catch_amalgamated.hpp>

#include "qcon/sweep.hpp"
#include "support.hpp"

using namespace qcon;

namespace {

ordered_json normalized(const Report& rep) {
  ordered_json j = report_to_json(rep);
  j["timestamp"] = "";
  for (auto& rec : j["records"]) rec["elapsed_ms"] = 0;
  return j;
}

}  // namespace

TEST_CASE("exit codes", "[sweep]") {
  CHECK(exit_code_for(Status::Pass) == 0);
  CHECK(exit_code_for(Status::Fail) == 1);
  CHECK(exit_code_for(Status::Inapplicable) == 2);
  // a sweep's exit code is 1 exactly when some record failed
  qtest::Rng rng(97);
  for (int i = 0; i < 300; ++i) {
    Report rep;
    long long nrec = rng.range(0, 12);
    bool any_fail = false;
    for (long long k = 0; k < nrec; ++k) {
      CaseRecord rec;
      switch (rng.range(0, 3)) {
        case 0: rec.status = "pass"; break;
        case 1: rec.status = "fail"; any_fail = true; break;
        case 2: rec.status = "inapplicable"; break;
        default: rec.status = "invalid"; break;
      }
      rep.records.push_back(rec);
    }
    rep.tally();
    CHECK(exit_code_for(rep) == (any_fail ? 1 : 0));
    CHECK(rep.pass + rep.fail + rep.inapplicable + rep.invalid ==
          static_cast<long long>(rep.records.size()));
  }
}

TEST_CASE("small sweep passes and counts are consistent", "[sweep]") {
  SweepConfig cfg;
  cfg.claims = {"mainth", "telescoping", "gm1k"};
  cfg.n_lo = 2;
  cfg.n_hi = 4;
  cfg.d_lo = 1;
  cfg.d_hi = 2;
  cfg.r_lo = -1;
  cfg.r_hi = 2;
  cfg.jobs = 2;
  Report rep = run_sweep(cfg);
  CHECK(rep.fail == 0);
  CHECK(rep.invalid == 0);
  CHECK(rep.pass > 0);
  CHECK(rep.skipped > 0);  // gcd-violating combos exist in this rectangle
  long long tallied = 0;
  for (const auto& rec : rep.records) {
    tallied += rec.status == "pass";
    // records carry the fixed fields
    ordered_json j = record_to_json(rec);
    CHECK(j.contains("claim"));
    CHECK(j.contains("n"));
    CHECK(j.contains("d"));
    CHECK(j.contains("r"));
    CHECK(j.contains("M"));
    CHECK(j.contains("status"));
    CHECK(j.contains("witness"));
    CHECK(j.contains("elapsed_ms"));
  }
  CHECK(tallied == rep.pass);
  CHECK(std::is_sorted(rep.records.begin(), rep.records.end(),
                       [](const CaseRecord& a, const CaseRecord& b) {
                         return a.sort_key() < b.sort_key();
                       }));
  CHECK(exit_code_for(rep) == 0);
}

TEST_CASE("sweeps are deterministic regardless of scheduling", "[sweep]") {
  SweepConfig cfg;
  cfg.claims = {"mainth", "denoms", "identity"};
  cfg.n_lo = 2;
  cfg.n_hi = 4;
  cfg.d_lo = 1;
  cfg.d_hi = 2;
  cfg.r_lo = 0;
  cfg.r_hi = 2;
  cfg.jobs = 1;
  Report a = run_sweep(cfg);
  cfg.jobs = 4;
  Report b = run_sweep(cfg);
  CHECK(normalized(a) == normalized(b));
}

TEST_CASE("empty effective case set exits clean", "[sweep]") {
  SweepConfig cfg;
  cfg.claims = {"mainth"};
  cfg.n_lo = 2;
  cfg.n_hi = 4;
  cfg.d_lo = 2;
  cfg.d_hi = 2;
  cfg.r_lo = 0;
  cfg.r_hi = 0;  // gcd(0, 2) = 2 everywhere
  Report rep = run_sweep(cfg);
  CHECK(rep.records.empty());
  CHECK(rep.skipped > 0);
  CHECK(exit_code_for(rep) == 0);
}

TEST_CASE("strict mode shows up in sweep records", "[sweep]") {
  SweepConfig cfg;
  cfg.claims = {"denoms"};
  cfg.n_lo = 3;
  cfg.n_hi = 3;
  cfg.d_lo = 2;
  cfg.d_hi = 2;
  cfg.r_lo = 1;
  cfg.r_hi = 1;
  cfg.strict_denoms = true;
  Report rep = run_sweep(cfg);
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].status == "fail");
  CHECK(rep.records[0].witness.find("q - 1") != std::string::npos);
  CHECK(exit_code_for(rep) == 1);
}

TEST_CASE("padic claims join sweeps through the prime list", "[sweep]") {
  SweepConfig cfg;
  cfg.claims = {"vanhamme", "sun", "corollary"};
  cfg.n_lo = 2;
  cfg.n_hi = 2;
  cfg.d_lo = 2;
  cfg.d_hi = 3;
  cfg.r_lo = 1;
  cfg.r_hi = 1;
  cfg.primes = {5, 7};
  Report rep = run_sweep(cfg);
  CHECK(rep.fail == 0);
  CHECK(rep.invalid == 0);
  // E2 at p = 5 and F2 at p = 7 are residue-condition skips, not errors
  CHECK(rep.skipped >= 2);
  bool saw_vanhamme = false, saw_corollary = false;
  for (const auto& rec : rep.records) {
    saw_vanhamme |= rec.claim == "vanhamme";
    saw_corollary |= rec.claim == "corollary";
  }
  CHECK(saw_vanhamme);
  CHECK(saw_corollary);
}
