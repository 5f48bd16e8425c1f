#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "claims.hpp"
#include "padic.hpp"
#include "version.hpp"

namespace qcon {

using ordered_json = nlohmann::ordered_json;

/// Sweep configuration: claim filter, parameter ranges, primes for the
/// p-adic claims, and execution knobs.
struct SweepConfig {
  std::vector<std::string> claims;  // empty means "all"
  long long n_lo = 2, n_hi = 8;
  long long d_lo = 1, d_hi = 3;
  long long r_lo = -2, r_hi = 3;
  bool both_variants = true;
  std::optional<MVariant> only_variant;
  std::vector<long long> primes;
  long long s = 1;
  std::vector<std::string> alphas = {"1", "1/2", "1/3", "2/3", "3/4"};
  long long wz_grid = 6;
  int jobs = 1;
  bool strict_denoms = false;
  std::string out_path;

  bool wants(const std::string& name) const {
    if (claims.empty()) return true;
    for (const auto& c : claims)
      if (c == name || c == "all") return true;
    return false;
  }
  std::vector<MVariant> variants() const {
    if (only_variant) return {*only_variant};
    return {MVariant::AtM, MVariant::AtNMinus1};
  }
};

struct CaseRecord {
  std::string claim;
  std::optional<long long> n, d, r, p, s, k;
  std::string M;       // truncation/variant tag, empty when not applicable
  std::string alpha;   // rational parameter as text, empty when not applicable
  std::string status;  // pass | fail | inapplicable | invalid
  std::string witness;
  long long elapsed_ms = 0;

  auto sort_key() const {
    auto v = [](const std::optional<long long>& x) { return x.value_or(INT64_MIN); };
    return std::make_tuple(claim, v(n), v(d), v(r), v(p), v(s), alpha, M, v(k));
  }
};

struct Report {
  std::string tool = kToolName;
  std::string version = kVersion;
  std::string timestamp;
  ordered_json config;
  std::vector<CaseRecord> records;
  long long pass = 0, fail = 0, inapplicable = 0, invalid = 0, skipped = 0;

  void tally() {
    pass = fail = inapplicable = invalid = 0;
    for (const auto& rec : records) {
      if (rec.status == "pass") ++pass;
      else if (rec.status == "fail") ++fail;
      else if (rec.status == "inapplicable") ++inapplicable;
      else ++invalid;
    }
  }
};

inline ordered_json record_to_json(const CaseRecord& r) {
  ordered_json j;
  j["claim"] = r.claim;
  auto put = [&j](const char* key, const std::optional<long long>& v) {
    if (v) j[key] = *v; else j[key] = nullptr;
  };
  put("n", r.n);
  put("d", r.d);
  put("r", r.r);
  j["M"] = r.M.empty() ? ordered_json(nullptr) : ordered_json(r.M);
  if (r.p) j["p"] = *r.p;
  if (r.s) j["s"] = *r.s;
  if (r.k) j["k"] = *r.k;
  if (!r.alpha.empty()) j["alpha"] = r.alpha;
  j["status"] = r.status;
  j["witness"] = r.witness;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline ordered_json report_to_json(const Report& rep) {
  ordered_json j;
  j["tool"] = rep.tool;
  j["version"] = rep.version;
  j["timestamp"] = rep.timestamp;
  j["config"] = rep.config;
  ordered_json recs = ordered_json::array();
  for (const auto& r : rep.records) recs.push_back(record_to_json(r));
  j["records"] = std::move(recs);
  j["counts"] = {{"pass", rep.pass},
                 {"fail", rep.fail},
                 {"inapplicable", rep.inapplicable},
                 {"invalid", rep.invalid},
                 {"skipped", rep.skipped}};
  return j;
}

/// Exit code for a single verdict-producing command.
inline int exit_code_for(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Inapplicable: return 2;
  }
  return 2;
}

/// Exit code for a sweep: zero Fail records means success.
inline int exit_code_for(const Report& r) { return r.fail == 0 ? 0 : 1; }

namespace detail {

struct SweepCase {
  CaseRecord record;  // parameters prefilled; status/witness/elapsed filled by run
  std::function<Verdict()> run;
};

inline std::string now_iso8601() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

}  // namespace detail

/// Builds the case list for a sweep. Parameter combinations that violate a
/// claim's gcd/parity preconditions are counted as skipped, not run.
inline std::vector<detail::SweepCase> build_sweep_cases(const SweepConfig& cfg,
                                                        long long& skipped) {
  std::vector<detail::SweepCase> cases;
  skipped = 0;
  auto add = [&cases](CaseRecord rec, std::function<Verdict()> fn) {
    cases.push_back({std::move(rec), std::move(fn)});
  };

  const bool want_triple[] = {
      cfg.wants("sym3"),    cfg.wants("modphi2"),     cfg.wants("liangduan"),
      cfg.wants("truncon"), cfg.wants("denoms"),      cfg.wants("fmm"),
      cfg.wants("gm1k"),    cfg.wants("jackson"),     cfg.wants("telescoping"),
  };
  const char* triple_names[] = {"sym3", "modphi2", "liangduan", "truncon", "denoms",
                                "fmm",  "gm1k",    "jackson",   "telescoping"};
  const bool needs_n_gt1[] = {false, true, true, false, true, true, true, false, false};

  for (long long n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    for (long long d = cfg.d_lo; d <= cfg.d_hi; ++d) {
      for (long long r = cfg.r_lo; r <= cfg.r_hi; ++r) {
        const bool ok = gcd_ll(n, d) == 1 && gcd_ll(r, d) == 1;
        for (int i = 0; i < 9; ++i) {
          if (!want_triple[i]) continue;
          if (!ok || (needs_n_gt1[i] && n <= 1)) {
            ++skipped;
            continue;
          }
          CaseRecord rec;
          rec.claim = triple_names[i];
          rec.n = n;
          rec.d = d;
          rec.r = r;
          const bool strict = cfg.strict_denoms;
          std::function<Verdict()> fn;
          switch (i) {
            case 0: fn = [=] { return verify_sym3_all(n, d, r); }; break;
            case 1: fn = [=] { return verify_modphi2(n, d, r); }; break;
            case 2: fn = [=] { return verify_liangduan(n, d, r); }; break;
            case 3: fn = [=] { return verify_truncon(n, d, r); }; break;
            case 4: fn = [=] { return verify_denoms(n, d, r, strict); }; break;
            case 5: fn = [=] { return verify_fmm(n, d, r); }; break;
            case 6: fn = [=] { return verify_gm1k(n, d, r); }; break;
            case 7: fn = [=] { return verify_jackson_trunc(n, d, r); }; break;
            default: fn = [=] { return verify_telescoping(n, d, r); }; break;
          }
          add(std::move(rec), std::move(fn));
        }
        if (cfg.wants("mainth")) {
          for (MVariant v : cfg.variants()) {
            if (!ok) {
              ++skipped;
              continue;
            }
            CaseRecord rec;
            rec.claim = "mainth";
            rec.n = n;
            rec.d = d;
            rec.r = r;
            rec.M = mvariant_name(v);
            add(std::move(rec), [=] { return verify_mainth(n, d, r, v); });
          }
        }
      }
    }
  }

  for (long long n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    if (cfg.wants("identity") && n >= 1) {
      CaseRecord rec;
      rec.claim = "identity";
      rec.n = n;
      add(std::move(rec), [=] { return verify_identity(n); });
    }
    if (cfg.wants("identityrec") && n >= 1) {
      CaseRecord rec;
      rec.claim = "identityrec";
      rec.n = n;
      add(std::move(rec), [=] { return verify_identity_rec(n); });
    }
    if (cfg.wants("guo2018")) {
      if (n > 1 && n % 2 == 1) {
        CaseRecord rec;
        rec.claim = "guo2018";
        rec.n = n;
        add(std::move(rec), [=] { return verify_guo2018(n); });
      } else {
        ++skipped;
      }
    }
    if (cfg.wants("guo2022")) {
      for (MVariant v : cfg.variants()) {
        if (n > 1 && n % 2 == 1) {
          CaseRecord rec;
          rec.claim = "guo2022";
          rec.n = n;
          rec.M = mvariant_name(v);
          add(std::move(rec), [=] { return verify_guo2022(n, v); });
        } else {
          ++skipped;
        }
      }
    }
  }

  if (cfg.wants("wz")) {
    for (long long d = cfg.d_lo; d <= cfg.d_hi; ++d) {
      for (long long r = cfg.r_lo; r <= cfg.r_hi; ++r) {
        if (d < 1 || gcd_ll(r, d) != 1) {
          ++skipped;
          continue;
        }
        CaseRecord rec;
        rec.claim = "wz";
        rec.d = d;
        rec.r = r;
        rec.k = cfg.wz_grid;
        const long long g = cfg.wz_grid;
        add(std::move(rec), [=] { return verify_wz_relation(d, r, g, g); });
      }
    }
  }

  for (long long p : cfg.primes) {
    if (cfg.wants("vanhamme")) {
      for (VHVariant v : {VHVariant::B2, VHVariant::E2, VHVariant::F2}) {
        const bool ok = is_prime(p) && p > 3 &&
                        (v == VHVariant::B2 || (v == VHVariant::E2 && p % 3 == 1) ||
                         (v == VHVariant::F2 && p % 4 == 1));
        if (!ok) {
          ++skipped;
          continue;
        }
        CaseRecord rec;
        rec.claim = "vanhamme";
        rec.p = p;
        rec.M = vh_name(v);
        add(std::move(rec), [=] { return verify_vanhamme(p, v); });
      }
    }
    if (cfg.wants("sun")) {
      for (PTrunc t : {PTrunc::Short, PTrunc::Full}) {
        if (!is_prime(p) || p <= 3) {
          ++skipped;
          continue;
        }
        CaseRecord rec;
        rec.claim = "sun";
        rec.p = p;
        rec.M = ptrunc_name(t);
        add(std::move(rec), [=] { return verify_sun(p, t); });
      }
    }
    if (cfg.wants("guowang")) {
      for (const auto& astr : cfg.alphas) {
        for (PTrunc t : {PTrunc::Short, PTrunc::Full}) {
          if (!is_prime(p) || p <= 3) {
            ++skipped;
            continue;
          }
          BigRat alpha = BigRat::parse(astr);
          PadicValuation v = vp(alpha, p);
          if (v.finite && v.v < 0) {
            ++skipped;
            continue;
          }
          CaseRecord rec;
          rec.claim = "guowang";
          rec.p = p;
          rec.alpha = astr;
          rec.M = ptrunc_name(t);
          add(std::move(rec), [=] { return verify_guowang(p, alpha, t); });
        }
      }
    }
    if (cfg.wants("corollary")) {
      for (long long d = cfg.d_lo; d <= cfg.d_hi; ++d) {
        for (long long r = cfg.r_lo; r <= cfg.r_hi; ++r) {
          for (PTrunc t : {PTrunc::Short, PTrunc::Full}) {
            const bool ok = is_prime(p) && p > 3 && d >= 1 && d % p != 0 && gcd_ll(r, d) == 1;
            if (!ok) {
              ++skipped;
              continue;
            }
            CaseRecord rec;
            rec.claim = "corollary";
            rec.p = p;
            rec.s = cfg.s;
            rec.d = d;
            rec.r = r;
            rec.M = ptrunc_name(t);
            const long long s = cfg.s;
            add(std::move(rec), [=] { return verify_corollary(p, s, d, r, t); });
          }
        }
      }
    }
  }

  return cases;
}

/// Runs one case, timing it and catching parameter errors as "invalid".
inline CaseRecord run_case(const detail::SweepCase& c) {
  CaseRecord rec = c.record;
  auto start = std::chrono::steady_clock::now();
  try {
    Verdict v = c.run();
    rec.status = status_name(v.status);
    rec.witness = v.witness;
  } catch (const std::exception& e) {
    rec.status = "invalid";
    rec.witness = e.what();
  }
  rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

/// Executes a sweep on a bounded worker pool. Record order in the report is
/// deterministic regardless of scheduling.
inline Report run_sweep(const SweepConfig& cfg) {
  Report rep;
  rep.timestamp = detail::now_iso8601();
  long long skipped = 0;
  auto cases = build_sweep_cases(cfg, skipped);
  rep.skipped = skipped;
  std::vector<CaseRecord> results(cases.size());
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) results[i] = run_case(cases[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= cases.size()) break;
        results[i] = run_case(cases[i]);
      }
    };
    std::vector<std::thread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  rep.records = std::move(results);
  std::sort(rep.records.begin(), rep.records.end(),
            [](const CaseRecord& a, const CaseRecord& b) { return a.sort_key() < b.sort_key(); });
  rep.tally();
  return rep;
}

inline bool write_report(const Report& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) return false;
  out << report_to_json(rep).dump(2) << "\n";
  return bool(out);
}

}  // namespace qcon
