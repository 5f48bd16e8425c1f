// Command-line front end: single-claim verification, parameter sweeps,
// p-adic checks and report inspection.
//
// Exit codes: 0 all pass, 1 at least one failure, 2 usage/parameter error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcon/claims.hpp"
#include "qcon/padic.hpp"
#include "qcon/sweep.hpp"
#include "qcon/version.hpp"

namespace {

using namespace qcon;

struct Range {
  long long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("range", "expected A..B, got '" + s + "'");
  Range r;
  r.lo = std::stoll(s.substr(0, pos));
  r.hi = std::stoll(s.substr(pos + 2));
  if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + s + "'");
  return r;
}

std::vector<long long> parse_list(const std::string& s) {
  std::vector<long long> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) v.push_back(std::stoll(item));
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) v.push_back(item);
  }
  return v;
}

MVariant parse_mvariant(const std::string& s) {
  if (s == "m" || s == "half") return MVariant::AtM;
  if (s == "full" || s == "n-1") return MVariant::AtNMinus1;
  throw CLI::ValidationError("--M", "expected m or full, got '" + s + "'");
}

PTrunc parse_ptrunc(const std::string& s) {
  if (s == "m" || s == "half") return PTrunc::Short;
  if (s == "full") return PTrunc::Full;
  throw CLI::ValidationError("--M", "expected m|half or full, got '" + s + "'");
}

void print_case(const CaseRecord& rec, bool as_json) {
  if (as_json) {
    std::cout << record_to_json(rec).dump() << "\n";
    return;
  }
  std::ostringstream os;
  os << rec.claim;
  if (rec.n) os << " n=" << *rec.n;
  if (rec.d) os << " d=" << *rec.d;
  if (rec.r) os << " r=" << *rec.r;
  if (rec.p) os << " p=" << *rec.p;
  if (rec.s) os << " s=" << *rec.s;
  if (rec.k) os << " k=" << *rec.k;
  if (!rec.alpha.empty()) os << " alpha=" << rec.alpha;
  if (!rec.M.empty()) os << " M=" << rec.M;
  os << ": ";
  std::string status = rec.status;
  for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
  os << status;
  if (!rec.witness.empty()) os << " [" << rec.witness << "]";
  os << " (" << rec.elapsed_ms << " ms)";
  std::cout << os.str() << "\n";
}

int status_exit(const std::string& status) {
  if (status == "pass") return 0;
  if (status == "fail") return 1;
  return 2;
}

int cmd_verify(const std::string& claim, std::optional<long long> n,
               std::optional<long long> d, std::optional<long long> r,
               const std::string& mvar, std::optional<long long> k, bool strict,
               bool as_json) {
  auto id = claim_from_name(claim);
  if (!id) {
    std::cerr << "unknown claim: " << claim << "\n";
    return 2;
  }
  auto need = [](const std::optional<long long>& v, const char* name) {
    if (!v) throw InvalidParams(std::string("missing --") + name);
    return *v;
  };
  detail::SweepCase c;
  c.record.claim = claim;
  c.record.n = n;
  c.record.d = d;
  c.record.r = r;
  c.record.k = k;
  switch (*id) {
    case ClaimId::Sym3: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      if (k) {
        long long kk = *k;
        c.run = [=] { return verify_sym3(nn, dd, rr, kk); };
      } else {
        c.run = [=] { return verify_sym3_all(nn, dd, rr); };
      }
      break;
    }
    case ClaimId::ModPhi2: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      c.run = [=] { return verify_modphi2(nn, dd, rr); };
      break;
    }
    case ClaimId::LiangduanA: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      c.run = [=] { return verify_liangduan(nn, dd, rr); };
      break;
    }
    case ClaimId::Truncon: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      c.run = [=] { return verify_truncon(nn, dd, rr); };
      break;
    }
    case ClaimId::Denoms: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      c.run = [=] { return verify_denoms(nn, dd, rr, strict); };
      break;
    }
    case ClaimId::Fmm: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      c.run = [=] { return verify_fmm(nn, dd, rr); };
      break;
    }
    case ClaimId::Gm1k: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      c.run = [=] { return verify_gm1k(nn, dd, rr); };
      break;
    }
    case ClaimId::Identity: {
      long long nn = need(n, "n");
      c.run = [=] { return verify_identity(nn); };
      break;
    }
    case ClaimId::IdentityRec: {
      long long nn = need(n, "n");
      c.run = [=] { return verify_identity_rec(nn); };
      break;
    }
    case ClaimId::JacksonTrunc: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      c.run = [=] { return verify_jackson_trunc(nn, dd, rr); };
      break;
    }
    case ClaimId::WZRelation: {
      long long dd = need(d, "d"), rr = need(r, "r");
      long long grid = k.value_or(6);
      c.record.k = grid;
      c.run = [=] { return verify_wz_relation(dd, rr, grid, grid); };
      break;
    }
    case ClaimId::Telescoping: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      c.run = [=] { return verify_telescoping(nn, dd, rr); };
      break;
    }
    case ClaimId::MainTh: {
      long long nn = need(n, "n"), dd = need(d, "d"), rr = need(r, "r");
      MVariant v = parse_mvariant(mvar.empty() ? "m" : mvar);
      c.record.M = mvariant_name(v);
      c.run = [=] { return verify_mainth(nn, dd, rr, v); };
      break;
    }
    case ClaimId::Guo2018: {
      long long nn = need(n, "n");
      c.run = [=] { return verify_guo2018(nn); };
      break;
    }
    case ClaimId::Guo2022: {
      long long nn = need(n, "n");
      MVariant v = parse_mvariant(mvar.empty() ? "m" : mvar);
      c.record.M = mvariant_name(v);
      c.run = [=] { return verify_guo2022(nn, v); };
      break;
    }
  }
  CaseRecord rec = run_case(c);
  print_case(rec, as_json);
  return status_exit(rec.status);
}

int cmd_padic(const std::string& claim, const std::string& variant,
              std::vector<long long> primes, long long s, std::optional<long long> d,
              std::optional<long long> r, const std::string& alpha_str,
              const std::string& mvar, bool as_json) {
  if (primes.empty()) {
    std::cerr << "no primes given (use --p or --p-list)\n";
    return 2;
  }
  int worst = 0;
  for (long long p : primes) {
    detail::SweepCase c;
    c.record.claim = claim;
    c.record.p = p;
    if (claim == "vanhamme") {
      VHVariant v;
      if (variant == "B2") v = VHVariant::B2;
      else if (variant == "E2") v = VHVariant::E2;
      else if (variant == "F2") v = VHVariant::F2;
      else {
        std::cerr << "vanhamme needs --variant B2|E2|F2\n";
        return 2;
      }
      c.record.M = variant;
      c.run = [=] { return verify_vanhamme(p, v); };
    } else if (claim == "sun") {
      PTrunc t = parse_ptrunc(mvar.empty() ? "full" : mvar);
      c.record.M = ptrunc_name(t);
      c.run = [=] { return verify_sun(p, t); };
    } else if (claim == "guowang") {
      if (alpha_str.empty()) {
        std::cerr << "guowang needs --alpha NUM/DEN\n";
        return 2;
      }
      BigRat alpha = BigRat::parse(alpha_str);
      PTrunc t = parse_ptrunc(mvar.empty() ? "full" : mvar);
      c.record.alpha = alpha_str;
      c.record.M = ptrunc_name(t);
      c.run = [=] { return verify_guowang(p, alpha, t); };
    } else if (claim == "corollary") {
      if (!d || !r) {
        std::cerr << "corollary needs --d and --r\n";
        return 2;
      }
      long long dd = *d, rr = *r;
      PTrunc t = parse_ptrunc(mvar.empty() ? "m" : mvar);
      c.record.s = s;
      c.record.d = dd;
      c.record.r = rr;
      c.record.M = ptrunc_name(t);
      c.run = [=] { return verify_corollary(p, s, dd, rr, t); };
    } else {
      std::cerr << "unknown p-adic claim: " << claim << "\n";
      return 2;
    }
    CaseRecord rec = run_case(c);
    print_case(rec, as_json);
    worst = std::max(worst, status_exit(rec.status));
  }
  return worst;
}

int cmd_sweep(const SweepConfig& cfg, bool as_json) {
  Report rep = run_sweep(cfg);
  rep.config = {{"claims", cfg.claims.empty() ? std::vector<std::string>{"all"} : cfg.claims},
                {"n", {cfg.n_lo, cfg.n_hi}},
                {"d", {cfg.d_lo, cfg.d_hi}},
                {"r", {cfg.r_lo, cfg.r_hi}},
                {"primes", cfg.primes},
                {"s", cfg.s},
                {"wz_grid", cfg.wz_grid},
                {"jobs", cfg.jobs},
                {"strict_denoms", cfg.strict_denoms}};
  if (!cfg.out_path.empty()) {
    if (!write_report(rep, cfg.out_path)) {
      std::cerr << "cannot write report to " << cfg.out_path << "\n";
      return 2;
    }
  }
  if (as_json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
  } else {
    for (const auto& rec : rep.records)
      if (rec.status != "pass") print_case(rec, false);
    std::cout << "sweep: " << rep.pass << " pass, " << rep.fail << " fail, "
              << rep.inapplicable << " inapplicable, " << rep.invalid << " invalid, "
              << rep.skipped << " skipped\n";
  }
  return exit_code_for(rep);
}

int cmd_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "malformed report: " << e.what() << "\n";
    return 2;
  }
  const auto& counts = j.at("counts");
  std::cout << "report from " << j.value("timestamp", "?") << " ("
            << j.value("tool", "?") << " " << j.value("version", "?") << ")\n";
  std::cout << "  pass=" << counts.value("pass", 0)
            << " fail=" << counts.value("fail", 0)
            << " inapplicable=" << counts.value("inapplicable", 0)
            << " invalid=" << counts.value("invalid", 0)
            << " skipped=" << counts.value("skipped", 0) << "\n";
  for (const auto& rec : j.at("records")) {
    if (rec.value("status", "") == "pass") continue;
    std::cout << "  " << rec.value("claim", "?") << " " << rec.dump() << "\n";
  }
  return counts.value("fail", 0) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for q-supercongruences and their certificates"};
  app.set_version_flag("--version", std::string(qcon::kToolName) + " " + qcon::kVersion);
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "verify a single claim instance");
  std::string claim, mvar;
  long long n = 0, d = 0, r = 0, k = 0;
  bool has_n = false, has_d = false, has_r = false, has_k = false;
  bool strict = false, as_json = false;
  verify->add_option("--claim", claim, "claim name")->required();
  verify->add_option("--n", n)->each([&](const std::string&) { has_n = true; });
  verify->add_option("--d", d)->each([&](const std::string&) { has_d = true; });
  verify->add_option("--r", r)->each([&](const std::string&) { has_r = true; });
  verify->add_option("--k", k)->each([&](const std::string&) { has_k = true; });
  verify->add_option("--M", mvar, "truncation point: m or full");
  verify->add_flag("--strict-denoms", strict, "check part (iii) against 1 - q^n");
  verify->add_flag("--json", as_json, "emit a JSON record");
  std::string fmt = "text";
  verify->add_option("--format", fmt, "text or json");

  // padic
  auto* padic = app.add_subcommand("padic", "verify a p-adic claim at one or more primes");
  std::string pclaim, variant, alpha_str, pmvar, pfmt = "text";
  long long pval = 0, sval = 1, pd = 0, pr = 0;
  bool has_p = false, has_pd = false, has_pr = false;
  std::string plist;
  padic->add_option("--claim", pclaim, "vanhamme | sun | guowang | corollary")->required();
  padic->add_option("--variant", variant, "vanhamme variant: B2 | E2 | F2");
  padic->add_option("--p", pval)->each([&](const std::string&) { has_p = true; });
  padic->add_option("--p-list", plist, "comma-separated primes");
  padic->add_option("--s", sval, "prime power exponent for corollary");
  padic->add_option("--d", pd)->each([&](const std::string&) { has_pd = true; });
  padic->add_option("--r", pr)->each([&](const std::string&) { has_pr = true; });
  padic->add_option("--alpha", alpha_str, "rational parameter NUM/DEN");
  padic->add_option("--M", pmvar, "truncation: m|half or full");
  padic->add_option("--format", pfmt, "text or json");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run claims over parameter ranges");
  SweepConfig cfg;
  std::string claims_csv = "all", nrange = "2..8", drange = "1..3", rrange = "-2..3";
  std::string sweep_plist, alpha_csv, sweep_mvar, sfmt = "text";
  sweep->add_option("--claims", claims_csv, "comma-separated claim names or 'all'");
  sweep->add_option("--n-range", nrange, "A..B");
  sweep->add_option("--d-range", drange, "A..B");
  sweep->add_option("--r-range", rrange, "A..B");
  sweep->add_option("--M", sweep_mvar, "restrict to one truncation: m or full");
  sweep->add_option("--p-list", sweep_plist, "primes for the p-adic claims");
  sweep->add_option("--s", cfg.s, "prime power exponent for corollary");
  sweep->add_option("--alpha-list", alpha_csv, "alphas for guowang");
  sweep->add_option("--k", cfg.wz_grid, "grid bound for the wz claim");
  sweep->add_option("--jobs", cfg.jobs, "worker threads");
  sweep->add_option("--out", cfg.out_path, "write the JSON report here");
  sweep->add_flag("--strict-denoms", cfg.strict_denoms);
  sweep->add_option("--format", sfmt, "text or json");

  // report
  auto* report = app.add_subcommand("report", "summarize a sweep report file");
  std::string report_path;
  report->add_option("file", report_path, "report JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors are exit code 2; --help/--version stay 0
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) {
      return cmd_verify(claim, has_n ? std::optional(n) : std::nullopt,
                        has_d ? std::optional(d) : std::nullopt,
                        has_r ? std::optional(r) : std::nullopt, mvar,
                        has_k ? std::optional(k) : std::nullopt, strict,
                        as_json || fmt == "json");
    }
    if (app.got_subcommand(padic)) {
      std::vector<long long> primes;
      if (has_p) primes.push_back(pval);
      for (long long p : parse_list(plist)) primes.push_back(p);
      return cmd_padic(pclaim, variant, primes, sval,
                       has_pd ? std::optional(pd) : std::nullopt,
                       has_pr ? std::optional(pr) : std::nullopt, alpha_str, pmvar,
                       pfmt == "json");
    }
    if (app.got_subcommand(sweep)) {
      if (claims_csv != "all") cfg.claims = split_csv(claims_csv);
      Range rn = parse_range(nrange), rd = parse_range(drange), rr2 = parse_range(rrange);
      cfg.n_lo = rn.lo;
      cfg.n_hi = rn.hi;
      cfg.d_lo = rd.lo;
      cfg.d_hi = rd.hi;
      cfg.r_lo = rr2.lo;
      cfg.r_hi = rr2.hi;
      if (!sweep_mvar.empty()) cfg.only_variant = parse_mvariant(sweep_mvar);
      cfg.primes = parse_list(sweep_plist);
      if (!alpha_csv.empty()) cfg.alphas = split_csv(alpha_csv);
      return cmd_sweep(cfg, sfmt == "json");
    }
    if (app.got_subcommand(report)) {
      return cmd_report(report_path);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
