#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "texp/texp.hpp"

namespace {

using namespace texp;

enum Exit : int { kOk = 0, kFailure = 1, kInvalid = 2, kResource = 3 };

Instance parse_instance(const std::string& a, const std::string& b, const std::string& c) {
  return Instance(parse_int(a), parse_int(b), parse_int(c));
}

std::uint64_t parse_cap(const std::string& s) {
  const Int v = parse_int(s);
  if (v < 1) throw invalid_input("cap must be at least 1");
  if (!fits_u64(v)) throw invalid_input("cap too large: " + s);
  return to_u64(v);
}

int parse_sign(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+") return 1;
  if (s == "-1" || s == "-") return -1;
  throw invalid_input("sign must be +1 or -1, got '" + s + "'");
}

std::string interval_text(const Interval& v, int digits) {
  return "[" + v.lower().to_string(digits, MPFR_RNDD) + ", " + v.upper().to_string(digits, MPFR_RNDU) + "]";
}

void print_bound(const BoundReport& r) {
  std::cout << "max base        " << to_dec(r.max_base) << '\n'
            << "log max         " << interval_text(r.log_max, 20) << '\n'
            << "6500 (log max)^3 " << interval_text(r.formula_value, 12) << '\n'
            << "cap             " << to_dec(r.bound) << '\n';
}

struct SolveArgs {
  std::string a, b, c;
  std::string cap;
  bool rigorous = false;
  bool json = false;
  double volume_limit = 1e9;
  unsigned threads = 0;
};

int run_solve(const SolveArgs& args) {
  const Instance inst = parse_instance(args.a, args.b, args.c);
  SieveConfig sieve;
  sieve.threads = args.threads;
  const BoundReport report = solution_bound(inst);
  SolutionSet set = [&] {
    if (!args.cap.empty()) return enumerate_solutions(inst, parse_cap(args.cap), sieve);
    CountOptions opt;
    opt.volume_limit = args.volume_limit;
    opt.sieve = sieve;
    return count_solutions(inst, opt).set;
  }();
  const bool unconditional = Int(static_cast<unsigned long>(set.cap)) >= report.bound;
  if (args.json) {
    Json j = to_json(set);
    j["unconditional"] = unconditional;
    j["bound"] = to_json(report);
    std::cout << j.dump() << '\n';
    return kOk;
  }
  print_bound(report);
  std::cout << "cap used        " << set.cap << '\n';
  if (set.solutions.empty()) std::cout << "no solutions\n";
  for (const auto& s : set.solutions) std::cout << "  " << s << '\n';
  std::cout << "N" << inst.str() << " = " << set.solutions.size()
            << (unconditional ? " (unconditional)" : " (up to cap " + std::to_string(set.cap) + ")") << '\n';
  return kOk;
}

int run_bound(const std::string& a, const std::string& b, const std::string& c, bool json) {
  const Instance inst = parse_instance(a, b, c);
  const BoundReport r = solution_bound(inst);
  const Int q = conditional_quadratic_bound(inst);
  if (json) {
    Json j = to_json(r);
    j["conditional_quadratic_bound"] = int_json(q);
    std::cout << j.dump() << '\n';
    return kOk;
  }
  print_bound(r);
  std::cout << "4663 (log max)^2 cap (when min{a^2x, b^2y} < c^z): " << to_dec(q) << '\n';
  return kOk;
}

int run_thresholds(Precision prec, bool verbose, bool json) {
  bool all = true;
  Json rows = Json::array();
  if (!json) std::cout << std::left << std::setw(18) << "claim" << std::setw(8) << "verdict" << "statement\n";
  for (const auto& claim : published_threshold_claims()) {
    bool holds = true;
    Json traces = Json::array();
    std::vector<ThresholdTrace> ts;
    for (const auto& spec : claim.specs) {
      ThresholdTrace t = verify_threshold(spec, prec);
      holds = holds && t.holds;
      traces.push_back(to_json(t));
      ts.push_back(std::move(t));
    }
    all = all && holds;
    if (json) {
      rows.push_back({{"claim", claim.name}, {"statement", claim.statement}, {"holds", holds}, {"specs", traces}});
      continue;
    }
    std::cout << std::setw(18) << claim.name << std::setw(8) << (holds ? "holds" : "FAILS") << claim.statement << '\n';
    if (!verbose) continue;
    for (const auto& t : ts) {
      std::cout << "    " << t.label << ": F(t0) in " << interval_text(t.F_at_t0, 6) << ", F'(t0) in "
                << interval_text(t.dF_at_t0, 6) << "; " << t.reason << '\n';
    }
  }
  if (json) std::cout << Json{{"precision", prec}, {"all_hold", all}, {"claims", rows}}.dump() << '\n';
  return all ? kOk : kFailure;
}

void print_certificate(const LemmaCertificate& c) {
  std::cout << "lemma " << c.lemma << ": " << (c.verdict() ? "pass" : "FAIL") << '\n';
  std::cout << "  inputs:";
  for (const auto& [k, v] : c.inputs) std::cout << ' ' << k << '=' << v;
  std::cout << '\n';
  for (const auto& [k, v] : c.recomputed) std::cout << "  " << k << " = " << v << '\n';
  for (const auto& cl : c.clauses) {
    std::cout << "  [" << (cl.holds ? "ok" : "FAIL") << "] " << cl.name << ": " << cl.statement << '\n';
  }
}

int run_certify(const std::string& a, const std::string& b, const std::string& c, const std::string& cap, bool json) {
  const Instance inst = parse_instance(a, b, c);
  const SolutionSet set = enumerate_solutions(inst, parse_cap(cap));
  const CertificationReport rep = certify(inst, set.solutions);
  if (json) {
    Json j = to_json(rep);
    j["instance"] = {int_json(inst.a()), int_json(inst.b()), int_json(inst.c())};
    j["cap"] = set.cap;
    std::cout << j.dump() << '\n';
    return rep.all_pass() ? kOk : kFailure;
  }
  const auto& f = rep.form;
  std::cout << "canonical form  " << to_dec(f.A) << "^X " << (f.lambda > 0 ? '+' : '-') << ' ' << to_dec(f.B)
            << "^Y = " << to_dec(f.C) << "^Z  (perm " << to_string(f.perm) << ")\n";
  std::cout << "solutions (cap " << set.cap << "):";
  if (rep.solutions.empty()) std::cout << " none";
  for (std::size_t i = 0; i < rep.solutions.size(); ++i) {
    std::cout << ' ' << set.solutions[i] << " -> " << to_canonical_solution(f, set.solutions[i]);
  }
  std::cout << '\n';
  if (rep.order) {
    std::cout << "order data      Z1=" << rep.order->Z1 << " n1=" << rep.order->n1 << " delta1=" << rep.order->delta1
              << " f=" << to_dec(rep.order->f) << '\n';
  }
  for (const auto& cert : rep.certificates) print_certificate(cert);
  std::cout << (rep.all_pass() ? "all certificates pass\n" : "CERTIFICATE FAILURE\n");
  return rep.all_pass() ? kOk : kFailure;
}

int run_pillai(const std::string& A, const std::string& B, const std::string& k, const std::string& sign,
               const std::string& cap, bool json) {
  const int s = parse_sign(sign);
  const PillaiResult r = pillai_count(parse_int(A), parse_int(B), parse_int(k), s, parse_cap(cap));
  if (json) {
    Json sols = Json::array();
    for (const auto& [m, n] : r.solutions) sols.push_back({m, n});
    std::cout << Json{{"A", A}, {"B", B}, {"k", k}, {"sign", s}, {"count", r.count}, {"solutions", sols}}.dump()
              << '\n';
    return kOk;
  }
  std::cout << A << "^m " << (s > 0 ? '+' : '-') << ' ' << B << "^n = " << k << ": " << r.count << " solution"
            << (r.count == 1 ? "" : "s") << '\n';
  for (const auto& [m, n] : r.solutions) std::cout << "  (m,n) = (" << m << "," << n << ")\n";
  return kOk;
}

struct SurveyArgs {
  long min = 2, max = 10;
  std::string cap = "100";
  bool rigorous = false;
  unsigned workers = 1;
  std::string out, checkpoint;
  bool no_dedupe = false;
};

int run_survey_cmd(const SurveyArgs& args) {
  SurveyConfig cfg;
  cfg.base_min = args.min;
  cfg.base_max = args.max;
  cfg.cap_mode = args.rigorous ? CapMode::rigorous : CapMode::fixed;
  cfg.cap = parse_cap(args.cap);
  cfg.workers = args.workers;
  cfg.output_path = args.out;
  cfg.checkpoint_path = args.checkpoint;
  cfg.dedupe_ab_swap = !args.no_dedupe;
  const SurveyResult res = run_survey(cfg);
  const auto& s = res.summary;
  std::cout << "triples " << res.total_triples << ", records " << s.records << " (" << res.resumed << " resumed, "
            << res.computed << " computed), rigorous " << s.rigorous_records << '\n';
  std::cout << "histogram:";
  for (const auto& [n, count] : s.histogram) std::cout << " N=" << n << ':' << count;
  std::cout << "\nmax N = " << s.max_N << '\n';
  for (const auto& [a, b, c, n] : s.high_count) std::cout << "  N(" << a << ',' << b << ',' << c << ") = " << n << '\n';
  for (const auto& [a, b, c, n] : s.flagged) {
    std::cout << "*** N >= 4 at (" << a << ',' << b << ',' << c << "): N = " << n
              << " -- counterexample to N <= 3 conjecture ***\n";
  }
  if (s.certificate_failures) std::cout << "CERTIFICATE FAILURES: " << s.certificate_failures << '\n';
  return s.certificate_failures ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"texp: solver, bounds and certificates for a^x + b^y = c^z"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "enumerate all solutions of a^x + b^y = c^z");
  cmd_solve->add_option("a", solve.a)->required();
  cmd_solve->add_option("b", solve.b)->required();
  cmd_solve->add_option("c", solve.c)->required();
  auto* cap_opt = cmd_solve->add_option("--cap", solve.cap, "exponent cap");
  cmd_solve->add_flag("--rigorous", solve.rigorous, "use the effective solution bound as cap (default)")
      ->excludes(cap_opt);
  cmd_solve->add_flag("--json", solve.json);
  cmd_solve->add_option("--volume-limit", solve.volume_limit, "largest candidate volume for a rigorous run");
  cmd_solve->add_option("--threads", solve.threads, "0: hardware concurrency");

  std::string ba, bb, bc;
  bool bjson = false;
  auto* cmd_bound = app.add_subcommand("bound", "effective bounds for an instance");
  cmd_bound->add_option("a", ba)->required();
  cmd_bound->add_option("b", bb)->required();
  cmd_bound->add_option("c", bc)->required();
  cmd_bound->add_flag("--json", bjson);

  Precision tprec = default_precision;
  bool tverbose = false, tjson = false;
  auto* cmd_thr = app.add_subcommand("thresholds", "verify the threshold-function claims");
  cmd_thr->add_option("--precision", tprec, "working precision in bits")->check(CLI::Range(53, 1 << 16));
  cmd_thr->add_flag("--verbose,-v", tverbose);
  cmd_thr->add_flag("--json", tjson);

  std::string ca, cb, cc, ccap = "100";
  bool cjson = false;
  auto* cmd_cert = app.add_subcommand("certify", "canonical form, order data and lemma certificates");
  cmd_cert->add_option("a", ca)->required();
  cmd_cert->add_option("b", cb)->required();
  cmd_cert->add_option("c", cc)->required();
  cmd_cert->add_option("--cap", ccap);
  cmd_cert->add_flag("--json", cjson);

  std::string pa, pb, pk, psign, pcap = "40";
  bool pjson = false;
  auto* cmd_pillai = app.add_subcommand("pillai", "solutions of A^m + sign B^n = k");
  cmd_pillai->add_option("A", pa)->required();
  cmd_pillai->add_option("B", pb)->required();
  cmd_pillai->add_option("k", pk)->required();
  cmd_pillai->add_option("sign", psign, "+1 or -1")->required();
  cmd_pillai->add_option("--cap", pcap);
  cmd_pillai->add_flag("--json", pjson);

  SurveyArgs sv;
  auto* cmd_survey = app.add_subcommand("survey", "count solutions over a range of bases");
  cmd_survey->add_option("--min", sv.min);
  cmd_survey->add_option("--max", sv.max);
  auto* scap = cmd_survey->add_option("--cap", sv.cap);
  cmd_survey->add_flag("--rigorous", sv.rigorous)->excludes(scap);
  cmd_survey->add_option("--workers", sv.workers)->check(CLI::PositiveNumber);
  cmd_survey->add_option("--out", sv.out, "JSON-lines output");
  cmd_survey->add_option("--checkpoint", sv.checkpoint);
  cmd_survey->add_flag("--no-dedupe", sv.no_dedupe, "keep both (a,b,c) and (b,a,c)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*cmd_solve) return run_solve(solve);
    if (*cmd_bound) return run_bound(ba, bb, bc, bjson);
    if (*cmd_thr) return run_thresholds(tprec, tverbose, tjson);
    if (*cmd_cert) return run_certify(ca, cb, cc, ccap, cjson);
    if (*cmd_pillai) return run_pillai(pa, pb, pk, psign, pcap, pjson);
    if (*cmd_survey) return run_survey_cmd(sv);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const checkpoint_error& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kInvalid;
  } catch (const resource_limit& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
