#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "bounds.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "json_io.hpp"
#include "lemma_lab.hpp"

namespace texp {

enum class CapMode { rigorous, fixed };

struct SurveyConfig {
  long base_min = 2;
  long base_max = 10;
  CapMode cap_mode = CapMode::fixed;
  std::uint64_t cap = 100;
  bool dedupe_ab_swap = true;
  unsigned workers = 1;
  std::filesystem::path checkpoint_path;  // empty: no checkpointing
  std::filesystem::path output_path;      // empty: records kept in memory only
  bool certify = true;
  double volume_limit = 1e9;               // rigorous mode only
  std::uint64_t stop_after = 0;            // stop once this many new records exist (0: run to the end)

  void validate() const {
    if (base_min < 2) throw invalid_input("base_min must be at least 2");
    if (base_max < base_min) throw invalid_input("base_max must not be below base_min");
    if (cap_mode == CapMode::fixed && cap < 1) throw invalid_input("fixed cap must be at least 1");
    if (workers < 1) throw invalid_input("workers must be at least 1");
  }

  // Fields that determine the record set. Workers and paths are excluded.
  std::string digest() const {
    std::ostringstream os;
    os << "texp-survey-v1|" << base_min << '|' << base_max << '|'
       << (cap_mode == CapMode::rigorous ? std::string("rigorous") : "fixed:" + std::to_string(cap)) << '|'
       << dedupe_ab_swap << '|' << certify;
    const std::string s = os.str();
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

struct CertificateVerdict {
  std::string lemma;
  bool pass = false;
  std::vector<std::string> failed_clauses;

  friend bool operator==(const CertificateVerdict&, const CertificateVerdict&) = default;
};

struct SurveyRecord {
  long a = 0, b = 0, c = 0;
  std::vector<Solution> solutions;
  std::uint64_t cap_used = 0;
  bool rigorous = false;
  std::optional<std::vector<CertificateVerdict>> certificates;
  std::int64_t elapsed_ms = 0;

  std::uint64_t N() const { return solutions.size(); }
  std::tuple<long, long, long> key() const { return {a, b, c}; }
  bool certificates_pass() const {
    if (!certificates) return true;
    return std::all_of(certificates->begin(), certificates->end(), [](const auto& v) { return v.pass; });
  }
  // Equality of content, ignoring timing.
  bool same_content(const SurveyRecord& o) const {
    return key() == o.key() && solutions == o.solutions && cap_used == o.cap_used && rigorous == o.rigorous &&
           certificates == o.certificates;
  }
};

inline Json to_json(const SurveyRecord& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(to_json(s));
  Json j{{"a", r.a}, {"b", r.b}, {"c", r.c}, {"N", r.N()}, {"solutions", std::move(sols)},
         {"cap_used", r.cap_used}, {"rigorous", r.rigorous}};
  if (r.certificates) {
    Json certs = Json::array();
    for (const auto& v : *r.certificates) {
      certs.push_back({{"lemma", v.lemma}, {"pass", v.pass}, {"failed_clauses", v.failed_clauses}});
    }
    j["certificates"] = std::move(certs);
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline SurveyRecord survey_record_from_json(const Json& j) {
  SurveyRecord r;
  r.a = j.at("a").get<long>();
  r.b = j.at("b").get<long>();
  r.c = j.at("c").get<long>();
  for (const auto& s : j.at("solutions")) r.solutions.push_back(solution_from_json(s));
  if (j.at("N").get<std::uint64_t>() != r.solutions.size()) throw invalid_input("record N disagrees with solutions");
  r.cap_used = j.at("cap_used").get<std::uint64_t>();
  r.rigorous = j.at("rigorous").get<bool>();
  if (j.contains("certificates")) {
    std::vector<CertificateVerdict> v;
    for (const auto& c : j["certificates"]) {
      v.push_back({c.at("lemma").get<std::string>(), c.at("pass").get<bool>(),
                   c.at("failed_clauses").get<std::vector<std::string>>()});
    }
    r.certificates = std::move(v);
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

// Pairwise-coprime triples of the range in lexicographic order; with
// dedupe_ab_swap only a < b is kept.
inline std::vector<std::tuple<long, long, long>> survey_triples(const SurveyConfig& cfg) {
  cfg.validate();
  std::vector<std::tuple<long, long, long>> out;
  auto g = [](long x, long y) { return std::gcd(x, y); };
  for (long a = cfg.base_min; a <= cfg.base_max; ++a) {
    for (long b = cfg.base_min; b <= cfg.base_max; ++b) {
      if (g(a, b) != 1 || (cfg.dedupe_ab_swap && b < a)) continue;
      for (long c = cfg.base_min; c <= cfg.base_max; ++c) {
        if (g(a, c) == 1 && g(b, c) == 1) out.emplace_back(a, b, c);
      }
    }
  }
  return out;
}

inline SurveyRecord survey_one(const SurveyConfig& cfg, long a, long b, long c) {
  const auto t0 = std::chrono::steady_clock::now();
  const Instance inst(a, b, c);
  SurveyRecord r{a, b, c, {}, 0, false, std::nullopt, 0};
  SieveConfig sieve;
  sieve.threads = 1;
  const Int bound = solution_bound(inst).bound;
  if (cfg.cap_mode == CapMode::rigorous) {
    CountOptions opt;
    opt.volume_limit = cfg.volume_limit;
    opt.sieve = sieve;
    CountResult res = count_solutions(inst, opt);
    r.solutions = std::move(res.set.solutions);
    r.cap_used = res.set.cap;
  } else {
    r.solutions = enumerate_solutions(inst, cfg.cap, sieve).solutions;
    r.cap_used = cfg.cap;
  }
  r.rigorous = Int(static_cast<unsigned long>(r.cap_used)) >= bound;
  if (cfg.certify && r.N() >= 2) {
    std::vector<CertificateVerdict> verdicts;
    for (const auto& cert : certify(inst, r.solutions).certificates) {
      CertificateVerdict v{cert.lemma, cert.verdict(), {}};
      for (const auto& cl : cert.clauses) {
        if (!cl.holds) v.failed_clauses.push_back(cl.name);
      }
      verdicts.push_back(std::move(v));
    }
    r.certificates = std::move(verdicts);
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

struct SurveySummary {
  std::uint64_t records = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // N -> number of records
  std::vector<std::tuple<long, long, long, std::uint64_t>> high_count;  // N >= 3
  std::vector<std::tuple<long, long, long, std::uint64_t>> flagged;     // N >= 4
  std::uint64_t max_N = 0;
  std::uint64_t certificate_failures = 0;
  std::uint64_t rigorous_records = 0;
};

inline SurveySummary summarize(const std::vector<SurveyRecord>& records) {
  SurveySummary s;
  for (const auto& r : records) {
    ++s.records;
    ++s.histogram[r.N()];
    s.max_N = std::max(s.max_N, r.N());
    if (r.N() >= 3) s.high_count.emplace_back(r.a, r.b, r.c, r.N());
    if (r.N() >= 4) s.flagged.emplace_back(r.a, r.b, r.c, r.N());
    if (!r.certificates_pass()) ++s.certificate_failures;
    if (r.rigorous) ++s.rigorous_records;
  }
  return s;
}

struct SurveyResult {
  std::vector<SurveyRecord> records;  // every record of the range, in triple order
  SurveySummary summary;
  std::uint64_t total_triples = 0;
  std::uint64_t resumed = 0;   // records taken over from a previous run
  std::uint64_t computed = 0;  // records computed by this run
  bool complete = false;
};

struct Checkpoint {
  std::string config_digest;
  std::int64_t last_index = -1;  // every triple with index <= last_index is done
};

inline std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
  if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw checkpoint_error("cannot open checkpoint " + path.string());
  try {
    const Json j = Json::parse(in);
    return Checkpoint{j.at("config_digest").get<std::string>(), j.at("last_index").get<std::int64_t>()};
  } catch (const Json::exception& e) {
    throw checkpoint_error("corrupt checkpoint " + path.string() + ": " + e.what());
  }
}

// Write to a sibling temp file, then rename over the target.
inline void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << Json{{"config_digest", cp.config_digest}, {"last_index", cp.last_index}}.dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace detail {

// Reads complete records from an existing JSON-lines file. A torn final line
// (no newline) is dropped and cut off the file; any other bad line is fatal.
inline std::vector<SurveyRecord> load_records(const std::filesystem::path& path) {
  std::vector<SurveyRecord> out;
  if (path.empty() || !std::filesystem::exists(path)) return out;
  std::string text;
  {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::size_t pos = 0, good_end = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) break;
    const std::string line = text.substr(pos, nl - pos);
    if (!line.empty()) {
      try {
        out.push_back(survey_record_from_json(Json::parse(line)));
      } catch (const std::exception& e) {
        throw checkpoint_error("corrupt record in " + path.string() + ": " + e.what());
      }
    }
    pos = good_end = nl + 1;
  }
  if (good_end < text.size()) std::filesystem::resize_file(path, good_end);
  return out;
}

}  // namespace detail

// Runs the survey. With a checkpoint path, an existing checkpoint for the same
// configuration resumes the run; records already present in the output file are
// not recomputed.
inline SurveyResult run_survey(const SurveyConfig& cfg) {
  cfg.validate();
  const auto triples = survey_triples(cfg);
  const std::string digest = cfg.digest();
  SurveyResult result;
  result.total_triples = triples.size();

  std::map<std::tuple<long, long, long>, SurveyRecord> done;
  std::int64_t last_index = -1;
  const auto cp = read_checkpoint(cfg.checkpoint_path);
  if (cp) {
    if (cp->config_digest != digest) {
      throw checkpoint_error("checkpoint " + cfg.checkpoint_path.string() + " was written for configuration " +
                             cp->config_digest + ", current configuration is " + digest);
    }
    if (cp->last_index < -1 || cp->last_index >= static_cast<std::int64_t>(triples.size())) {
      throw checkpoint_error("checkpoint index " + std::to_string(cp->last_index) + " out of range");
    }
    last_index = cp->last_index;
    for (auto& r : detail::load_records(cfg.output_path)) done.emplace(r.key(), std::move(r));
    for (std::int64_t i = 0; i <= last_index; ++i) {
      if (!done.count(triples[i])) {
        throw checkpoint_error("checkpoint claims triple " + std::to_string(i) + " is done but the output lacks it");
      }
    }
  } else if (!cfg.output_path.empty()) {
    std::ofstream(cfg.output_path, std::ios::trunc);
  }
  result.resumed = done.size();

  std::ofstream out;
  if (!cfg.output_path.empty()) {
    out.open(cfg.output_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open output " + cfg.output_path.string());
  }

  std::vector<char> finished(triples.size(), 0);
  for (std::size_t i = 0; i < triples.size(); ++i) finished[i] = done.count(triples[i]) ? 1 : 0;
  std::int64_t prefix = last_index;
  while (prefix + 1 < static_cast<std::int64_t>(triples.size()) && finished[prefix + 1]) ++prefix;

  std::mutex sink;
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> produced{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::string failure_at;

  auto worker = [&] {
    while (!stop) {
      const std::size_t i = next.fetch_add(1);
      if (i >= triples.size()) return;
      if (finished[i]) continue;
      if (cfg.stop_after && produced.fetch_add(1) >= cfg.stop_after) {
        stop = true;
        return;
      }
      const auto [a, b, c] = triples[i];
      try {
        SurveyRecord rec = survey_one(cfg, a, b, c);
        std::lock_guard lock(sink);
        if (out.is_open()) {
          out << to_json(rec).dump() << '\n';
          out.flush();
          if (!out) throw std::runtime_error("write failed");
        }
        finished[i] = 1;
        done.emplace(rec.key(), std::move(rec));
        ++result.computed;
        const std::int64_t before = prefix;
        while (prefix + 1 < static_cast<std::int64_t>(triples.size()) && finished[prefix + 1]) ++prefix;
        if (prefix != before && !cfg.checkpoint_path.empty()) write_checkpoint(cfg.checkpoint_path, {digest, prefix});
      } catch (...) {
        std::lock_guard lock(sink);
        if (!failure) {
          failure = std::current_exception();
          failure_at = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        }
        stop = true;
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < cfg.workers; ++t) pool.emplace_back(worker);
  }
  if (failure) {
    const std::string where = "survey failed at " + failure_at + ": ";
    try {
      std::rethrow_exception(failure);
    } catch (const resource_limit& e) {
      throw resource_limit(where + e.what());
    } catch (const invalid_input& e) {
      throw invalid_input(where + e.what());
    } catch (const std::exception& e) {
      throw std::runtime_error(where + e.what());
    }
  }
  if (!cfg.checkpoint_path.empty() && prefix != last_index) write_checkpoint(cfg.checkpoint_path, {digest, prefix});

  for (const auto& t : triples) {
    auto it = done.find(t);
    if (it != done.end()) result.records.push_back(it->second);
  }
  result.complete = result.records.size() == triples.size();
  result.summary = summarize(result.records);
  return result;
}

}  // namespace texp
