#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "asm_census/asm_census.hpp"

namespace asm_census::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitConjectureViolation = 3,
};

enum class Format { kText, kJson, kCsv };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return std::nullopt;
}

struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::optional<int> max_n;
  std::optional<SymmetryClass> symmetry;
  Format format = Format::kText;
  std::string out_path;
  int workers = std::max(1u, std::thread::hardware_concurrency());
  std::optional<int> cap;
  std::string cache_path = ".asm-census-cache.json";
  bool use_cache = true;
  std::string method;      // count: "", "enumerate" or "formula"
  std::string conjecture;  // verify: ht, 1a, 1b, 2 or all
  int limit = 10;          // list
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

inline EnumerationOptions enumeration_options(const RunConfig& cfg) {
  EnumerationOptions o;
  o.cap = cfg.cap;
  return o;
}

// AsmErrors caused by the request map to usage errors; the rest are internal failures.
inline bool is_request_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEvenOrder:
    case ErrorKind::kCapExceeded:
    case ErrorKind::kInvalidOrder:
    case ErrorKind::kUnsupportedClass:
    case ErrorKind::kNotApplicable:
      return true;
    default:
      return false;
  }
}

inline CensusRecord census_with_cache(const RunConfig& cfg, int n, SymmetryClass c, ResultCache* cache) {
  if (cache) {
    if (auto hit = cache->find(n, c)) return *hit;
  }
  CensusOptions options;
  options.workers = cfg.workers;
  options.enumeration = enumeration_options(cfg);
  CensusRecord rec = run_census(n, c, options);
  if (cache) cache->store(rec);
  return rec;
}

inline std::unique_ptr<ResultCache> open_cache(const RunConfig& cfg) {
  if (!cfg.use_cache) return nullptr;
  return std::make_unique<ResultCache>(cfg.cache_path);
}

}  // namespace detail

inline int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = detail::require(cfg.n, "--n");
  if (n < 1) throw UsageError("--n must be positive");
  if (!cfg.method.empty() && cfg.method != "enumerate" && cfg.method != "formula") {
    throw UsageError("--method must be enumerate or formula");
  }
  const auto options = detail::enumeration_options(cfg);
  const int cap = std::min(options.cap.value_or(kDefaultCapAll), kMaxSupportedOrder);

  std::optional<BigCount> formula;
  std::optional<BigCount> enumerated;
  if (cfg.method != "enumerate") formula = asm_total_formula(n);
  if (cfg.method == "enumerate" || (cfg.method.empty() && n <= cap)) {
    const auto parts = enumerate_partitioned<std::uint64_t>(
        n, SymmetryClass::kPlain, cfg.workers, [](std::uint64_t& c, const AsmMatrix&) { ++c; }, options);
    BigCount total = 0;
    for (auto c : parts) total += c;
    enumerated = total;
  }
  const bool agree = !formula || !enumerated || *formula == *enumerated;

  switch (cfg.format) {
    case Format::kText:
      out << "order " << n << ":";
      if (formula) out << " formula " << formula->str();
      if (enumerated) out << (formula ? "," : "") << " enumerate " << enumerated->str();
      if (formula && enumerated) out << (agree ? " (methods agree)" : " (METHODS DISAGREE)");
      out << "\n";
      break;
    case Format::kJson: {
      Json j{{"n", n}};
      if (formula) j["formula"] = formula->str();
      if (enumerated) j["enumerate"] = enumerated->str();
      if (formula && enumerated) j["agree"] = agree;
      out << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << "n,method,count\n";
      if (formula) out << n << ",formula," << formula->str() << "\n";
      if (enumerated) out << n << ",enumerate," << enumerated->str() << "\n";
      break;
  }
  if (!agree) {
    err << "error: enumeration and product formula disagree at order " << n << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

inline void write_census(const CensusRecord& rec, Format format, std::ostream& out) {
  switch (format) {
    case Format::kText: out << census_table(rec); break;
    case Format::kJson: out << to_json(rec).dump() << "\n"; break;
    case Format::kCsv: out << to_csv(rec); break;
  }
}

inline int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = detail::require(cfg.n, "--n");
  if (!cfg.symmetry || *cfg.symmetry == SymmetryClass::kPlain) throw UsageError("--class must be ht, qt or dd");
  auto cache = detail::open_cache(cfg);
  const CensusRecord rec = detail::census_with_cache(cfg, n, *cfg.symmetry, cache.get());
  if (!rec.consistent()) {
    err << "error: census record is inconsistent\n";
    return kExitFailure;
  }
  write_census(rec, cfg.format, out);
  if (cache) cache->save();
  return kExitOk;
}

/// Ratio reports for every odd n <= max_n where `tag` applies, in order of n.
inline std::vector<RatioReport> sweep(const RunConfig& cfg, Conjecture tag, int max_n, ResultCache* cache) {
  std::vector<RatioReport> reports;
  const SymmetryClass c = class_of(tag);
  for (int n = 3; n <= max_n; n += 2) {
    try {
      if (applicable_conjecture(n, c).tag != tag) continue;
    } catch (const AsmError& e) {
      if (e.kind() != ErrorKind::kNotApplicable) throw;
      continue;
    }
    const CensusRecord rec = detail::census_with_cache(cfg, n, c, cache);
    if (!rec.consistent()) throw std::logic_error("inconsistent census record at order " + std::to_string(n));
    reports.push_back(verify_relation(rec));
  }
  return reports;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int max_n = detail::require(cfg.max_n, "--max-n");
  std::vector<Conjecture> tags;
  if (cfg.conjecture == "all") {
    tags = {Conjecture::kHalfTurnTheorem, Conjecture::k1a, Conjecture::k1b, Conjecture::k2};
  } else if (auto tag = parse_conjecture(cfg.conjecture)) {
    tags = {*tag};
  } else {
    throw UsageError("--conjecture must be ht, 1a, 1b, 2 or all");
  }

  auto cache = detail::open_cache(cfg);
  std::vector<RatioReport> reports;
  for (auto tag : tags) {
    auto part = sweep(cfg, tag, max_n, cache.get());
    reports.insert(reports.end(), part.begin(), part.end());
  }
  if (cache) cache->save();

  switch (cfg.format) {
    case Format::kText: out << verify_table(reports); break;
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump() << "\n";
      break;
    }
    case Format::kCsv: out << verify_csv(reports); break;
  }

  bool theorem_failed = false;
  bool conjecture_failed = false;
  for (const auto& r : reports) {
    const auto status = status_of(r);
    theorem_failed |= status == RelationStatus::kTheoremViolated;
    conjecture_failed |= status == RelationStatus::kConjectureViolated;
  }
  if (theorem_failed) {
    err << "error: the half-turn relation failed; the engine is broken\n";
    return kExitFailure;
  }
  if (conjecture_failed) {
    err << "warning: conjecture violated - verify build (run selfcheck)\n";
    return kExitConjectureViolation;
  }
  return kExitOk;
}

inline int cmd_list(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const int n = detail::require(cfg.n, "--n");
  if (!cfg.symmetry) throw UsageError("missing required flag --class");
  if (cfg.limit < 0) throw UsageError("--limit must be nonnegative");
  const auto options = detail::enumeration_options(cfg);
  std::vector<AsmMatrix> shown;
  auto take = [&](const AsmMatrix& a) {
    if (shown.size() >= static_cast<std::size_t>(cfg.limit)) return false;
    shown.push_back(a);
    return shown.size() < static_cast<std::size_t>(cfg.limit);
  };
  if (cfg.limit > 0) {
    if (*cfg.symmetry == SymmetryClass::kPlain) {
      enumerate_all(n, take, options);
    } else {
      enumerate_symmetric(n, *cfg.symmetry, take, options);
    }
  }

  switch (cfg.format) {
    case Format::kText:
      for (std::size_t i = 0; i < shown.size(); ++i) {
        if (i > 0) out << "\n";
        out << shown[i].to_grid();
      }
      break;
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& a : shown) arr.push_back(a.to_rows());
      out << arr.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << "index,row,entries\n";
      for (std::size_t i = 0; i < shown.size(); ++i) {
        for (int r = 0; r < n; ++r) {
          out << i + 1 << "," << r + 1 << ",";
          for (int c = 0; c < n; ++c) out << (c ? " " : "") << shown[i].at(r, c);
          out << "\n";
        }
      }
      break;
  }
  return kExitOk;
}

inline int cmd_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int max_n = detail::require(cfg.max_n, "--max-n");
  if (max_n < 1 || max_n > kSelfCheckMaxOrder) {
    throw UsageError("--max-n must be between 1 and " + std::to_string(kSelfCheckMaxOrder));
  }
  const SelfCheckReport report = run_selfcheck(max_n, detail::enumeration_options(cfg));
  if (cfg.format == Format::kJson) {
    Json arr = Json::array();
    for (const auto& c : report.checks) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << Json{{"passed", report.passed()}, {"checks", arr}}.dump() << "\n";
  } else {
    for (const auto& c : report.checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    out << (report.passed() ? "selfcheck passed" : "selfcheck FAILED") << "\n";
  }
  if (!report.passed()) {
    err << "error: selfcheck failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

/// Dispatches a parsed configuration; exceptions become exit codes.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.workers < 1) throw UsageError("--workers must be at least 1");
    if (cfg.command == "count") return cmd_count(cfg, out, err);
    if (cfg.command == "census") return cmd_census(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "list") return cmd_list(cfg, out, err);
    if (cfg.command == "selfcheck") return cmd_selfcheck(cfg, out, err);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AsmError& e) {
    err << "error: " << e.what() << "\n";
    return detail::is_request_error(e.kind()) ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace asm_census::cli
