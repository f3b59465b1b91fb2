#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "asm_census/census.hpp"
#include "asm_census/error.hpp"
#include "asm_census/symmetry.hpp"

namespace asm_census {

inline constexpr std::string_view kEngineVersion = "1.0.0";
inline constexpr std::string_view kCensusSchema = "asm-census/1";

using Json = nlohmann::ordered_json;

/// Thrown for malformed reports and cache entries.
class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string signed_value(int v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

inline int parse_signed_value(std::string_view s) {
  if (s == "+1" || s == "1") return 1;
  if (s == "0") return 0;
  if (s == "-1") return -1;
  throw ReportError("bad structure value '" + std::string(s) + "'");
}

inline BigCount parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ReportError("count must be a nonnegative decimal string, got '" + s + "'");
  }
  return BigCount(s);
}

}  // namespace detail

/// "center:+1" or "center:+1,adj:-1".
inline std::string structure_key(const CenterStructure& s) {
  std::string key = "center:" + detail::signed_value(s.center);
  if (s.neighbor) key += ",adj:" + detail::signed_value(*s.neighbor);
  return key;
}

inline CenterStructure parse_structure_key(std::string_view key) {
  constexpr std::string_view center_tag = "center:";
  constexpr std::string_view adj_tag = ",adj:";
  if (!key.starts_with(center_tag)) throw ReportError("bad structure key '" + std::string(key) + "'");
  key.remove_prefix(center_tag.size());
  CenterStructure s;
  const auto comma = key.find(adj_tag);
  s.center = detail::parse_signed_value(key.substr(0, comma));
  if (s.center == 0) throw ReportError("center must be +1 or -1");
  if (comma != std::string_view::npos) s.neighbor = detail::parse_signed_value(key.substr(comma + adj_tag.size()));
  return s;
}

/// Canonical structures first, then any others in key order.
inline std::vector<CenterStructure> report_order(const CensusRecord& rec) {
  std::vector<CenterStructure> order;
  try {
    order = canonical_structures(rec.n, rec.symmetry);
  } catch (const AsmError&) {
  }
  for (const auto& [key, value] : rec.counts) {
    if (std::find(order.begin(), order.end(), key) == order.end()) order.push_back(key);
  }
  return order;
}

inline Json to_json(const CensusRecord& rec) {
  Json counts = Json::object();
  for (const auto& s : report_order(rec)) counts[structure_key(s)] = rec.count_of(s).str();
  return Json{
      {"schema", kCensusSchema},
      {"n", rec.n},
      {"class", to_string(rec.symmetry)},
      {"counts", counts},
      {"total", rec.total.str()},
      {"method", rec.method},
      {"elapsed_ms", rec.elapsed_ms},
      {"engine_version", kEngineVersion},
  };
}

inline CensusRecord census_from_json(const Json& j) {
  try {
    if (j.at("schema").get<std::string>() != kCensusSchema) throw ReportError("unknown schema");
    CensusRecord rec;
    rec.n = j.at("n").get<int>();
    const auto cls = parse_symmetry_class(j.at("class").get<std::string>());
    if (!cls || *cls == SymmetryClass::kPlain) throw ReportError("unknown class");
    rec.symmetry = *cls;
    for (const auto& [key, value] : j.at("counts").items()) {
      rec.counts[parse_structure_key(key)] = detail::parse_count(value.get<std::string>());
    }
    rec.total = detail::parse_count(j.at("total").get<std::string>());
    rec.method = j.at("method").get<std::string>();
    rec.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return rec;
  } catch (const Json::exception& e) {
    throw ReportError(std::string("malformed census record: ") + e.what());
  }
}

/// `n,class,structure,count` plus one row per structure.
inline std::string to_csv(const CensusRecord& rec) {
  std::string out = "n,class,structure,count\n";
  for (const auto& s : report_order(rec)) {
    out += std::to_string(rec.n) + "," + std::string(to_string(rec.symmetry)) + "," + structure_key(s) + "," +
           rec.count_of(s).str() + "\n";
  }
  return out;
}

/// "p/q" in lowest terms, or "-" when q is zero.
inline std::string reduced_ratio(const BigCount& p, const BigCount& q) {
  if (q == 0) return "-";
  const BigCount g = boost::multiprecision::gcd(p, q);
  if (g == 0) return "0/1";
  return BigCount(p / g).str() + "/" + BigCount(q / g).str();
}

enum class RelationStatus { kHolds, kTheoremViolated, kConjectureViolated };

inline RelationStatus status_of(const RatioReport& r) {
  if (r.holds) return RelationStatus::kHolds;
  return is_theorem(r.conjecture) ? RelationStatus::kTheoremViolated : RelationStatus::kConjectureViolated;
}

inline std::string_view to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::kHolds: return "holds";
    case RelationStatus::kTheoremViolated: return "THEOREM VIOLATED - engine bug";
    case RelationStatus::kConjectureViolated: return "conjecture violated - verify build";
  }
  return "?";
}

inline std::string_view status_tag(RelationStatus s) {
  switch (s) {
    case RelationStatus::kHolds: return "holds";
    case RelationStatus::kTheoremViolated: return "theorem-violated";
    case RelationStatus::kConjectureViolated: return "conjecture-violated";
  }
  return "?";
}

inline Json to_json(const RatioReport& r) {
  return Json{
      {"conjecture", to_string(r.conjecture)},
      {"n", r.n},
      {"parameter", r.parameter},
      {"numerator", {{"structure", structure_key(r.numerator_structure)}, {"count", r.numerator_count.str()}}},
      {"denominator", {{"structure", structure_key(r.denominator_structure)}, {"count", r.denominator_count.str()}}},
      {"expected", {r.expected_p.str(), r.expected_q.str()}},
      {"holds", r.holds},
      {"empty_class", r.empty_class},
      {"status", status_tag(status_of(r))},
  };
}

inline std::string census_table(const CensusRecord& rec) {
  std::optional<RatioReport> relation;
  try {
    relation = verify_relation(rec);
  } catch (const AsmError&) {
  }
  std::ostringstream out;
  out << "order " << rec.n << ", class " << to_string(rec.symmetry) << ", method " << rec.method << ", "
      << rec.elapsed_ms << " ms\n";
  out << std::left << std::setw(20) << "structure" << std::right << std::setw(24) << "count";
  if (relation) out << "  ratio vs " << structure_key(relation->denominator_structure);
  out << "\n";
  for (const auto& s : report_order(rec)) {
    out << std::left << std::setw(20) << structure_key(s) << std::right << std::setw(24) << rec.count_of(s).str();
    if (relation) out << "  " << reduced_ratio(rec.count_of(s), relation->denominator_count);
    out << "\n";
  }
  out << std::left << std::setw(20) << "total" << std::right << std::setw(24) << rec.total.str() << "\n";
  if (relation) {
    out << "relation " << to_string(relation->conjecture) << " (parameter " << relation->parameter << "): observed "
        << reduced_ratio(relation->numerator_count, relation->denominator_count) << ", expected "
        << reduced_ratio(relation->expected_p, relation->expected_q) << " -> " << to_string(status_of(*relation))
        << (relation->empty_class ? " (empty class)" : "") << "\n";
  }
  return out.str();
}

inline std::string verify_table(const std::vector<RatioReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "rel" << std::right << std::setw(5) << "n" << std::setw(7) << "param"
      << std::setw(22) << "numerator" << std::setw(22) << "denominator" << std::setw(10) << "expected"
      << "  status\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(6) << to_string(r.conjecture) << std::right << std::setw(5) << r.n << std::setw(7)
        << r.parameter << std::setw(22) << r.numerator_count.str() << std::setw(22) << r.denominator_count.str()
        << std::setw(10) << (r.expected_p.str() + "/" + r.expected_q.str()) << "  " << to_string(status_of(r))
        << (r.empty_class ? " (empty class)" : "") << "\n";
  }
  if (reports.empty()) out << "(no applicable orders)\n";
  return out.str();
}

inline std::string verify_csv(const std::vector<RatioReport>& reports) {
  std::string out = "conjecture,n,parameter,numerator,denominator,expected_p,expected_q,holds,status\n";
  for (const auto& r : reports) {
    out += std::string(to_string(r.conjecture)) + "," + std::to_string(r.n) + "," + std::to_string(r.parameter) + "," +
           r.numerator_count.str() + "," + r.denominator_count.str() + "," + r.expected_p.str() + "," +
           r.expected_q.str() + "," + (r.holds ? "true" : "false") + "," + std::string(status_tag(status_of(r))) +
           "\n";
  }
  return out;
}

/// Census records on disk, keyed by (n, class, engine version). Unreadable or
/// foreign files are treated as empty.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

  static std::string key(int n, SymmetryClass c) {
    return "n=" + std::to_string(n) + ";class=" + std::string(to_string(c)) + ";engine=" + std::string(kEngineVersion);
  }

  std::optional<CensusRecord> find(int n, SymmetryClass c) const {
    if (!entries_.contains(key(n, c))) return std::nullopt;
    try {
      auto rec = census_from_json(entries_.at(key(n, c)));
      if (rec.n != n || rec.symmetry != c || !rec.consistent()) return std::nullopt;
      return rec;
    } catch (const ReportError&) {
      return std::nullopt;
    }
  }

  void store(const CensusRecord& rec) {
    entries_[key(rec.n, rec.symmetry)] = to_json(rec);
    dirty_ = true;
  }

  /// Writes through a temporary file and rename.
  void save() {
    if (!dirty_) return;
    const Json doc{{"schema", "asm-census-cache/1"}, {"records", entries_}};
    auto tmp = path_;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw ReportError("cannot write cache file " + tmp.string());
      out << doc.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path_);
    dirty_ = false;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) return;
    try {
      const Json doc = Json::parse(in);
      if (doc.value("schema", "") == "asm-census-cache/1" && doc.contains("records") && doc["records"].is_object()) {
        entries_ = doc["records"];
      }
    } catch (const Json::exception&) {
    }
  }

  std::filesystem::path path_;
  Json entries_ = Json::object();
  bool dirty_ = false;
};

}  // namespace asm_census
