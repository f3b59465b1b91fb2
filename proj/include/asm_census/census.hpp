#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asm_census/enumerate.hpp"
#include "asm_census/error.hpp"
#include "asm_census/matrix.hpp"
#include "asm_census/symmetry.hpp"

namespace asm_census {

using BigCount = boost::multiprecision::cpp_int;

/// Number of ASMs of order n, as the product over k < n of (3k+1)! / (n+k)!.
/// Evaluated through prime exponents, so no factorial is ever formed.
inline BigCount asm_total_formula(int n) {
  if (n < 1) throw AsmError(ErrorKind::kInvalidOrder, "order must be positive");
  const int limit = 3 * (n - 1) + 1 > 2 * n - 1 ? 3 * (n - 1) + 1 : 2 * n - 1;
  std::vector<bool> composite(limit + 1, false);
  BigCount result = 1;
  for (int p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (long long q = static_cast<long long>(p) * p; q <= limit; q += p) composite[q] = true;
    auto legendre = [p](int m) {
      long long e = 0;
      for (long long pk = p; pk <= m; pk *= p) e += m / pk;
      return e;
    };
    long long exponent = 0;
    for (int k = 0; k < n; ++k) exponent += legendre(3 * k + 1) - legendre(n + k);
    if (exponent < 0) throw std::logic_error("negative prime exponent in ASM product formula");
    result *= boost::multiprecision::pow(BigCount(p), static_cast<unsigned>(exponent));
  }
  return result;
}

/// Structures that can occur at the center for (n, class), in report order.
inline std::vector<CenterStructure> canonical_structures(int n, SymmetryClass c) {
  require_odd_order(n);
  switch (c) {
    case SymmetryClass::kHalfTurn:
    case SymmetryClass::kDoubleDiagonal:
      return {{1, std::nullopt}, {-1, std::nullopt}};
    case SymmetryClass::kQuarterTurn:
      if (n == 1) return {{1, std::nullopt}};
      if (forced_center_sign(n) == 1) return {{1, 0}, {1, -1}};
      return {{-1, 1}, {-1, 0}};
    case SymmetryClass::kPlain:
      break;
  }
  throw AsmError(ErrorKind::kUnsupportedClass, "census needs ht, qt or dd");
}

struct CensusRecord {
  int n = 1;
  SymmetryClass symmetry = SymmetryClass::kHalfTurn;
  std::map<CenterStructure, BigCount> counts;
  BigCount total = 0;
  std::string method;
  std::int64_t elapsed_ms = 0;

  BigCount count_of(const CenterStructure& s) const {
    auto it = counts.find(s);
    return it == counts.end() ? BigCount(0) : it->second;
  }

  /// Pointwise addition; both records must describe the same (n, class).
  void merge(const CensusRecord& other) {
    if (other.n != n || other.symmetry != symmetry) {
      throw AsmError(ErrorKind::kUnsupportedClass, "cannot merge census records of different (n, class)");
    }
    for (const auto& [key, value] : other.counts) counts[key] += value;
    total += other.total;
    elapsed_ms += other.elapsed_ms;
  }

  /// total equals the sum of counts, and every key is admissible for (n, class).
  bool consistent() const {
    BigCount sum = 0;
    const auto allowed = canonical_structures(n, symmetry);
    for (const auto& [key, value] : counts) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) return false;
      sum += value;
    }
    return sum == total;
  }

  bool operator==(const CensusRecord&) const = default;
};

inline std::string_view census_method(SymmetryClass c) {
  return c == SymmetryClass::kHalfTurn ? "fundamental-domain" : "filter";
}

struct CensusOptions {
  int workers = 1;
  EnumerationOptions enumeration;
};

/// Enumerates the symmetric ASMs of order n and counts them by center structure.
/// Counts do not depend on the worker count.
inline CensusRecord run_census(int n, SymmetryClass c, const CensusOptions& options = {}) {
  if (c == SymmetryClass::kPlain) throw AsmError(ErrorKind::kUnsupportedClass, "census needs ht, qt or dd");
  require_odd_order(n);
  const auto start = std::chrono::steady_clock::now();

  using Tally = std::map<CenterStructure, std::uint64_t>;
  const auto tallies = enumerate_partitioned<Tally>(
      n, c, options.workers, [c](Tally& tally, const AsmMatrix& a) { ++tally[center_structure(a, c)]; },
      options.enumeration);

  CensusRecord record;
  record.n = n;
  record.symmetry = c;
  record.method = std::string(census_method(c));
  for (const auto& s : canonical_structures(n, c)) record.counts[s] = 0;
  for (const auto& tally : tallies) {
    for (const auto& [key, value] : tally) {
      record.counts[key] += value;
      record.total += value;
    }
  }
  record.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return record;
}

enum class Conjecture { kHalfTurnTheorem, k1a, k1b, k2 };

inline std::string_view to_string(Conjecture c) {
  switch (c) {
    case Conjecture::kHalfTurnTheorem: return "ht";
    case Conjecture::k1a: return "1a";
    case Conjecture::k1b: return "1b";
    case Conjecture::k2: return "2";
  }
  return "?";
}

inline std::optional<Conjecture> parse_conjecture(std::string_view s) {
  if (s == "ht") return Conjecture::kHalfTurnTheorem;
  if (s == "1a") return Conjecture::k1a;
  if (s == "1b") return Conjecture::k1b;
  if (s == "2") return Conjecture::k2;
  return std::nullopt;
}

inline SymmetryClass class_of(Conjecture c) {
  switch (c) {
    case Conjecture::kHalfTurnTheorem: return SymmetryClass::kHalfTurn;
    case Conjecture::k1a:
    case Conjecture::k1b: return SymmetryClass::kQuarterTurn;
    case Conjecture::k2: return SymmetryClass::kDoubleDiagonal;
  }
  return SymmetryClass::kPlain;
}

/// Only the half-turn relation is a proved theorem; the others are conjectures.
inline bool is_theorem(Conjecture c) { return c == Conjecture::kHalfTurnTheorem; }

struct ApplicableConjecture {
  Conjecture tag;
  /// m for ht and 2 (n = 2m+1); mu for 1a (n = 4mu+1) and 1b (n = 4mu+3).
  int parameter;

  bool operator==(const ApplicableConjecture&) const = default;
};

inline ApplicableConjecture applicable_conjecture(int n, SymmetryClass c) {
  require_odd_order(n);
  const int m = n / 2;
  auto not_applicable = [&] {
    return AsmError(ErrorKind::kNotApplicable,
                    "no ratio relation for class " + std::string(to_string(c)) + " at order " + std::to_string(n));
  };
  switch (c) {
    case SymmetryClass::kHalfTurn:
    case SymmetryClass::kDoubleDiagonal:
      if (m == 0) throw not_applicable();
      return {c == SymmetryClass::kHalfTurn ? Conjecture::kHalfTurnTheorem : Conjecture::k2, m};
    case SymmetryClass::kQuarterTurn: {
      const int mu = m / 2;
      if (mu == 0) throw not_applicable();
      return {m % 2 == 0 ? Conjecture::k1a : Conjecture::k1b, mu};
    }
    case SymmetryClass::kPlain:
      break;
  }
  throw AsmError(ErrorKind::kUnsupportedClass, "no ratio relation for the plain class");
}

struct RatioReport {
  Conjecture conjecture = Conjecture::kHalfTurnTheorem;
  int n = 0;
  int parameter = 0;
  CenterStructure numerator_structure;
  CenterStructure denominator_structure;
  BigCount numerator_count = 0;
  BigCount denominator_count = 0;
  /// Expected numerator : denominator = p : q.
  BigCount expected_p = 0;
  BigCount expected_q = 0;
  bool holds = false;
  /// Set when either structure class is empty; holds is then false.
  bool empty_class = false;

  bool operator==(const RatioReport&) const = default;
};

/// Exact cross-multiplication; an empty class never holds.
inline bool ratio_holds(const BigCount& numerator, const BigCount& denominator, const BigCount& p, const BigCount& q) {
  if (numerator == 0 || denominator == 0) return false;
  return numerator * q == denominator * p;
}

inline RatioReport verify_relation(const CensusRecord& rec) {
  const auto [tag, parameter] = applicable_conjecture(rec.n, rec.symmetry);
  RatioReport report;
  report.conjecture = tag;
  report.n = rec.n;
  report.parameter = parameter;
  report.expected_p = parameter + 1;
  report.expected_q = parameter;
  switch (tag) {
    case Conjecture::kHalfTurnTheorem:
    case Conjecture::k2:
      report.numerator_structure = {1, std::nullopt};
      report.denominator_structure = {-1, std::nullopt};
      break;
    case Conjecture::k1a:
      report.numerator_structure = {1, 0};
      report.denominator_structure = {1, -1};
      break;
    case Conjecture::k1b:
      report.numerator_structure = {-1, 1};
      report.denominator_structure = {-1, 0};
      break;
  }
  report.numerator_count = rec.count_of(report.numerator_structure);
  report.denominator_count = rec.count_of(report.denominator_structure);
  report.empty_class = report.numerator_count == 0 || report.denominator_count == 0;
  report.holds =
      ratio_holds(report.numerator_count, report.denominator_count, report.expected_p, report.expected_q);
  return report;
}

}  // namespace asm_census
