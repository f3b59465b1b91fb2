#pragma once

#include <set>
#include <string>
#include <vector>

#include "asm_census/census.hpp"
#include "asm_census/enumerate.hpp"
#include "asm_census/matrix.hpp"
#include "asm_census/naive_oracle.hpp"
#include "asm_census/symmetry.hpp"

namespace asm_census {

inline constexpr int kSelfCheckMaxOrder = 7;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfCheckReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Copies of every matrix produced by the search for (n, c); kPlain means all ASMs.
inline std::vector<AsmMatrix> collect(int n, SymmetryClass c, const EnumerationOptions& options = {}) {
  std::vector<AsmMatrix> out;
  auto keep = [&](const AsmMatrix& a) { out.push_back(a); };
  if (c == SymmetryClass::kPlain) {
    enumerate_all(n, keep, options);
  } else {
    enumerate_symmetric(n, c, keep, options);
  }
  return out;
}

namespace detail {

inline std::string join_matches(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += i + 1 == parts.size() ? " and " : ", ";
    s += parts[i];
  }
  return s;
}

// Group-action identities and closure on one matrix; empty string when all hold.
inline std::string group_algebra_failure(const AsmMatrix& a) {
  const AsmMatrix q1 = quarter_turn(a);
  const AsmMatrix q2 = quarter_turn(q1);
  const AsmMatrix h = half_turn(a);
  if (quarter_turn(quarter_turn(q2)) != a) return "quarter_turn^4 != id";
  if (q2 != h) return "quarter_turn^2 != half_turn";
  if (antitranspose(transpose(a)) != h) return "antitranspose . transpose != half_turn";
  if (transpose(transpose(a)) != a) return "transpose is not an involution";
  if (antitranspose(antitranspose(a)) != a) return "antitranspose is not an involution";
  for (const AsmMatrix* image : {&q1, &h}) {
    if (first_violation(image->entries(), image->order())) return "group action produced an invalid matrix";
  }
  const AsmMatrix t = transpose(a);
  const AsmMatrix at = antitranspose(a);
  if (first_violation(t.entries(), t.order()) || first_violation(at.entries(), at.order())) {
    return "diagonal flip produced an invalid matrix";
  }
  return {};
}

}  // namespace detail

/// Oracle equivalence (n <= 4), product-formula agreement, fundamental-domain search
/// against filtering the full enumeration (odd n), and group-action algebra.
inline SelfCheckReport run_selfcheck(int max_n, const EnumerationOptions& options = {}) {
  if (max_n < 1 || max_n > kSelfCheckMaxOrder) {
    throw AsmError(ErrorKind::kCapExceeded, "selfcheck supports 1 <= max-n <= " + std::to_string(kSelfCheckMaxOrder));
  }
  SelfCheckReport report;

  {
    CheckResult check{"oracle equivalence", true, {}};
    std::vector<std::string> matched;
    for (int n = 1; n <= std::min(max_n, kNaiveOracleMaxOrder); ++n) {
      const auto naive = naive_oracle(n);
      const auto searched = collect(n, SymmetryClass::kPlain, options);
      const std::set<AsmMatrix> a(naive.begin(), naive.end());
      const std::set<AsmMatrix> b(searched.begin(), searched.end());
      std::size_t common = 0;
      for (const auto& m : a) common += b.count(m);
      matched.push_back(std::to_string(common) + "/" + std::to_string(naive.size()));
      if (a != b || searched.size() != b.size()) check.passed = false;
    }
    check.detail = detail::join_matches(matched) + " matrices matched";
    report.checks.push_back(check);
  }

  {
    CheckResult check{"product formula", true, {}};
    for (int n = 1; n <= max_n; ++n) {
      const std::uint64_t counted = enumerate_all(n, [](const AsmMatrix&) {}, options);
      const BigCount formula = asm_total_formula(n);
      if (formula != counted) check.passed = false;
      check.detail += (n > 1 ? ", " : "") + std::string("n=") + std::to_string(n) + ": " + std::to_string(counted) +
                      (formula == counted ? "" : " vs formula " + formula.str());
    }
    report.checks.push_back(check);
  }

  {
    CheckResult check{"fundamental domain", true, {}};
    for (int n = 1; n <= max_n; n += 2) {
      const auto all = collect(n, SymmetryClass::kPlain, options);
      for (auto c : {SymmetryClass::kHalfTurn, SymmetryClass::kQuarterTurn, SymmetryClass::kDoubleDiagonal}) {
        std::set<AsmMatrix> filtered;
        for (const auto& a : all)
          if (is_symmetric(a, c)) filtered.insert(a);
        const auto searched = collect(n, c, options);
        const std::set<AsmMatrix> got(searched.begin(), searched.end());
        const bool ok = got == filtered && got.size() == searched.size();
        if (!ok) check.passed = false;
        check.detail += (check.detail.empty() ? "" : ", ") + std::string(to_string(c)) + "(" + std::to_string(n) +
                        ")=" + std::to_string(searched.size()) + (ok ? "" : " MISMATCH");
      }
    }
    report.checks.push_back(check);
  }

  {
    CheckResult check{"group algebra", true, {}};
    std::size_t tested = 0;
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
      enumerate_all(
          n,
          [&](const AsmMatrix& a) {
            ++tested;
            if (const auto failure = detail::group_algebra_failure(a); !failure.empty() && check.passed) {
              check.passed = false;
              check.detail = "order " + std::to_string(n) + ": " + failure + "; ";
            }
          },
          options);
    }
    check.detail += std::to_string(tested) + " matrices checked";
    report.checks.push_back(check);
  }

  return report;
}

}  // namespace asm_census
