#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asm_census/error.hpp"

namespace asm_census {

namespace detail {
class MatrixWriter;
}

enum class Axis { kRow, kColumn };

inline std::string_view to_string(Axis axis) { return axis == Axis::kRow ? "row" : "column"; }

/// First failed ASM condition in an entry array. `index` and `position` are 1-based;
/// `position` is 0 for full-sum violations.
struct Violation {
  ErrorKind kind;
  Axis axis;
  int index;
  int position;

  bool operator==(const Violation&) const = default;
};

inline AsmError to_error(const Violation& v) {
  std::string detail = std::string(to_string(v.axis)) + " " + std::to_string(v.index);
  if (v.kind == ErrorKind::kPartialSumViolation) detail += ", position " + std::to_string(v.position);
  return AsmError(v.kind, detail);
}

namespace detail {

// Row-major n*n entries already known to lie in {-1, 0, 1}. Full sums are checked
// before prefix sums.
inline std::optional<Violation> first_violation(std::span<const std::int8_t> entries, int n) {
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (int j = 0; j < n; ++j) sum += entries[i * n + j];
    if (sum != 1) return Violation{ErrorKind::kFullSumViolation, Axis::kRow, i + 1, 0};
  }
  for (int j = 0; j < n; ++j) {
    int sum = 0;
    for (int i = 0; i < n; ++i) sum += entries[i * n + j];
    if (sum != 1) return Violation{ErrorKind::kFullSumViolation, Axis::kColumn, j + 1, 0};
  }
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (int j = 0; j < n; ++j) {
      sum += entries[i * n + j];
      if (sum < 0 || sum > 1) return Violation{ErrorKind::kPartialSumViolation, Axis::kRow, i + 1, j + 1};
    }
  }
  for (int j = 0; j < n; ++j) {
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      sum += entries[i * n + j];
      if (sum < 0 || sum > 1) return Violation{ErrorKind::kPartialSumViolation, Axis::kColumn, j + 1, i + 1};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A validated alternating sign matrix. Instances are immutable: the only ways to
/// obtain one are `validate`, the constructors below, and the group actions, all of
/// which return fresh values. Accessors are 0-based; error messages are 1-based.
class AsmMatrix {
 public:
  /// Checks square shape, entry range, full sums, then prefix sums.
  static AsmMatrix validate(const std::vector<std::vector<int>>& raw) {
    const int n = static_cast<int>(raw.size());
    if (n == 0) throw AsmError(ErrorKind::kNotSquare, "matrix has no rows");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(raw[i].size()) != n) {
        throw AsmError(ErrorKind::kNotSquare, "row " + std::to_string(i + 1) + " has " +
                                                  std::to_string(raw[i].size()) + " entries, expected " +
                                                  std::to_string(n));
      }
    }
    std::vector<std::int8_t> entries(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int v = raw[i][j];
        if (v < -1 || v > 1) {
          throw AsmError(ErrorKind::kEntryOutOfRange, "entry (" + std::to_string(i + 1) + "," +
                                                          std::to_string(j + 1) + ") = " + std::to_string(v));
        }
        entries[i * n + j] = static_cast<std::int8_t>(v);
      }
    }
    if (auto v = detail::first_violation(entries, n)) throw to_error(*v);
    return AsmMatrix(n, std::move(entries));
  }

  static AsmMatrix identity(int n) {
    if (n < 1) throw AsmError(ErrorKind::kInvalidOrder, "order must be positive");
    std::vector<std::int8_t> entries(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) entries[i * n + i] = 1;
    return AsmMatrix(n, std::move(entries));
  }

  /// Permutation matrix with a 1 at (i, sigma[i]); `sigma` uses 1-based values.
  static AsmMatrix permutation(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<std::vector<int>> raw(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      if (sigma[i] < 1 || sigma[i] > n) throw AsmError(ErrorKind::kEntryOutOfRange, "permutation value out of range");
      raw[i][sigma[i] - 1] = 1;
    }
    return validate(raw);
  }

  int order() const noexcept { return order_; }
  int at(int row, int col) const { return entries_[static_cast<std::size_t>(row) * order_ + col]; }
  std::span<const std::int8_t> entries() const noexcept { return entries_; }

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
    for (int i = 0; i < order_; ++i)
      for (int j = 0; j < order_; ++j) rows[i][j] = at(i, j);
    return rows;
  }

  /// One line per row using `+`, `.`, `-`.
  std::string to_grid() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(order_) * (order_ + 1));
    for (int i = 0; i < order_; ++i) {
      for (int j = 0; j < order_; ++j) {
        const int v = at(i, j);
        out += v > 0 ? '+' : (v < 0 ? '-' : '.');
      }
      out += '\n';
    }
    return out;
  }

  auto operator<=>(const AsmMatrix&) const = default;
  bool operator==(const AsmMatrix&) const = default;

 private:
  friend class detail::MatrixWriter;

  AsmMatrix(int n, std::vector<std::int8_t> entries) : order_(n), entries_(std::move(entries)) {}

  int order_;
  std::vector<std::int8_t> entries_;
};

namespace detail {

// Library-internal construction and in-place buffer reuse, for code paths that
// preserve validity by construction.
class MatrixWriter {
 public:
  static AsmMatrix zeros(int n) {
    return AsmMatrix(n, std::vector<std::int8_t>(static_cast<std::size_t>(n) * n, 0));
  }
  static AsmMatrix adopt(int n, std::vector<std::int8_t> entries) { return AsmMatrix(n, std::move(entries)); }
  static std::int8_t* data(AsmMatrix& m) { return m.entries_.data(); }
};

}  // namespace detail

}  // namespace asm_census
