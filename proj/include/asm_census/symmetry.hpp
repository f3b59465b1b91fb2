#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "asm_census/error.hpp"
#include "asm_census/matrix.hpp"

namespace asm_census {

enum class SymmetryClass { kPlain, kHalfTurn, kQuarterTurn, kDoubleDiagonal };

inline std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::kPlain: return "plain";
    case SymmetryClass::kHalfTurn: return "ht";
    case SymmetryClass::kQuarterTurn: return "qt";
    case SymmetryClass::kDoubleDiagonal: return "dd";
  }
  return "?";
}

inline std::optional<SymmetryClass> parse_symmetry_class(std::string_view s) {
  if (s == "ht") return SymmetryClass::kHalfTurn;
  if (s == "qt") return SymmetryClass::kQuarterTurn;
  if (s == "dd") return SymmetryClass::kDoubleDiagonal;
  if (s == "plain" || s == "all") return SymmetryClass::kPlain;
  return std::nullopt;
}

namespace detail {

// result(i, j) = a(source(i, j)), 0-based.
template <class Source>
AsmMatrix remap(const AsmMatrix& a, Source source) {
  const int n = a.order();
  AsmMatrix r = MatrixWriter::zeros(n);
  std::int8_t* out = MatrixWriter::data(r);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [si, sj] = source(i, j);
      out[i * n + j] = static_cast<std::int8_t>(a.at(si, sj));
    }
  }
  return r;
}

}  // namespace detail

/// 180 degree rotation.
inline AsmMatrix half_turn(const AsmMatrix& a) {
  const int last = a.order() - 1;
  return detail::remap(a, [last](int i, int j) { return std::pair{last - i, last - j}; });
}

/// 90 degree rotation: r(j, n-1-i) = a(i, j).
inline AsmMatrix quarter_turn(const AsmMatrix& a) {
  const int last = a.order() - 1;
  return detail::remap(a, [last](int i, int j) { return std::pair{last - j, i}; });
}

/// Flip in the main diagonal.
inline AsmMatrix transpose(const AsmMatrix& a) {
  return detail::remap(a, [](int i, int j) { return std::pair{j, i}; });
}

/// Flip in the antidiagonal.
inline AsmMatrix antitranspose(const AsmMatrix& a) {
  const int last = a.order() - 1;
  return detail::remap(a, [last](int i, int j) { return std::pair{last - j, last - i}; });
}

// The predicates compare in place instead of materializing the image.
inline bool is_symmetric(const AsmMatrix& a, SymmetryClass c) {
  const int n = a.order();
  const int last = n - 1;
  switch (c) {
    case SymmetryClass::kPlain:
      return true;
    case SymmetryClass::kHalfTurn:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (a.at(i, j) != a.at(last - i, last - j)) return false;
      return true;
    case SymmetryClass::kQuarterTurn:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (a.at(j, last - i) != a.at(i, j)) return false;
      return true;
    case SymmetryClass::kDoubleDiagonal:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (a.at(i, j) != a.at(j, i) || a.at(i, j) != a.at(last - j, last - i)) return false;
      return true;
  }
  return false;
}

/// Central entry shared by every quarter-turn symmetric ASM of odd order n = 2m+1:
/// +1 when m is even, -1 when m is odd.
inline int forced_center_sign(int n) {
  require_odd_order(n);
  return (n / 2) % 2 == 0 ? 1 : -1;
}

struct NoncentralCounts {
  int kplus = 0;
  int kminus = 0;

  bool operator==(const NoncentralCounts&) const = default;
};

inline NoncentralCounts noncentral_counts(const AsmMatrix& a) {
  const int n = a.order();
  require_odd_order(n);
  const int mid = n / 2;
  NoncentralCounts counts;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == mid && j == mid) continue;
      if (a.at(i, j) > 0) ++counts.kplus;
      if (a.at(i, j) < 0) ++counts.kminus;
    }
  }
  return counts;
}

/// The structure at the center of an odd-order symmetric ASM: the central sign and,
/// for quarter-turn symmetry, the common value of the four orthogonal neighbors.
struct CenterStructure {
  int center = 1;
  std::optional<int> neighbor;

  auto operator<=>(const CenterStructure&) const = default;
  bool operator==(const CenterStructure&) const = default;
};

inline CenterStructure center_structure(const AsmMatrix& a, SymmetryClass c) {
  const int n = a.order();
  require_odd_order(n);
  if (c == SymmetryClass::kPlain) {
    throw AsmError(ErrorKind::kUnsupportedClass, "center structure is undefined for the plain class");
  }
  if (!is_symmetric(a, c)) {
    throw AsmError(ErrorKind::kNotSymmetric, "matrix is not " + std::string(to_string(c)) + "-symmetric");
  }
  const int mid = n / 2;
  CenterStructure s{a.at(mid, mid), std::nullopt};
  if (c != SymmetryClass::kQuarterTurn) return s;

  if (s.center != forced_center_sign(n)) {
    throw AsmError(ErrorKind::kCenterSignMismatch,
                   "center " + std::to_string(s.center) + " at order " + std::to_string(n));
  }
  // Order 1 has no neighbor cells.
  if (n == 1) return s;

  const int up = a.at(mid - 1, mid);
  if (a.at(mid, mid - 1) != up || a.at(mid, mid + 1) != up || a.at(mid + 1, mid) != up) {
    throw AsmError(ErrorKind::kNeighborMismatch, "the four cells adjacent to the center differ");
  }
  const bool allowed = s.center == 1 ? (up == 0 || up == -1) : (up == 1 || up == 0);
  if (!allowed) {
    throw AsmError(ErrorKind::kNeighborMismatch,
                   "neighbor " + std::to_string(up) + " impossible with center " + std::to_string(s.center));
  }
  s.neighbor = up;
  return s;
}

}  // namespace asm_census
