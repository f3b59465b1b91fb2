#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asm_census {

enum class ErrorKind {
  kNotSquare,
  kEntryOutOfRange,
  kPartialSumViolation,
  kFullSumViolation,
  kInvalidOrder,
  kEvenOrder,
  kNotSymmetric,
  kCenterSignMismatch,
  kNeighborMismatch,
  kStateFull,
  kCapExceeded,
  kUnsupportedClass,
  kNotApplicable,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kEntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::kPartialSumViolation: return "PartialSumViolation";
    case ErrorKind::kFullSumViolation: return "FullSumViolation";
    case ErrorKind::kInvalidOrder: return "InvalidOrder";
    case ErrorKind::kEvenOrder: return "EvenOrder";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kCenterSignMismatch: return "CenterSignMismatch";
    case ErrorKind::kNeighborMismatch: return "NeighborMismatch";
    case ErrorKind::kStateFull: return "StateFull";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kUnsupportedClass: return "UnsupportedClass";
    case ErrorKind::kNotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

/// Every failure raised by the library. Positions in messages are 1-based.
class AsmError : public std::runtime_error {
 public:
  AsmError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require_odd_order(int n) {
  if (n < 1) throw AsmError(ErrorKind::kInvalidOrder, "order must be positive, got " + std::to_string(n));
  if (n % 2 == 0) throw AsmError(ErrorKind::kEvenOrder, "order must be odd, got " + std::to_string(n));
}

}  // namespace asm_census
