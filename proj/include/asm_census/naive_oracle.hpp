#pragma once

#include <cstdint>
#include <vector>

#include "asm_census/error.hpp"
#include "asm_census/matrix.hpp"

namespace asm_census {

inline constexpr int kNaiveOracleMaxOrder = 4;

/// Every n x n array over {-1, 0, 1}, kept iff it is an ASM. Shares nothing with the
/// column-state search, so it can certify it. Output is in odometer order.
inline std::vector<AsmMatrix> naive_oracle(int n) {
  if (n < 1) throw AsmError(ErrorKind::kInvalidOrder, "order must be positive");
  if (n > kNaiveOracleMaxOrder) {
    throw AsmError(ErrorKind::kCapExceeded, "brute force is limited to order " + std::to_string(kNaiveOracleMaxOrder));
  }
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<std::int8_t> entries(cells, -1);
  std::vector<AsmMatrix> found;
  while (true) {
    if (!detail::first_violation(entries, n)) found.push_back(detail::MatrixWriter::adopt(n, entries));
    std::size_t k = 0;
    while (k < cells && entries[k] == 1) entries[k++] = -1;
    if (k == cells) break;
    ++entries[k];
  }
  return found;
}

}  // namespace asm_census
