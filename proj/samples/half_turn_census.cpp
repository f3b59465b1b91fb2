// Prints the half-turn census for small odd orders and checks the ratio relation.
#include <iostream>

#include "asm_census/asm_census.hpp"

int main() {
  using namespace asm_census;
  for (int n = 3; n <= 9; n += 2) {
    const CensusRecord rec = run_census(n, SymmetryClass::kHalfTurn);
    const RatioReport ratio = verify_relation(rec);
    std::cout << "n=" << n << "  center +1: " << ratio.numerator_count << "  center -1: " << ratio.denominator_count
              << "  expected " << ratio.expected_p << "/" << ratio.expected_q << "  "
              << (ratio.holds ? "holds" : "FAILS") << "\n";
  }
  std::cout << "\nfirst quarter-turn symmetric ASM of order 5:\n";
  enumerate_symmetric(5, SymmetryClass::kQuarterTurn, [](const AsmMatrix& a) {
    std::cout << a.to_grid();
    return false;
  });
}
