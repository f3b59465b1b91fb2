#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <vector>

#include "asm_census/error.hpp"
#include "asm_census/matrix.hpp"
#include "asm_census/symmetry.hpp"

namespace asm_census {

inline constexpr int kMaxSupportedOrder = 64;
inline constexpr int kDefaultCapAll = 15;
inline constexpr int kDefaultCapSymmetric = 17;

enum class Revalidation { kAll, kSampled };

#ifdef NDEBUG
inline constexpr Revalidation kDefaultRevalidation = Revalidation::kSampled;
#else
inline constexpr Revalidation kDefaultRevalidation = Revalidation::kAll;
#endif

/// In sampled mode each search re-validates only its first this-many matrices.
inline constexpr std::uint64_t kRevalidationSample = 1000;

struct EnumerationOptions {
  /// Replaces the default order cap of whichever enumeration is run.
  std::optional<int> cap;
  Revalidation revalidation = kDefaultRevalidation;
};

namespace detail {

inline constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline std::uint64_t reverse_bits(std::uint64_t bits, int n) {
  std::uint64_t r = 0;
  for (int j = 0; j < n; ++j) {
    if (bits >> j & 1) r |= std::uint64_t{1} << (n - 1 - j);
  }
  return r;
}

// Bits strictly above position p.
inline constexpr std::uint64_t above(int p) { return p >= 63 ? 0 : ~std::uint64_t{0} << (p + 1); }

// Calls f(next) for every successor of `bits`, in descending lexicographic order of
// the column strings (column 1 most significant).
template <class F>
void for_each_successor(std::uint64_t bits, int n, F&& f) {
  const std::uint64_t zeros_all = ~bits & full_mask(n);
  auto place_plus = [&](auto& self, std::uint64_t from_mask, std::uint64_t t) -> void {
    for (std::uint64_t zeros = zeros_all & from_mask; zeros != 0; zeros &= zeros - 1) {
      const int p = std::countr_zero(zeros);
      const std::uint64_t tp = t | std::uint64_t{1} << p;
      f(tp);
      for (std::uint64_t ones = bits & above(p); ones != 0;) {
        const int q = 63 - std::countl_zero(ones);
        ones &= ~(std::uint64_t{1} << q);
        self(self, above(q), tp & ~(std::uint64_t{1} << q));
      }
    }
  };
  place_plus(place_plus, ~std::uint64_t{0}, bits);
}

// True iff next - prev is a valid ASM row: changed positions alternate +1, -1, ...,
// starting and ending with +1.
inline bool is_transition(std::uint64_t prev, std::uint64_t next) {
  std::uint64_t changed = prev ^ next;
  if (changed == 0) return false;
  bool expect_plus = true;
  for (; changed != 0; changed &= changed - 1) {
    const std::uint64_t b = changed & (~changed + 1);
    const bool plus = (next & b) != 0;
    if (plus != expect_plus) return false;
    expect_plus = !expect_plus;
  }
  return !expect_plus;
}

}  // namespace detail

/// Partial column sums after some number of rows; bit j holds column j+1.
struct ColumnState {
  int order = 0;
  std::uint64_t bits = 0;

  int rows_emitted() const { return std::popcount(bits); }
  bool is_full() const { return bits == detail::full_mask(order); }
  bool test(int column) const { return (bits >> column & 1) != 0; }

  /// Column 1 first, e.g. "010".
  std::string to_string() const {
    std::string s(order, '0');
    for (int j = 0; j < order; ++j)
      if (test(j)) s[j] = '1';
    return s;
  }

  static ColumnState parse(std::string_view s) {
    if (s.empty() || s.size() > kMaxSupportedOrder) throw AsmError(ErrorKind::kInvalidOrder, "bad state length");
    ColumnState st{static_cast<int>(s.size()), 0};
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] == '1') {
        st.bits |= std::uint64_t{1} << j;
      } else if (s[j] != '0') {
        throw AsmError(ErrorKind::kEntryOutOfRange, "state characters must be 0 or 1");
      }
    }
    return st;
  }

  bool operator==(const ColumnState&) const = default;
};

inline std::vector<ColumnState> successors(const ColumnState& s) {
  if (s.rows_emitted() >= s.order) throw AsmError(ErrorKind::kStateFull, "all " + std::to_string(s.order) + " rows emitted");
  std::vector<ColumnState> out;
  detail::for_each_successor(s.bits, s.order, [&](std::uint64_t t) { out.push_back({s.order, t}); });
  return out;
}

namespace detail {

enum class Domain { kFull, kHalfTurn };

inline void check_cap(int n, int default_cap, const EnumerationOptions& options) {
  if (n < 1) throw AsmError(ErrorKind::kInvalidOrder, "order must be positive, got " + std::to_string(n));
  const int cap = std::min(options.cap.value_or(default_cap), kMaxSupportedOrder);
  if (n > cap) {
    throw AsmError(ErrorKind::kCapExceeded, "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

// Depth-first search over column states. kFull emits every ASM after n rows.
// kHalfTurn searches rows 1..m of n = 2m+1; the middle row is then forced, since the
// lower half (rows reversed) must complete every column: the state after the middle
// row must be the complement of the reversed state after row m.
// `visit` returns false to stop the search.
template <class Visit>
class RowSearch {
 public:
  RowSearch(int n, Domain domain, const EnumerationOptions& options, Visit& visit)
      : n_(n),
        domain_(domain),
        leaf_depth_(domain == Domain::kFull ? n : n / 2),
        full_(full_mask(n)),
        revalidation_(options.revalidation),
        matrix_(MatrixWriter::zeros(n)),
        visit_(visit) {}

  int leaf_depth() const { return leaf_depth_; }

  // `prefix` holds the states after rows 1..k.
  void run(std::span<const std::uint64_t> prefix) {
    std::uint64_t state = 0;
    for (std::size_t r = 0; r < prefix.size(); ++r) {
      write_row(static_cast<int>(r), state, prefix[r]);
      state = prefix[r];
    }
    descend(static_cast<int>(prefix.size()), state);
  }

  std::uint64_t count() const { return count_; }

 private:
  void descend(int depth, std::uint64_t state) {
    if (depth == leaf_depth_) {
      leaf(state);
      return;
    }
    for_each_successor(state, n_, [&](std::uint64_t next) {
      if (stopped_) return;
      write_row(depth, state, next);
      descend(depth + 1, next);
    });
  }

  void leaf(std::uint64_t state) {
    if (domain_ == Domain::kHalfTurn) {
      const std::uint64_t closing = ~reverse_bits(state, n_) & full_;
      if (!is_transition(state, closing)) return;
      const int mid = n_ / 2;
      write_row(mid, state, closing);
      std::int8_t* e = MatrixWriter::data(matrix_);
      for (int i = 0; i < mid; ++i) {
        const std::int8_t* src = e + static_cast<std::size_t>(i) * n_;
        std::int8_t* dst = e + static_cast<std::size_t>(n_ - 1 - i) * n_;
        for (int j = 0; j < n_; ++j) dst[j] = src[n_ - 1 - j];
      }
    }
    if (revalidation_ == Revalidation::kAll || count_ < kRevalidationSample) {
      if (auto v = first_violation(matrix_.entries(), n_)) throw to_error(*v);
    }
    ++count_;
    if (!visit_(static_cast<const AsmMatrix&>(matrix_))) stopped_ = true;
  }

  void write_row(int row, std::uint64_t prev, std::uint64_t next) {
    std::int8_t* dst = MatrixWriter::data(matrix_) + static_cast<std::size_t>(row) * n_;
    for (int j = 0; j < n_; ++j) {
      dst[j] = static_cast<std::int8_t>(static_cast<int>(next >> j & 1) - static_cast<int>(prev >> j & 1));
    }
  }

  int n_;
  Domain domain_;
  int leaf_depth_;
  std::uint64_t full_;
  Revalidation revalidation_;
  AsmMatrix matrix_;
  Visit& visit_;
  std::uint64_t count_ = 0;
  bool stopped_ = false;
};

inline Domain domain_for(SymmetryClass c) {
  return c == SymmetryClass::kPlain ? Domain::kFull : Domain::kHalfTurn;
}

inline void check_request(int n, SymmetryClass c, const EnumerationOptions& options) {
  if (c == SymmetryClass::kPlain) {
    check_cap(n, kDefaultCapAll, options);
  } else {
    require_odd_order(n);
    check_cap(n, kDefaultCapSymmetric, options);
  }
}

// Visits the matrices of class `c` reachable from `prefix`; the half-turn stream is
// filtered for the stricter classes. A visitor returning bool stops the search on false.
template <class Visit>
std::uint64_t search(int n, SymmetryClass c, std::span<const std::uint64_t> prefix, Visit&& visit,
                     const EnumerationOptions& options) {
  std::uint64_t accepted = 0;
  auto filtered = [&](const AsmMatrix& a) -> bool {
    if (c == SymmetryClass::kQuarterTurn || c == SymmetryClass::kDoubleDiagonal) {
      if (!is_symmetric(a, c)) return true;
    }
    ++accepted;
    if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const AsmMatrix&>, bool>) {
      return visit(a);
    } else {
      visit(a);
      return true;
    }
  };
  RowSearch<decltype(filtered)> engine(n, domain_for(c), options, filtered);
  engine.run(prefix);
  return accepted;
}

}  // namespace detail

/// Visits every ASM of order n once, in deterministic depth-first order. The visited
/// reference is only valid during the call. Returns the number of matrices visited.
template <class Visit>
std::uint64_t enumerate_all(int n, Visit&& visit, const EnumerationOptions& options = {}) {
  detail::check_request(n, SymmetryClass::kPlain, options);
  return detail::search(n, SymmetryClass::kPlain, {}, visit, options);
}

/// Visits every half-turn symmetric ASM of odd order n once, searching only the top
/// half of the rows.
template <class Visit>
std::uint64_t enumerate_half_turn(int n, Visit&& visit, const EnumerationOptions& options = {}) {
  detail::check_request(n, SymmetryClass::kHalfTurn, options);
  return detail::search(n, SymmetryClass::kHalfTurn, {}, visit, options);
}

template <class Visit>
std::uint64_t enumerate_symmetric(int n, SymmetryClass c, Visit&& visit, const EnumerationOptions& options = {}) {
  if (c == SymmetryClass::kPlain) {
    throw AsmError(ErrorKind::kUnsupportedClass, "symmetric enumeration needs ht, qt or dd");
  }
  detail::check_request(n, c, options);
  return detail::search(n, c, {}, visit, options);
}

/// Search-tree prefixes (state paths for the first k rows) covering the search for
/// class `c` exactly once. k grows until at least `min_parts` prefixes exist or the
/// search leaf depth is reached. Order is deterministic.
inline std::vector<std::vector<std::uint64_t>> partition_search(int n, SymmetryClass c, std::size_t min_parts) {
  const int leaf_depth = detail::domain_for(c) == detail::Domain::kFull ? n : n / 2;
  std::vector<std::vector<std::uint64_t>> layer{{}};
  for (int depth = 0; depth < leaf_depth && layer.size() < min_parts; ++depth) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& path : layer) {
      const std::uint64_t state = path.empty() ? 0 : path.back();
      detail::for_each_successor(state, n, [&](std::uint64_t t) {
        auto extended = path;
        extended.push_back(t);
        next.push_back(std::move(extended));
      });
    }
    layer = std::move(next);
  }
  return layer;
}

/// Runs the enumeration for class `c` (kPlain = all ASMs) on `workers` threads. Each
/// worker owns a `State` and calls visit(state, matrix); the per-worker states are
/// returned for the caller to merge. Prefixes are handed out dynamically, so only
/// order-insensitive reductions are meaningful. workers == 1 runs inline.
template <class State, class Visit>
std::vector<State> enumerate_partitioned(int n, SymmetryClass c, int workers, Visit visit,
                                         const EnumerationOptions& options = {}) {
  detail::check_request(n, c, options);
  if (workers < 1) throw AsmError(ErrorKind::kInvalidOrder, "worker count must be at least 1");
  if (workers == 1) {
    std::vector<State> states(1);
    detail::search(n, c, {}, [&](const AsmMatrix& a) { visit(states[0], a); }, options);
    return states;
  }

  const auto prefixes = partition_search(n, c, static_cast<std::size_t>(workers) * 8);
  std::vector<State> states(workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            detail::search(n, c, prefixes[i], [&](const AsmMatrix& a) { visit(states[w], a); }, options);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = prefixes.size();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return states;
}

}  // namespace asm_census
