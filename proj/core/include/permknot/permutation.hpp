#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace permknot {

/// A permutation of {1,...,n} in one-line notation. All public semantics are
/// 1-indexed: entries()[i-1] == w(i), and operator()(i) expects 1 <= i <= n.
/// Values are immutable after construction; every operation on them is a pure
/// function, so Permutation is safe to share across threads.
class Permutation {
public:
  /// Tag for constructing from entries already known to be a bijection of
  /// {1,...,n}. Skips validation; callers take responsibility.
  struct unchecked_t {
    explicit unchecked_t() = default;
  };
  static constexpr unchecked_t unchecked{};

  /// Validating constructor. Throws std::invalid_argument on the empty
  /// sequence or anything that is not a bijection of {1,...,n}
  /// (duplicate, missing, or out-of-range values).
  explicit Permutation(std::vector<int> one_line);

  Permutation(unchecked_t, std::vector<int> one_line) noexcept;

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }

  /// w(i) for 1 <= i <= size(). Throws std::out_of_range otherwise.
  int operator()(int i) const;

  /// One-line notation; entries()[i-1] == w(i).
  const std::vector<int>& entries() const noexcept { return entries_; }

  Permutation inverse() const;

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic order on one-line notation.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> entries_;
};

/// The transposition t_{ij} swapping positions i < j. As an element of S_n it
/// has Coxeter length 2(j-i)-1.
struct Transposition {
  int i;
  int j;

  /// Throws std::invalid_argument unless 1 <= i < j.
  Transposition(int i, int j);

  /// Embed into S_n (requires n >= j).
  Permutation as_permutation(int n) const;

  long long coxeter_length() const noexcept { return 2LL * (j - i) - 1; }
};

/// Cycles of a permutation in canonical form: each cycle starts at its
/// smallest element and is listed in traversal order i, w(i), w(w(i)), ...;
/// cycles are sorted by their smallest element. Fixed points appear as
/// singleton cycles.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  int count() const noexcept { return static_cast<int>(cycles.size()); }
};

CycleDecomposition cycle_decomposition(const Permutation& w);

/// Parses one-line notation. Accepts a compact digit string ("7563421",
/// only meaningful for n <= 9) or a comma/whitespace-separated list
/// ("7,5,6,3,4,2,1"). Throws std::invalid_argument on malformed input or a
/// non-bijection.
Permutation parse_permutation(std::string_view text);

/// Comma-separated one-line notation, e.g. "7,5,6,3,4,2,1". Round-trips
/// through parse_permutation.
std::string to_string(const Permutation& w);

}  // namespace permknot
