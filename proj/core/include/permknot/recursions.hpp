#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "permknot/permutation.hpp"

namespace permknot {

/// fl_i(w): delete the i-th entry of the one-line notation and renumber every
/// value above w(i) down by one. The result lives in S_{n-1}.
/// Throws std::domain_error for n = 1 and std::out_of_range for bad i.
Permutation flatten(const Permutation& w, int i);

enum class HmCase {
  FixedTop,  // w(n) = n; the parent just drops the trailing fixed point
  Swap,      // general case; see HmStep
};

/// One step of the recursion on the position of the largest value. For
/// w in S_n with w(n) = k and w^{-1}(n) = j, the parent w' in S_{n-1} agrees
/// with w away from j and has w'(j) = k. In the FixedTop case (k = j = n) the
/// parent is w restricted to the first n-1 positions.
struct HmStep {
  Permutation parent;
  int j = 0;
  int k = 0;
  HmCase case_tag = HmCase::FixedTop;
};

/// Throws std::domain_error for n = 1 (no step exists).
HmStep hm_step(const Permutation& w);

/// Decides shallowness by iterating hm_step down to S_1: at every Swap step
/// the removed position j must be a left-to-right maximum or a right-to-left
/// minimum of the parent. Runs in O(n^2) with no recursion.
bool is_shallow_hm(const Permutation& w);

/// Memo table for is_unlinked_cm, keyed by one-line notation. Not
/// synchronized: confine one cache to one thread (or give each worker its
/// own). Results are permanent, so a cache may be reused across any number
/// of queries.
class UnlinkCache {
public:
  UnlinkCache() = default;

  std::size_t size() const noexcept { return memo_.size(); }
  void clear() noexcept { memo_.clear(); }

private:
  friend bool is_unlinked_cm(const Permutation&, UnlinkCache&);
  std::unordered_map<std::string, bool> memo_;
};

/// Decides unlinkedness by the flattening recursion: w is unlinked iff n = 1
/// or some position i with |w(i) - i| <= 1 has fl_i(w) unlinked. All
/// qualifying i are tried; results are memoized in `cache`. Implemented with
/// an explicit worklist, so no call-stack depth limits apply.
bool is_unlinked_cm(const Permutation& w, UnlinkCache& cache);

/// Same, with a cache confined to this one evaluation.
bool is_unlinked_cm(const Permutation& w);

/// Every shallow permutation of S_n exactly once, in lexicographic order.
/// Built bottom-up by inverting hm_step: from each shallow w' in S_{n-1},
/// either append the fixed point n, or pick a position j that is a
/// left-to-right maximum or right-to-left minimum of w', set w(j) = n and
/// w(n) = w'(j). Memory is proportional to the output size.
std::vector<Permutation> generate_shallow(int n);

/// Streaming form of generate_shallow: depth-first over the same
/// construction, visiting each shallow permutation of S_n exactly once as a
/// one-line span (valid only during the call). Order is unspecified. Uses
/// O(n^2) memory regardless of the count, so it scales to n where
/// materializing the output would not.
void for_each_shallow(int n, const std::function<void(std::span<const int>)>& visit);

inline constexpr int kDefaultReducedSearchBound = 8;

/// Reduced reflection length: the minimum q such that w = t_1 ... t_q with
/// length(w) equal to the sum of the transposition lengths. Computed by
/// breadth-first search from the identity where the edge u -> u * t_{ij}
/// exists only when it increases length by exactly 2(j-i)-1; subadditivity of
/// length makes step-wise additivity equivalent to the defining sum
/// condition. Throws std::domain_error when w.size() > search_bound.
std::int64_t reduced_reflection_length(const Permutation& w,
                                       int search_bound = kDefaultReducedSearchBound);

/// Reduced reflection lengths for all of S_n from a single breadth-first
/// search, indexed by permutation. Supports n <= 9 (the state space is n!).
class ReducedReflectionTable {
public:
  explicit ReducedReflectionTable(int n);

  int degree() const noexcept { return n_; }

  /// ell_R(w) for w in S_n. Throws std::invalid_argument for other sizes.
  std::int64_t operator()(const Permutation& w) const;

private:
  int n_;
  std::vector<std::int32_t> dist_;  // indexed by Lehmer rank
};

}  // namespace permknot
