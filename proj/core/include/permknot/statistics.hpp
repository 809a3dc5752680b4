#pragma once

#include <cstdint>
#include <vector>

#include "permknot/permutation.hpp"

namespace permknot {

/// Bundle of the four classical distance statistics plus the shallowness
/// verdict. Invariants: total_displacement is even, depth is half of it,
/// length + reflection_length <= total_displacement, and shallow holds
/// exactly when that bound is an equality.
struct StatSummary {
  std::int64_t length = 0;
  std::int64_t reflection_length = 0;
  std::int64_t total_displacement = 0;
  std::int64_t depth = 0;
  bool shallow = false;
};

/// Coxeter length: the number of inversions, pairs a < b with w(a) > w(b).
std::int64_t length(const Permutation& w);

/// Reflection length: n minus the number of cycles (fixed points count).
std::int64_t reflection_length(const Permutation& w);

/// Sum of |w(i) - i| over all positions.
std::int64_t total_displacement(const Permutation& w);

/// Half the total displacement (which is always even).
std::int64_t depth(const Permutation& w);

/// True when length + reflection_length equals total_displacement, i.e. the
/// Diaconis-Graham lower bound is attained.
bool is_shallow(const Permutation& w);

StatSummary stats(const Permutation& w);

/// Positions j with w(j) > w(i) for all i < j, ascending. Position 1 is
/// always included.
std::vector<int> left_to_right_maxima(const Permutation& w);

/// Positions j with w(j) < w(i) for all i > j, ascending. Position n is
/// always included.
std::vector<int> right_to_left_minima(const Permutation& w);

}  // namespace permknot
