#include "permknot/statistics.hpp"

#include <algorithm>
#include <cstdlib>

namespace permknot {

std::int64_t length(const Permutation& w) {
  // Count inversions with a Fenwick tree over values: scan left to right and
  // count earlier entries larger than the current one.
  const std::vector<int>& e = w.entries();
  const int n = w.size();
  std::vector<int> tree(static_cast<std::size_t>(n) + 1, 0);
  auto add = [&](int pos) {
    for (; pos <= n; pos += pos & -pos) ++tree[static_cast<std::size_t>(pos)];
  };
  auto count_leq = [&](int pos) {
    int s = 0;
    for (; pos > 0; pos -= pos & -pos) s += tree[static_cast<std::size_t>(pos)];
    return s;
  };
  std::int64_t inversions = 0;
  for (int i = 0; i < n; ++i) {
    const int v = e[static_cast<std::size_t>(i)];
    inversions += i - count_leq(v);  // earlier entries greater than v
    add(v);
  }
  return inversions;
}

std::int64_t reflection_length(const Permutation& w) {
  return w.size() - cycle_decomposition(w).count();
}

std::int64_t total_displacement(const Permutation& w) {
  const std::vector<int>& e = w.entries();
  std::int64_t td = 0;
  for (int i = 0; i < w.size(); ++i) {
    td += std::abs(static_cast<std::int64_t>(e[static_cast<std::size_t>(i)]) - (i + 1));
  }
  return td;
}

std::int64_t depth(const Permutation& w) {
  return total_displacement(w) / 2;
}

bool is_shallow(const Permutation& w) {
  return length(w) + reflection_length(w) == total_displacement(w);
}

StatSummary stats(const Permutation& w) {
  StatSummary s;
  s.length = length(w);
  s.reflection_length = reflection_length(w);
  s.total_displacement = total_displacement(w);
  s.depth = s.total_displacement / 2;
  s.shallow = (s.length + s.reflection_length == s.total_displacement);
  return s;
}

std::vector<int> left_to_right_maxima(const Permutation& w) {
  const std::vector<int>& e = w.entries();
  std::vector<int> out;
  int best = 0;
  for (int j = 1; j <= w.size(); ++j) {
    const int v = e[static_cast<std::size_t>(j - 1)];
    if (v > best) {
      out.push_back(j);
      best = v;
    }
  }
  return out;
}

std::vector<int> right_to_left_minima(const Permutation& w) {
  const std::vector<int>& e = w.entries();
  std::vector<int> out;
  int best = w.size() + 1;
  for (int j = w.size(); j >= 1; --j) {
    const int v = e[static_cast<std::size_t>(j - 1)];
    if (v < best) {
      out.push_back(j);
      best = v;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace permknot
