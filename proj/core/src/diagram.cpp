#include "permknot/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace permknot {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

bool strictly_between(int x, int a, int b) {
  return std::min(a, b) < x && x < std::max(a, b);
}

}  // namespace

int Diagram::component_of(int position) const {
  if (position < 1 || position > permutation.size()) {
    throw std::out_of_range("diagram: position " + std::to_string(position) + " out of range 1.." +
                            std::to_string(permutation.size()));
  }
  return component_of_position[static_cast<std::size_t>(position - 1)];
}

Diagram build_diagram(const Permutation& w) {
  const int n = w.size();
  const std::vector<int>& e = w.entries();
  const Permutation winv = w.inverse();
  const std::vector<int>& inv = winv.entries();

  Diagram d{w, {}, {}, {}, 0};
  d.segments.reserve(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= n; ++j) {
    d.segments.push_back(Segment{SegmentKind::Vertical, j, GridPoint{j, j},
                                 GridPoint{j, e[static_cast<std::size_t>(j - 1)]}});
  }
  for (int i = 1; i <= n; ++i) {
    d.segments.push_back(Segment{SegmentKind::Horizontal, i,
                                 GridPoint{inv[static_cast<std::size_t>(i - 1)], i}, GridPoint{i, i}});
  }

  for (int i = 1; i <= n; ++i) {
    const int ii = inv[static_cast<std::size_t>(i - 1)];  // w^{-1}(i)
    for (int j = 1; j <= n; ++j) {
      const int wj = e[static_cast<std::size_t>(j - 1)];
      if (!strictly_between(i, j, wj) || !strictly_between(j, i, ii)) continue;
      const int vdy = sgn(wj - j);  // vertical traversal (j,j) -> (j,w(j))
      const int hdx = sgn(i - ii);  // horizontal traversal (w^{-1}(i),i) -> (i,i)
      // +1 iff the over-strand direction rotated 90 degrees counterclockwise
      // matches the under-strand direction.
      d.crossings.push_back(Crossing{j, i, -hdx * vdy});
    }
  }

  const CycleDecomposition cycles = cycle_decomposition(w);
  d.component_count = cycles.count();
  d.component_of_position.assign(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < cycles.count(); ++c) {
    for (int p : cycles.cycles[static_cast<std::size_t>(c)]) {
      d.component_of_position[static_cast<std::size_t>(p - 1)] = c;
    }
  }
  return d;
}

int linking_number(const Diagram& d, int c1, int c2) {
  if (c1 == c2) {
    throw std::invalid_argument("linking_number: components must be distinct (self-linking is not defined here)");
  }
  for (int c : {c1, c2}) {
    if (c < 0 || c >= d.component_count) {
      throw std::invalid_argument("linking_number: component id " + std::to_string(c) +
                                  " out of range 0.." + std::to_string(d.component_count - 1));
    }
  }
  int sum = 0;
  for (const Crossing& x : d.crossings) {
    const int cv = d.component_of(x.vertical_column);
    const int ch = d.component_of(x.horizontal_row);
    if ((cv == c1 && ch == c2) || (cv == c2 && ch == c1)) {
      sum += x.sign;
    }
  }
  if (sum % 2 != 0) {
    // Two closed components always meet in an even number of crossings.
    throw std::logic_error("linking_number: odd signed crossing sum between closed components");
  }
  return sum / 2;
}

}  // namespace permknot
