#pragma once

#include <string>
#include <vector>

#include "permknot/permutation.hpp"

namespace permknot {

enum class SegmentKind { Horizontal, Vertical };

/// Grid point (x, y): x is a position (column), y a value (row). The grid
/// places (1,1) at the bottom left with y increasing upward.
struct GridPoint {
  int x = 0;
  int y = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// One strand of the cycle diagram, traversed from start to end:
///   - the vertical segment for column j runs (j, j) -> (j, w(j));
///   - the horizontal segment for row i runs (w^{-1}(i), i) -> (i, i).
/// Fixed points yield zero-length segments (point components).
struct Segment {
  SegmentKind kind = SegmentKind::Horizontal;
  int index = 0;  // the defining row i or column j
  GridPoint start;
  GridPoint end;

  bool degenerate() const noexcept { return start == end; }
};

/// A crossing of vertical column j over horizontal row i. It exists iff i
/// lies strictly between j and w(j) and j lies strictly between i and
/// w^{-1}(i); shared corner points never count. The vertical strand is
/// always the over-strand. Sign is +1 when rotating the over-strand
/// direction 90 degrees counterclockwise aligns it with the under-strand
/// direction, -1 otherwise.
struct Crossing {
  int vertical_column = 0;
  int horizontal_row = 0;
  int sign = 0;
};

/// The cycle diagram of a permutation read as a knot diagram. Components are
/// the cycles of w, numbered by the canonical cycle order (0-based), so
/// component_count == cyc(w). Immutable once built.
struct Diagram {
  Permutation permutation;
  std::vector<Segment> segments;    // verticals for j = 1..n, then horizontals for i = 1..n
  std::vector<Crossing> crossings;  // row-major order: by row i, then column j
  std::vector<int> component_of_position;  // position p (1-based) -> component id
  int component_count = 0;

  int component_of(int position) const;
};

Diagram build_diagram(const Permutation& w);

/// Linking number of two distinct components: half the sum of crossing signs
/// over crossings whose vertical strand lies in one component and horizontal
/// strand in the other. Always an integer. Throws std::invalid_argument when
/// c1 == c2 (self-linking is out of scope) or on an invalid component id.
int linking_number(const Diagram& d, int c1, int c2);

enum class FigureFormat { Svg, Tikz };

/// Renders the diagram as SVG 1.1 or a TikZ picture. Vertical strands are
/// drawn unbroken; horizontal strands break at each crossing (vertical goes
/// over). Fixed points become small loops of radius 0.3 grid units. Output
/// is deterministic byte-for-byte for a given diagram and format.
std::string export_figure(const Diagram& d, FigureFormat format);

}  // namespace permknot
