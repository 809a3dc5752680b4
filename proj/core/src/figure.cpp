#include <sstream>
#include <string>
#include <vector>

#include "permknot/diagram.hpp"

namespace permknot {

namespace {

// All figure geometry is integer arithmetic: SVG in pixels (40 px per grid
// unit), TikZ in hundredths of a grid unit. Crossing gaps are 0.15 units on
// each side of the over-strand, fixed-point loops have radius 0.3 units.
constexpr int kSvgUnit = 40;
constexpr int kSvgGap = 6;    // 0.15 * kSvgUnit
constexpr int kSvgRadius = 12;
constexpr int kCentiGap = 15;
constexpr int kCentiRadius = 30;

// Columns of the crossings sitting on horizontal row i, in ascending order
// (the diagram stores crossings row-major with columns ascending per row).
std::vector<int> crossing_columns_on_row(const Diagram& d, int i) {
  std::vector<int> cols;
  for (const Crossing& x : d.crossings) {
    if (x.horizontal_row == i) cols.push_back(x.vertical_column);
  }
  return cols;
}

std::string centi(int c) {
  std::string s = std::to_string(c / 100);
  const int r = c % 100;
  if (r == 0) return s;
  s += '.';
  s += static_cast<char>('0' + r / 10);
  if (r % 10 != 0) s += static_cast<char>('0' + r % 10);
  return s;
}

std::string export_svg(const Diagram& d) {
  const int n = d.permutation.size();
  const std::vector<int>& e = d.permutation.entries();
  const Permutation inv = d.permutation.inverse();
  const int side = (n + 1) * kSvgUnit;
  const auto px = [](int x) { return x * kSvgUnit; };
  const auto py = [n](int y) { return (n + 1 - y) * kSvgUnit; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side
      << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n";

  for (int j = 1; j <= n; ++j) {
    const int wj = e[static_cast<std::size_t>(j - 1)];
    if (wj == j) continue;
    out << "<line x1=\"" << px(j) << "\" y1=\"" << py(j) << "\" x2=\"" << px(j) << "\" y2=\""
        << py(wj) << "\"/>\n";
  }

  for (int i = 1; i <= n; ++i) {
    const int ii = inv(i);
    if (ii == i) continue;
    const int xa = std::min(i, ii);
    const int xb = std::max(i, ii);
    int xs = px(xa);
    for (int col : crossing_columns_on_row(d, i)) {
      out << "<line x1=\"" << xs << "\" y1=\"" << py(i) << "\" x2=\"" << px(col) - kSvgGap
          << "\" y2=\"" << py(i) << "\"/>\n";
      xs = px(col) + kSvgGap;
    }
    out << "<line x1=\"" << xs << "\" y1=\"" << py(i) << "\" x2=\"" << px(xb) << "\" y2=\""
        << py(i) << "\"/>\n";
  }

  for (int p = 1; p <= n; ++p) {
    if (e[static_cast<std::size_t>(p - 1)] != p) continue;
    out << "<circle cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"" << kSvgRadius << "\"/>\n";
  }

  out << "</g>\n</svg>\n";
  return out.str();
}

std::string export_tikz(const Diagram& d) {
  const int n = d.permutation.size();
  const std::vector<int>& e = d.permutation.entries();
  const Permutation inv = d.permutation.inverse();

  std::ostringstream out;
  out << "\\begin{tikzpicture}[x=0.5cm,y=0.5cm,line cap=round]\n";

  for (int j = 1; j <= n; ++j) {
    const int wj = e[static_cast<std::size_t>(j - 1)];
    if (wj == j) continue;
    out << "\\draw (" << j << ',' << j << ") -- (" << j << ',' << wj << ");\n";
  }

  for (int i = 1; i <= n; ++i) {
    const int ii = inv(i);
    if (ii == i) continue;
    const int xa = std::min(i, ii);
    const int xb = std::max(i, ii);
    int xs = xa * 100;
    for (int col : crossing_columns_on_row(d, i)) {
      out << "\\draw (" << centi(xs) << ',' << i << ") -- (" << centi(col * 100 - kCentiGap)
          << ',' << i << ");\n";
      xs = col * 100 + kCentiGap;
    }
    out << "\\draw (" << centi(xs) << ',' << i << ") -- (" << xb << ',' << i << ");\n";
  }

  for (int p = 1; p <= n; ++p) {
    if (e[static_cast<std::size_t>(p - 1)] != p) continue;
    out << "\\draw (" << p << ',' << p << ") circle (" << centi(kCentiRadius) << ");\n";
  }

  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace

std::string export_figure(const Diagram& d, FigureFormat format) {
  return format == FigureFormat::Svg ? export_svg(d) : export_tikz(d);
}

}  // namespace permknot
