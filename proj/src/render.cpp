#include "latcoh/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latcoh {

namespace {

void require_plane(const WeightRectangle& rect) {
  if (rect.nu != 2) throw ValidationError("rendering needs exactly two bad vertices, got " + std::to_string(rect.nu));
}

constexpr int kCell = 40;
constexpr int kMargin = 30;

}  // namespace

std::string render_ascii(const WeightRectangle& rect) {
  require_plane(rect);
  std::size_t width = 1;
  for (i64 w : rect.w) width = std::max(width, std::to_string(w).size());
  std::ostringstream out;
  for (i64 j = rect.bound[1]; j >= 0; --j) {
    for (i64 i = 0; i <= rect.bound[0]; ++i) {
      std::string s = std::to_string(rect.at({i, j}));
      if (i > 0) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_svg(const WeightRectangle& rect, const MonotonePath& path) {
  require_plane(rect);
  const i64 cols = rect.bound[0] + 1, rows = rect.bound[1] + 1;
  const i64 width = 2 * kMargin + cols * kCell, height = 2 * kMargin + rows * kCell;
  auto x_of = [&](i64 i) { return kMargin + i * kCell; };
  auto y_of = [&](i64 j) { return kMargin + (rows - 1 - j) * kCell; };
  std::set<Vec> on_path(path.begin(), path.end());

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  for (i64 j = 0; j < rows; ++j)
    for (i64 i = 0; i < cols; ++i) {
      const Vec p{i, j};
      if (on_path.count(p))
        out << "<rect x=\"" << x_of(i) << "\" y=\"" << y_of(j) << "\" width=\"" << kCell << "\" height=\"" << kCell
            << "\" fill=\"#ffe08a\"/>\n";
      out << "<text x=\"" << x_of(i) + kCell / 2 << "\" y=\"" << y_of(j) + kCell / 2 << "\">" << rect.at(p)
          << "</text>\n";
    }
  out << "</g>\n";
  for (auto& b : barcode(rect)) {
    if (b.q > 1) continue;
    i64 i0 = b.corner[0], j0 = b.corner[1];
    i64 i1 = i0 + ((b.mask & 1u) ? 1 : 0), j1 = j0 + ((b.mask & 2u) ? 1 : 0);
    out << "<rect x=\"" << x_of(i0) + 2 << "\" y=\"" << y_of(j1) + 2 << "\" width=\"" << (i1 - i0 + 1) * kCell - 4
        << "\" height=\"" << (j1 - j0 + 1) * kCell - 4 << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\""
        << (b.q == 1 ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
  }
  out << "<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (i64 i = 0; i < cols; ++i) out << "<text x=\"" << x_of(i) + kCell / 2 << "\" y=\"" << height - 10 << "\">" << i << "</text>\n";
  for (i64 j = 0; j < rows; ++j) out << "<text x=\"" << 12 << "\" y=\"" << y_of(j) + kCell / 2 + 4 << "\">" << j << "</text>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace latcoh
