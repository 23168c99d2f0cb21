#include "tilesim/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

namespace tilesim {

namespace {

constexpr int kCell = 48;   // svg cell edge in px
constexpr int kMargin = 24;
constexpr int kBump = 4;    // svg bump protrusion in px

const std::array<const char*, 10> kPalette = {
    "#cde7f0", "#f0e2c8", "#d7ecc9", "#f0cdd2", "#ddd3ec",
    "#c9e4e2", "#ece8c5", "#e3d2c4", "#ccd9f0", "#e8cfe4"};

std::size_t name_hash(const std::string& s) {
  std::size_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Tenth-of-a-pixel fixed point keeps the output free of float formatting.
std::string px(int tenths) {
  std::ostringstream os;
  os << tenths / 10;
  if (tenths % 10) os << "." << tenths % 10;
  return os.str();
}

// Offset (in tenths of px) of geometry position i on a side of length L.
// North and east sides run forward, south and west run mirrored, so the
// overlapping positions of two abutting sides are drawn at the same spot.
int bump_center(int i, int length, bool mirrored) {
  const int pos = mirrored ? length + 1 - i : i;
  return (kCell * 10 * (2 * pos - 1)) / (2 * length);
}

bool wall_internal(const TileSystem& sys, const Assembly& a, Pos p, Dir d) {
  const auto& cells = a.cells();
  auto it = cells.find(p);
  if (it == cells.end()) return false;
  if (!is_duple(sys.tile(it->second.tile))) return false;
  return !facing(sys, a, p, d).has_value();
}

}  // namespace

std::string render_svg(const TileSystem& sys, const Assembly& a) {
  if (a.cell_count() == 0)
    throw Error(ErrorCode::unsupported_input, "cannot render an empty assembly");
  const auto [lo, hi] = a.bounding_box();
  const int width = (hi.x - lo.x + 1) * kCell + 2 * kMargin;
  const int height = (hi.y - lo.y + 1) * kCell + 2 * kMargin;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<style>.tile,.tile-ext{stroke:#444;stroke-width:1}"
         ".bump{fill:#444}"
         "text{font-family:monospace;fill:#222}</style>\n";
  for (const auto& [p, cell] : a.cells()) {
    const int x0 = kMargin + (p.x - lo.x) * kCell;
    const int y0 = kMargin + (hi.y - p.y) * kCell;
    const TileType& t = sys.tile(cell.tile);
    const std::string& name = tile_name(t);
    const char* fill = kPalette[name_hash(name) % kPalette.size()];
    svg << "<rect class=\"" << (cell.part == 0 ? "tile" : "tile-ext")
        << "\" x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << kCell
        << "\" height=\"" << kCell << "\" fill=\"" << fill << "\"/>\n";
    if (cell.part == 0)
      svg << "<text x=\"" << x0 + kCell / 2 << "\" y=\"" << y0 + kCell / 2 + 3
          << "\" font-size=\"10\" text-anchor=\"middle\">" << escape(name)
          << "</text>\n";
    for (Dir d : all_dirs) {
      const auto face = facing(sys, a, p, d);
      if (!face) continue;  // interior edge of a two-cell tile
      if (face->glue > 0) {
        const std::string label =
            escape(sys.glue_names[static_cast<std::size_t>(face->glue)]);
        switch (d) {
          case Dir::north:
            svg << "<text x=\"" << x0 + kCell / 2 << "\" y=\"" << y0 + 9
                << "\" font-size=\"7\" text-anchor=\"middle\">" << label
                << "</text>\n";
            break;
          case Dir::south:
            svg << "<text x=\"" << x0 + kCell / 2 << "\" y=\"" << y0 + kCell - 3
                << "\" font-size=\"7\" text-anchor=\"middle\">" << label
                << "</text>\n";
            break;
          case Dir::east:
            svg << "<text x=\"" << x0 + kCell - 2 << "\" y=\"" << y0 + kCell / 2
                << "\" font-size=\"7\" text-anchor=\"end\">" << label
                << "</text>\n";
            break;
          case Dir::west:
            svg << "<text x=\"" << x0 + 2 << "\" y=\"" << y0 + kCell / 2
                << "\" font-size=\"7\" text-anchor=\"start\">" << label
                << "</text>\n";
            break;
        }
      }
      if (face->geometry == nullptr) continue;
      const int length = face->geometry->length();
      if (length <= 0) continue;
      const int w = std::max(20, (kCell * 10) / (2 * length));  // tenths
      for (int i = 1; i <= length; ++i) {
        if (!face->geometry->bump(i)) continue;
        const bool mirrored = d == Dir::south || d == Dir::west;
        const int c = bump_center(i, length, mirrored);
        int bx, by, bw, bh;
        switch (d) {
          case Dir::north:
            bx = x0 * 10 + c - w / 2; by = (y0 - kBump) * 10;
            bw = w; bh = kBump * 10;
            break;
          case Dir::south:
            bx = x0 * 10 + c - w / 2; by = (y0 + kCell) * 10;
            bw = w; bh = kBump * 10;
            break;
          case Dir::east:
            bx = (x0 + kCell) * 10; by = y0 * 10 + c - w / 2;
            bw = kBump * 10; bh = w;
            break;
          case Dir::west:
          default:
            bx = (x0 - kBump) * 10; by = y0 * 10 + c - w / 2;
            bw = kBump * 10; bh = w;
            break;
        }
        svg << "<rect class=\"bump\" x=\"" << px(bx) << "\" y=\"" << px(by)
            << "\" width=\"" << px(bw) << "\" height=\"" << px(bh) << "\"/>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_ascii(const TileSystem& sys, const Assembly& a) {
  if (a.cell_count() == 0)
    throw Error(ErrorCode::unsupported_input, "cannot render an empty assembly");
  const auto [lo, hi] = a.bounding_box();
  const int cols = (hi.x - lo.x + 1) * 7 + 1;
  const int rows = (hi.y - lo.y + 1) * 3 + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(static_cast<std::size_t>(cols), ' '));
  auto put = [&](int r, int c, char ch) {
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ch;
  };
  for (const auto& [p, cell] : a.cells()) {
    const int c0 = (p.x - lo.x) * 7;
    const int r0 = (hi.y - p.y) * 3;
    put(r0, c0, '+'); put(r0, c0 + 7, '+');
    put(r0 + 3, c0, '+'); put(r0 + 3, c0 + 7, '+');
    auto wall = [&](Dir d) {
      if (wall_internal(sys, a, p, d)) return;
      switch (d) {
        case Dir::north:
          for (int k = 1; k <= 6; ++k) put(r0, c0 + k, '-');
          break;
        case Dir::south:
          for (int k = 1; k <= 6; ++k) put(r0 + 3, c0 + k, '-');
          break;
        case Dir::east:
          put(r0 + 1, c0 + 7, '|'); put(r0 + 2, c0 + 7, '|');
          break;
        case Dir::west:
          put(r0 + 1, c0, '|'); put(r0 + 2, c0, '|');
          break;
      }
    };
    for (Dir d : all_dirs) wall(d);
    if (cell.part == 0) {
      const std::string& name = tile_name(sys.tile(cell.tile));
      for (int k = 0; k < 6 && k < static_cast<int>(name.size()); ++k)
        put(r0 + 1, c0 + 1 + k, name[static_cast<std::size_t>(k)]);
    }
    const auto geom_of = [&](Dir d) -> const Geometry* {
      const auto face = facing(sys, a, p, d);
      return face ? face->geometry : nullptr;
    };
    for (Dir d : all_dirs) {
      const Geometry* g = geom_of(d);
      if (g == nullptr || g->length() == 0) continue;
      const int length = g->length();
      for (int i = 1; i <= length; ++i) {
        if (!g->bump(i)) continue;
        const bool mirrored = d == Dir::south || d == Dir::west;
        const int pos = mirrored ? length + 1 - i : i;
        switch (d) {
          case Dir::north:
            put(r0, c0 + 1 + ((pos - 1) * 6) / length, '^');
            break;
          case Dir::south:
            put(r0 + 3, c0 + 1 + ((pos - 1) * 6) / length, 'v');
            break;
          case Dir::east:
            put(r0 + 1 + ((pos - 1) * 2) / length, c0 + 7, '>');
            break;
          case Dir::west:
            put(r0 + 1 + ((pos - 1) * 2) / length, c0, '<');
            break;
        }
      }
    }
  }
  std::ostringstream out;
  for (const std::string& line : grid) {
    std::size_t end = line.find_last_not_of(' ');
    out << (end == std::string::npos ? "" : line.substr(0, end + 1)) << "\n";
  }
  return out.str();
}

}  // namespace tilesim
