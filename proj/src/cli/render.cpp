#include <iomanip>
#include <sstream>

#include "mbqc/cli.hpp"

namespace mbqc::cli {

namespace {

char id_char(int id) {
  if (id < 0) return '.';
  constexpr const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
  return digits[id % 36];
}

const char* fill(Basis b) {
  switch (b) {
    case Basis::Z: return "#e6e6e6";
    case Basis::X: return "#4a90d9";
    case Basis::Y: return "#f5a623";
    case Basis::Theta: return "#7ed321";
    case Basis::Readout: return "#333333";
  }
  return "#ffffff";
}

}  // namespace

std::string render_text(const MbqcGrid& g, bool components) {
  const int d = g.depth();
  std::ostringstream os;
  for (int r = 0; r < g.width; ++r) {
    for (int c = 0; c < d; ++c) os << basis_letter(g.at({r, c}).basis);
    os << '\n';
  }
  if (components) {
    os << '\n';
    for (int r = 0; r < g.width; ++r) {
      for (int c = 0; c < d; ++c) {
        auto it = g.cells.find({r, c});
        os << (it == g.cells.end() ? '.' : id_char(it->second.component));
      }
      os << '\n';
    }
  }
  bool header = false;
  for (const auto& [at, cell] : g.cells) {
    if (cell.m.basis != Basis::Theta) continue;
    if (!header) {
      os << "\nT angles (row, col):\n";
      header = true;
    }
    os << "  (" << at.row << ", " << at.col << ") " << std::setprecision(6) << cell.m.angle + 0.0 << '\n';
  }
  return os.str();
}

std::string render_svg(const MbqcGrid& g) {
  constexpr int pitch = 20, radius = 7, margin = 15;
  const int d = g.depth();
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * margin + (d - 1) * pitch + 2 * radius
     << "\" height=\"" << 2 * margin + (g.width - 1) * pitch + 2 * radius << "\">\n";
  auto x = [&](Coord c) { return margin + radius + c.col * pitch; };
  auto y = [&](Coord c) { return margin + radius + c.row * pitch; };
  os << "<g stroke=\"#999999\" stroke-width=\"2\">\n";
  auto edge = [&](Coord a, Coord b) {
    os << "<line x1=\"" << x(a) << "\" y1=\"" << y(a) << "\" x2=\"" << x(b) << "\" y2=\"" << y(b) << "\"/>\n";
  };
  for (const auto& ch : g.channels)
    for (std::size_t i = 1; i < ch.size(); ++i) edge(ch[i - 1], ch[i]);
  for (const auto& [a, b] : g.links) edge(a, b);
  os << "</g>\n";
  for (int r = 0; r < g.width; ++r) {
    for (int c = 0; c < d; ++c) {
      const Measurement m = g.at({r, c});
      os << "<circle cx=\"" << x({r, c}) << "\" cy=\"" << y({r, c}) << "\" r=\"" << radius << "\" fill=\""
         << fill(m.basis) << "\">";
      os << "<title>" << r << "," << c << " " << basis_name(m.basis);
      if (m.basis == Basis::Theta) os << " " << m.angle;
      os << "</title></circle>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace mbqc::cli
