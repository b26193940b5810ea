#include <algorithm>
#include <stdexcept>

#include "mbqc/pattern.hpp"

namespace mbqc {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::Z: return 'Z';
    case Basis::X: return 'X';
    case Basis::Y: return 'Y';
    case Basis::Theta: return 'T';
    case Basis::Readout: return 'O';
  }
  return '?';
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Z: return "Z";
    case Basis::X: return "X";
    case Basis::Y: return "Y";
    case Basis::Theta: return "theta";
    case Basis::Readout: return "readout";
  }
  return "?";
}

Basis basis_from_name(const std::string& s) {
  if (s == "Z") return Basis::Z;
  if (s == "X") return Basis::X;
  if (s == "Y") return Basis::Y;
  if (s == "theta") return Basis::Theta;
  if (s == "readout") return Basis::Readout;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

int Pattern::rows() const {
  int r = 0;
  for (const auto& c : cells) r = std::max(r, c.offset.row + 1);
  return r;
}

int Pattern::cols() const {
  int r = 0;
  for (const auto& c : cells) r = std::max(r, c.offset.col + 1);
  return r;
}

const PatternCell* Pattern::find(Coord c) const {
  for (const auto& pc : cells)
    if (pc.offset == c) return &pc;
  return nullptr;
}

namespace {

Pattern line_pattern(GateKind kind, std::vector<Measurement> ms) {
  Pattern p;
  p.kind = kind;
  int col = 0;
  for (auto& m : ms) p.cells.push_back({{0, col++}, m});
  p.cells.push_back({{0, col}, Measurement::readout()});
  p.in_points = {{0, 0}};
  p.out_points = {{0, col}};
  return p;
}

}  // namespace

Pattern wire_pattern(int x_count) {
  if (x_count < 2 || x_count % 2 != 0) throw std::invalid_argument("wire needs an even X count >= 2");
  return line_pattern(GateKind::H, std::vector<Measurement>(static_cast<std::size_t>(x_count), Measurement::x()));
}

Pattern pattern_for(const Gate& g) {
  const auto X = Measurement::x();
  const auto Y = Measurement::y();
  switch (g.kind) {
    case GateKind::H: return line_pattern(GateKind::H, {X, Y, Y, Y});
    case GateKind::RotXZX: {
      auto T = [&](int i) { return Measurement::theta(g.angles[i]); };
      return line_pattern(GateKind::RotXZX, {X, T(0), T(1), T(2)});
    }
    case GateKind::CNOT: {
      Pattern p;
      p.kind = GateKind::CNOT;
      const Measurement control[] = {Y, X, Y, Y, Y};
      const Measurement target[] = {Y, Y, Y, X, Y};
      for (int c = 0; c < 5; ++c) {
        p.cells.push_back({{0, c}, control[c]});
        if (c == 2) p.cells.push_back({{1, c}, Y});
        p.cells.push_back({{2, c}, target[c]});
      }
      p.cells.push_back({{0, 5}, Measurement::readout()});
      p.cells.push_back({{2, 5}, Measurement::readout()});
      p.in_points = {{0, 0}, {2, 0}};
      p.out_points = {{0, 5}, {2, 5}};
      return p;
    }
    case GateKind::CPSwap: {
      const double h = g.phi() / 2.0;
      Pattern p;
      p.kind = GateKind::CPSwap;
      p.cells = {{{0, 0}, Measurement::theta(h)}, {{1, 0}, X},
                 {{2, 0}, Measurement::theta(h)}, {{0, 1}, X},
                 {{1, 1}, Measurement::theta(-h)}, {{2, 1}, X},
                 {{0, 2}, Measurement::readout()}, {{2, 2}, Measurement::readout()}};
      p.in_points = {{0, 0}, {2, 0}};
      p.out_points = {{0, 2}, {2, 2}};
      return p;
    }
  }
  throw std::invalid_argument("unsupported gate");
}

Pattern mirrored(const Pattern& p) {
  const int last = p.rows() - 1;
  Pattern out = p;
  for (auto& c : out.cells) c.offset.row = last - c.offset.row;
  for (auto& c : out.in_points) c.row = last - c.row;
  for (auto& c : out.out_points) c.row = last - c.row;
  return out;
}

}  // namespace mbqc
