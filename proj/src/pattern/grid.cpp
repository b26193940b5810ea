#include <algorithm>

#include "mbqc/grid.hpp"

namespace mbqc {

int MbqcGrid::depth() const {
  int d = 0;
  for (const auto& [c, cell] : cells)
    if (cell.m.basis != Basis::Z) d = std::max(d, c.col + 1);
  return d;
}

Measurement MbqcGrid::at(Coord c) const {
  auto it = cells.find(c);
  return it == cells.end() ? Measurement::z() : it->second.m;
}

void MbqcGrid::set(Coord c, Measurement m, int component, int round) {
  if (m.basis == Basis::Z) {
    cells.erase(c);
    return;
  }
  cells[c] = GridCell{m, component, round};
}

bool operator==(const GridCell& a, const GridCell& b) {
  return a.m == b.m && a.component == b.component && a.round == b.round;
}

bool operator==(const MbqcGrid& a, const MbqcGrid& b) {
  return a.width == b.width && a.cells == b.cells && a.channels == b.channels && a.links == b.links &&
         a.num_qubits == b.num_qubits && a.rounds == b.rounds;
}

}  // namespace mbqc
