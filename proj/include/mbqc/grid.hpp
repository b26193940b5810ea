#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mbqc/circuit.hpp"
#include "mbqc/geometry.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

struct GridCell {
  Measurement m;
  int component = -1;
  int round = 0;
};

// A cluster-state program. Only non-Z cells are stored; every in-range cell
// that is absent is measured in Z. Channels hold one coordinate list per
// physical line, read in execution order. Links list the non-channel edges
// the computation needs (coupler wiring inside two-qubit patterns).
struct MbqcGrid {
  int width = 1;
  std::map<Coord, GridCell> cells;
  std::vector<std::vector<Coord>> channels;
  std::vector<std::pair<Coord, Coord>> links;
  int num_qubits = 0;
  int rounds = 1;

  int depth() const;
  Measurement at(Coord c) const;
  bool occupied(Coord c) const { return cells.count(c) != 0; }
  void set(Coord c, Measurement m, int component = -1, int round = 0);

  friend bool operator==(const MbqcGrid&, const MbqcGrid&);
};

bool operator==(const GridCell& a, const GridCell& b);

// Lowering result plus the routing bookkeeping it produced.
struct Lowering {
  MbqcGrid grid;
  // Gates as executed on physical lines, including inserted swaps.
  GateCircuit line_circuit;
  // final_line[q] is the line carrying logical qubit q at the end.
  std::vector<int> final_line;
};

// Rewrites two-qubit gates on non-neighbouring lines by inserting
// CP+SWAP(0) gates that walk the control towards the target.
Lowering route_to_lines(const GateCircuit& c);

MbqcGrid lower_baseline(const GateCircuit& c);
Lowering lower_baseline_detailed(const GateCircuit& c);
MbqcGrid pad_to_width(const MbqcGrid& g, int target_width);

}  // namespace mbqc
