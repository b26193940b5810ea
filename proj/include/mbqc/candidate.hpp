#pragma once

// Candidate evaluation shared by the placement operations and the search.
// A Recipe describes one extension of a partial circuit without building
// it; evaluate() checks it against the constraints and predicts the metrics
// of the result, and materialize() builds only the survivors.

#include <cstdint>
#include <vector>

#include "mbqc/placement.hpp"

namespace mbqc {

struct WireSpec {
  int channel = -1;
  int from = -1;
  int to = -1;
  std::vector<Coord> cells;  // base frame
};

struct Recipe {
  const PartialCircuit* base = nullptr;
  // Second circuit joined by a two-line component, and its translation into
  // the base frame.
  const PartialCircuit* other = nullptr;
  Coord other_shift;
  int comp = -1;
  int shape = -1;
  Coord origin;  // base frame position of cell 0
  std::vector<WireSpec> wires;
  // In-slots whose parent connection is deliberately left open.
  unsigned pending = 0;
};

struct Outcome {
  bool valid = false;
  Constraint failed = Constraint::I;
  Coord at;
  int width = 0;  // also set when Constraint IV fails
  int depth = 0;
  int space = 0;
  std::uint64_t hash = 0;
};

class CandidateBuilder {
 public:
  CandidateBuilder(const ComponentModel& model, int cluster_width) : model_(&model), width_(cluster_width) {}

  Outcome evaluate(const Recipe& r);
  PartialCircuit materialize(const Recipe& r) const;
  // Whether two owner codes of one circuit may touch.
  bool edge_expected(const PartialCircuit& pc, std::uint32_t a, std::uint32_t b) const;

  // Base-frame position of a placed component cell in either input circuit.
  static Coord locate(const Recipe& r, int comp, int cell);

 private:
  struct Owner {
    int kind = 0;  // 0 free, 1 component cell, 2 wire cell
    int id = -1;
    int idx = -1;
    const void* wire = nullptr;
    int from = -1, to = -1, channel = -1, len = 0;
  };

  Owner lookup(const Recipe& r, Coord c) const;
  Owner decode(std::uint32_t code, const PartialCircuit& pc) const;
  bool expected(const Recipe& r, const Owner& a, const Owner& b) const;
  bool linked(const Recipe& r, const Owner& parent, const Owner& child) const;
  bool has_wire(const Recipe& r, int from, int to) const;

  const ComponentModel* model_;
  int width_;
  std::vector<Coord> new_cells_;
  std::vector<int> right_scratch_;
};

// Hash arithmetic modulo 2^61 - 1, shared by the incremental and the full
// computations.
namespace chash {
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t row_pow(int k);
std::uint64_t col_pow(int k);
std::uint64_t comp_value(int comp, int idx);
std::uint64_t wire_value(int from, int to, int idx);
inline std::uint64_t term(std::uint64_t v, int row, int col) { return mul(v, mul(row_pow(row), col_pow(col))); }
}  // namespace chash

// Even-length X paths with at most one vertical segment from a cell next to
// `from` into a cell next to `to`. Occupancy is not checked here.
std::vector<std::vector<Coord>> wire_routes(Coord from, Coord to);

}  // namespace mbqc
