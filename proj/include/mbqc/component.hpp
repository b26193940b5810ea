#pragma once

#include <memory>
#include <vector>

#include "mbqc/geometry.hpp"
#include "mbqc/grid.hpp"

namespace mbqc {

enum class ComponentKind { TP, TX, S, Wire };

const char* kind_name(ComponentKind k);

struct ComponentCell {
  Measurement m;
  // Physical line this cell belongs to, or -1 for coupler cells between lines.
  int channel = -1;
  // Position in the baseline grid.
  Coord home;
};

// Cell order is fixed per kind:
//   S, Wire  channel order
//   TX       upper line cell, middle cell, lower line cell
//   TP       upper line theta, middle X, middle theta, lower line theta
// For TP and TX the in- and out-point of a line is the same cell, and
// in_points[k] / out_points[k] belong to channels[k].
struct Component {
  int id = -1;
  ComponentKind kind = ComponentKind::S;
  std::vector<ComponentCell> cells;
  std::vector<int> in_points;
  std::vector<int> out_points;
  std::vector<int> channels;
  // Required adjacencies inside the component, as cell index pairs.
  std::vector<std::pair<int, int>> edges;
  // TP only: the middle theta, which must also touch each line's next cell.
  int partner = -1;
  // The first cell directly follows a TP on its line.
  bool pinned = false;

  int size() const { return static_cast<int>(cells.size()); }
  int in_slot(int cell) const;
  int out_slot(int cell) const;
};

struct WireSpan {
  int channel = -1;
  std::vector<Coord> cells;
};

struct DagEdge {
  int parent = -1;
  int child = -1;
  int channel = -1;
  friend bool operator==(const DagEdge&, const DagEdge&) = default;
};

struct ComponentDag {
  int num_nodes = 0;
  std::vector<DagEdge> edges;

  std::vector<DagEdge> parents(int node) const;
  std::vector<DagEdge> children(int node) const;
};

struct Extraction {
  std::vector<Component> components;
  std::vector<WireSpan> wires;
  ComponentDag dag;
  // Components met along each channel, in order.
  std::vector<std::vector<int>> channel_components;
};

// Splits a baseline grid into components. Throws std::invalid_argument when
// a cell cannot be classified.
Extraction extract_components(const MbqcGrid& grid);

struct VariantOptions {
  int max_width = 1;
  // S components up to this length are enumerated exhaustively.
  int full_enumeration_cells = 12;
  // Cap for longer S components.
  int cap = 512;
  // Allow three or more S cells in one column.
  bool tall_columns = true;
  int max_wire_length = 8;
};

// A layout of a component: one offset per component cell, relative to the
// first in-point (cell 0 for every kind).
struct Variant {
  int component = -1;
  std::vector<Coord> offsets;

  int height() const;
  int span() const;
};

std::vector<Variant> generate_variants(const Component& c, const VariantOptions& opt);

// Shape catalogue for S components of a given length. The straight shape is
// always first.
std::vector<std::vector<Coord>> s_shapes(int cells, const VariantOptions& opt);

enum class Direction { Up, Right, Down };

struct AnchorPoint {
  Coord at;
  Direction dir = Direction::Right;
  // Index of the out-point (channel slot) this anchor serves.
  int slot = 0;
  friend bool operator==(const AnchorPoint&, const AnchorPoint&) = default;
};

}  // namespace mbqc
