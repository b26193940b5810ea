#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/model.hpp"

namespace mbqc {

enum class Constraint { Overlap, I, II, III, IV };

const char* constraint_name(Constraint c);

struct PlacedComponent {
  int shape = -1;
  // Frame position of cell 0.
  Coord origin;
};

// Even run of X cells joining a parent's out-point to a child's in-point.
struct WirePath {
  int channel = -1;
  int from = -1;
  int to = -1;
  std::vector<Coord> cells;
};

// A placed prefix of the component DAG. Coordinates live in a frame whose
// smallest occupied row and column are both 0. Values are immutable once
// built; all construction goes through the functions below.
class PartialCircuit {
 public:
  explicit PartialCircuit(const ComponentModel& model);

  const ComponentModel& model() const { return *model_; }
  int width() const { return rows_; }
  int depth() const { return cols_; }
  int space() const { return space_; }
  std::uint64_t hash() const { return hash_; }
  bool empty() const { return rows_ == 0; }
  bool has_overlap() const { return overlap_; }

  bool has(int comp) const { return placed_[comp].shape >= 0; }
  const PlacedComponent& placement(int comp) const { return placed_[comp]; }
  Coord cell_position(int comp, int cell) const;
  std::vector<int> placed_ids() const;
  const std::vector<WirePath>& wires() const { return wires_; }
  const WirePath* wire_between(int from, int to) const;

  // Owner code of a frame cell; 0 when free or outside the frame.
  std::uint32_t code_at(Coord c) const {
    if (c.row < 0 || c.col < 0 || c.row >= rows_ || c.col >= cols_) return 0;
    return occ_[static_cast<std::size_t>(c.row) * cols_ + c.col];
  }
  bool occupied(Coord c) const { return code_at(c) != 0; }
  // Column of the last occupied cell in a row, -1 for empty rows.
  int rightmost(int row) const { return right_[row]; }
  int leftmost(int row) const;
  std::vector<Coord> occupied_cells() const;
  // Occupied frame cells with their owner codes, row-major.
  const std::vector<std::pair<Coord, std::uint32_t>>& cell_list() const { return cells_; }

  // Cells, channels and coupler links of the placed part, with frame rows
  // shifted by offset.
  MbqcGrid to_grid(int cluster_width, int round = 0, Coord offset = {0, 0}) const;

  // Unchecked construction for tests and mutation studies. Overlapping cells
  // are recorded via has_overlap().
  static PartialCircuit assemble(const ComponentModel& model, const std::vector<std::pair<int, PlacedComponent>>& comps,
                                 const std::vector<WirePath>& wires);

 private:
  friend class CandidateBuilder;

  void finish_metrics();

  const ComponentModel* model_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> occ_;
  std::vector<int> right_;
  std::vector<PlacedComponent> placed_;
  std::vector<WirePath> wires_;
  std::vector<std::pair<Coord, std::uint32_t>> cells_;
  std::uint64_t hash_ = 0;
  int space_ = 0;
  bool overlap_ = false;
};

// Owner codes stored in the occupancy grid.
namespace owner {
constexpr std::uint32_t kWireBit = 1u << 31;
constexpr int kIndexBits = 10;
inline std::uint32_t comp(int id, int idx) {
  return (static_cast<std::uint32_t>(id + 1) << kIndexBits) | static_cast<std::uint32_t>(idx);
}
inline std::uint32_t wire(int w, int idx) {
  return kWireBit | (static_cast<std::uint32_t>(w) << kIndexBits) | static_cast<std::uint32_t>(idx);
}
inline bool is_wire(std::uint32_t code) { return (code & kWireBit) != 0; }
inline int id(std::uint32_t code) {
  return is_wire(code) ? static_cast<int>((code & ~kWireBit) >> kIndexBits) : static_cast<int>(code >> kIndexBits) - 1;
}
inline int index(std::uint32_t code) { return static_cast<int>(code & ((1u << kIndexBits) - 1)); }
}  // namespace owner

std::vector<AnchorPoint> anchor_points(const PartialCircuit& pc, int comp);
// Cross product of the per-line anchors of a two-line component.
std::vector<std::pair<AnchorPoint, AnchorPoint>> anchor_pairs(const PartialCircuit& pc, int comp);

// Places a variant with its in-point `in_slot` on the anchor. A missing
// anchor places a root component into an empty circuit. Parents on other
// slots that are already placed are left for insert_wire.
std::optional<PartialCircuit> integrate(const PartialCircuit& pc, int comp, int shape, int in_slot,
                                        std::optional<AnchorPoint> anchor, int cluster_width);

// Places a two-line variant with its in-points on anchors from pc1 and pc2.
// pc2 is translated rigidly to meet its anchor.
std::optional<PartialCircuit> combine(const PartialCircuit& pc1, const PartialCircuit& pc2, int comp, int shape,
                                      const AnchorPoint& a1, const AnchorPoint& a2, int cluster_width);

// Connects a placed child to each placed parent it does not yet touch with
// the shortest even X path found; nullopt if none exists.
std::optional<PartialCircuit> insert_wire(const PartialCircuit& pc, int child, int cluster_width);

struct Violation {
  Constraint constraint = Constraint::I;
  Coord at;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Full check of Constraints I-IV plus overlap. Only the first violation is
// reported.
ValidationReport validate_grid(const PartialCircuit& pc, int cluster_width);

int space_of(const PartialCircuit& pc);

}  // namespace mbqc
