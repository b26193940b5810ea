#pragma once

#include <string>
#include <vector>

#include "mbqc/grid.hpp"

namespace mbqc {

// One entry of a channel after wire normalisation.
struct SequenceItem {
  Basis basis = Basis::Z;
  double angle = 0.0;
  friend bool operator==(const SequenceItem&, const SequenceItem&) = default;
};

// Measurements along a channel with every X run reduced to its parity, so
// wires of any even length compare equal.
std::vector<SequenceItem> channel_sequence(const MbqcGrid& g, int channel);

struct ChannelComparison {
  int channel = -1;
  std::vector<SequenceItem> baseline;
  std::vector<SequenceItem> compiled;
  bool match = false;
};

struct EquivalenceReport {
  std::vector<ChannelComparison> channels;
  // Channel steps that move to an earlier column.
  std::vector<std::string> order_violations;
  bool overall = false;

  std::vector<int> mismatched() const;
};

EquivalenceReport check_equivalence(const MbqcGrid& baseline, const MbqcGrid& compiled);

struct AuditViolation {
  // "I", "II", "III", "IV" or "overlap".
  std::string constraint;
  Coord at;
  std::string detail;
};

// Constraint check that reads nothing but the grid: channels, links and the
// cell map. Kept separate from the placement validator so each can check
// the other.
std::vector<AuditViolation> audit(const MbqcGrid& grid, int cluster_width);

// Non-Z cells over width times depth; Readout counts as used.
double photon_utilization(const MbqcGrid& grid);

struct MetricsReport {
  int baseline_depth = 0;
  int compiled_depth = 0;
  double reduction_ratio = 0.0;
  double photon_utilization_baseline = 0.0;
  double photon_utilization_compiled = 0.0;
  int width = 0;
};

// The baseline is measured at the compiled grid's width.
MetricsReport metrics(const MbqcGrid& baseline, const MbqcGrid& compiled);

}  // namespace mbqc
