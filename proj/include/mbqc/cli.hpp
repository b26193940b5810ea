#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbqc/compiler.hpp"
#include "mbqc/verify.hpp"

namespace mbqc::cli {

// Grid files are JSON:
//   {"format": "mbqc-grid", "version": 1,
//    "width", "depth", "num_qubits", "rounds",
//    "cells": [{"row", "col", "basis", "angle"?, "component"?, "round"?}],
//    "channels": [[[row, col], ...], ...],
//    "links": [[[row, col], [row, col]], ...]}
// Z cells are never listed. "angle" appears only for theta cells,
// "component" only when not -1, "round" only when not 0.
std::string grid_to_json(const MbqcGrid& g, int indent = -1);
// Throws FormatError on anything malformed, including a depth field that
// disagrees with the cells.
MbqcGrid grid_from_json(const std::string& text);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One character per cell, rows top to bottom. Theta cells print as T and
// are listed under the raster with their angles. With components set, a
// second raster shows component ids (base 36, '.' for wires and Z).
std::string render_text(const MbqcGrid& g, bool components = false);
std::string render_svg(const MbqcGrid& g);

enum class Emit { Text, Json, Svg };

struct RunSpec {
  // Exactly one of circuit_path and benchmark.
  std::string circuit_path;
  std::string benchmark;
  int qubits = 0;
  std::uint64_t bench_seed = 0;

  // Exactly one of width and width_factor; neither means factor 1.25.
  std::optional<int> width;
  std::optional<double> width_factor;

  int m = 12;
  int rounds = 1;
  std::uint64_t seed = 0;
  bool random_order = false;
  Emit emit = Emit::Text;
  bool components = false;
  std::string out_path;
  std::string report_path;
  std::vector<int> sweep;
  bool oracle = false;
  long long oracle_budget = 50'000'000;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

GateCircuit load_circuit(const RunSpec& spec);
int resolve_width(const RunSpec& spec, int num_qubits);

struct RunReport {
  CompileResult result;
  MbqcGrid baseline;
  MetricsReport metrics;
  EquivalenceReport equivalence;
  std::vector<AuditViolation> violations;
  std::optional<int> oracle_depth;

  bool ok() const { return violations.empty() && equivalence.overall; }
};

RunReport compile_and_check(const GateCircuit& c, const RunSpec& spec);
std::string report_json(const RunReport& r, int indent = 2);

struct SweepRow {
  int m = 0;
  int depth = 0;
  double reduction_ratio = 0.0;
  double seconds = 0.0;
  bool ok = false;
};

std::vector<SweepRow> sweep_m(const GateCircuit& c, const RunSpec& spec, const std::vector<int>& ms);

// "a..b" or a single value.
std::vector<int> parse_range(const std::string& s);

// Runs the whole command: 0 on success, 1 when a checker fails or the
// compiler gives up, 2 on bad input, 3 on I/O errors.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace mbqc::cli
