#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mbqc/placement.hpp"

namespace mbqc {

struct CompileConfig {
  int cluster_width = 0;
  // Partial circuits kept per width bucket.
  int m = 12;
  int rounds = 1;
  // Also keeps what every smaller beam would keep, so depth never grows
  // with m. Off gives the plain top-m beam.
  bool nested_beams = true;
  // Picks among ready components at random instead of smallest id.
  bool random_order = false;
  std::uint64_t seed = 0;
  // max_width is always taken from cluster_width.
  VariantOptions variants;
};

struct IterationStats {
  int iteration = 0;
  int component = -1;
  ComponentKind kind = ComponentKind::S;
  long long generated = 0;
  // Rejections indexed by Constraint.
  long long invalid[5] = {0, 0, 0, 0, 0};
  long long duplicates = 0;
  // Valid candidates that left a ready component nowhere to go.
  long long dead_ends = 0;
  long long pruned = 0;
  long long kept = 0;
  // Distinct heights of candidates rejected by Constraint IV.
  std::vector<int> rejected_widths;
};

struct CompileStats {
  std::vector<IterationStats> iterations;
  int baseline_depth = 0;
  int groups = 0;
  double seconds = 0;
};

struct CompileResult {
  MbqcGrid grid;
  CompileStats stats;
  int depth() const { return grid.depth(); }
};

class CompileError : public std::runtime_error {
 public:
  CompileError(const std::string& what, int iteration, int component)
      : std::runtime_error(what), iteration(iteration), component(component) {}
  int iteration;
  int component;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cluster width for a factor of the minimum 2N-1 rows, rounded up.
int cluster_width_for(int num_qubits, double factor);

CompileResult compile(const GateCircuit& circuit, const CompileConfig& cfg);
CompileResult compile_multiround(const GateCircuit& circuit, const CompileConfig& cfg);
// Baseline rounds separated by one all-Z column.
MbqcGrid baseline_multiround(const GateCircuit& circuit, const CompileConfig& cfg);

// Keeps the first m per width after sorting by depth, larger space, hash.
std::vector<PartialCircuit> prune(std::vector<PartialCircuit> candidates, int m);

// Minimum depth over every variant, anchor and wire choice of the search.
// Throws BudgetExceeded after `budget` candidate evaluations.
int exhaustive_min_depth(const GateCircuit& circuit, int cluster_width, long long budget);

}  // namespace mbqc
