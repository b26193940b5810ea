#pragma once

// The component-by-component search shared by compile, the multi-round
// extension and the exhaustive oracle.

#include <climits>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "mbqc/candidate.hpp"
#include "mbqc/compiler.hpp"

namespace mbqc::detail {

struct SearchOptions {
  int cluster_width = 0;
  // Kept per width bucket; 0 keeps every distinct candidate.
  std::size_t m = 12;
  // Runs every beam size 1..m side by side so that a larger m never loses
  // a layout a smaller one keeps.
  bool nested = true;
  bool random_order = false;
  std::uint64_t seed = 0;
  // Candidates whose depth bound reaches this are dropped.
  int upper_bound = INT_MAX;
  // Drops candidates whose unfinished part repeats a better one.
  bool dominance = false;
  long long budget = -1;
  // Called after each iteration with the placed component and its table.
  std::function<void(int comp, const std::vector<PartialCircuit>& table)> observe;
};

class Search {
 public:
  Search(const ComponentModel& model, SearchOptions opt);

  // False when the depth bound emptied a table; errors throw CompileError.
  bool run();

  // Tables of the surviving connected groups in creation order, each sorted
  // by width, then depth, larger space and hash.
  std::vector<const std::vector<PartialCircuit>*> groups() const;
  const CompileStats& stats() const { return stats_; }
  long long evaluated() const { return evaluated_; }

 private:
  struct Entry {
    int depth;
    int space;
    std::uint64_t hash;
    Recipe recipe;
    std::optional<PartialCircuit> pc;
    // Beams currently holding this entry, one bit per beam.
    std::uint64_t kept = 0;
    bool dead_end = false;
    std::string future;
  };
  struct Collector;

  int next_component();
  // Calls fn on every extension of pc by comp, whose placed parents must all
  // lie in pc, until it returns true.
  bool extensions(const PartialCircuit& pc, int comp, const std::function<bool(const Recipe&)>& fn) const;
  // Whether every component made ready by placing just_placed still fits.
  bool viable(const PartialCircuit& pc, int just_placed);
  void step(int comp, Collector& col);
  void finish(int comp, Collector& col);
  // The group's components at their baseline positions, kept in every table
  // so that a table can never run dry.
  std::optional<Recipe> home_recipe(int comp, const PartialCircuit* base, const PartialCircuit* other) const;
  const PartialCircuit* home_row(int group) const;
  std::uint64_t all_beams() const;

  const ComponentModel& model_;
  SearchOptions opt_;
  CandidateBuilder builder_;
  std::mt19937_64 rng_;
  std::vector<std::vector<PartialCircuit>> tables_;
  // Beams that keep each table entry, parallel to tables_.
  std::vector<std::vector<std::uint64_t>> masks_;
  // Size of each beam.
  std::vector<std::size_t> beams_;
  std::vector<bool> alive_;
  std::vector<int> group_of_;
  std::vector<bool> placed_;
  std::vector<std::uint64_t> home_hash_;
  // Baseline wire cells in front of each in-slot, empty when the parent
  // touches directly.
  std::vector<std::vector<std::vector<Coord>>> home_wires_;
  CompileStats stats_;
  long long evaluated_ = 0;
};

// Lower bound on the final depth of any completion of pc.
int depth_lower_bound(const PartialCircuit& pc);

struct Part {
  const PartialCircuit* pc = nullptr;
  Coord offset;
};

// Disconnected groups side by side: stacked with one empty row between them
// when they fit, otherwise in sequence with one empty column between them.
struct Assembly {
  std::vector<Part> parts;
  int width = 0;
  int depth = 0;
  int space = 0;
};

Assembly assemble_groups(const std::vector<const std::vector<PartialCircuit>*>& groups, int cluster_width);

MbqcGrid emit(const ComponentModel& model, const Assembly& a, int cluster_width);
// Adds one round of an assembly into a grid holding earlier rounds.
void emit_round(const ComponentModel& model, const Assembly& a, int round, Coord offset, MbqcGrid& into);

VariantOptions variant_options(const CompileConfig& cfg);
void check_config(const GateCircuit& circuit, const CompileConfig& cfg);
SearchOptions search_options(const CompileConfig& cfg);

bool key_less(int d1, int s1, std::uint64_t h1, int d2, int s2, std::uint64_t h2);

}  // namespace mbqc::detail
