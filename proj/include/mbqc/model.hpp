#pragma once

#include <map>
#include <vector>

#include "mbqc/component.hpp"

namespace mbqc {

// Another component's slot: a parent's out-point or a child's in-point.
struct Relation {
  int comp = -1;
  int slot = -1;
  explicit operator bool() const { return comp >= 0; }
};

// Everything the search needs to know about one circuit: components, their
// DAG relations and the variant shapes of each component.
class ComponentModel {
 public:
  ComponentModel(const MbqcGrid& baseline, const VariantOptions& opt);

  int size() const { return static_cast<int>(ex_.components.size()); }
  int num_channels() const { return static_cast<int>(ex_.channel_components.size()); }
  const Component& component(int id) const { return ex_.components[id]; }
  const std::vector<Component>& components() const { return ex_.components; }
  const ComponentDag& dag() const { return ex_.dag; }
  const Extraction& extraction() const { return ex_; }
  const VariantOptions& options() const { return opt_; }
  const std::vector<int>& channel_components(int ch) const { return ex_.channel_components[ch]; }

  const std::vector<std::vector<Coord>>& shapes(int id) const { return *shapes_[id]; }

  Relation parent(int id, int in_slot) const { return parents_[id][in_slot]; }
  Relation child(int id, int out_slot) const { return children_[id][out_slot]; }

  bool internal_edge(int id, int a, int b) const;
  // Two-line components still to come on a channel after the given one.
  int couplers_after(int id, int channel) const;
  const MbqcGrid& baseline() const { return baseline_; }

 private:
  MbqcGrid baseline_;
  Extraction ex_;
  VariantOptions opt_;
  std::map<int, std::vector<std::vector<Coord>>> s_cache_;
  std::vector<std::vector<std::vector<Coord>>> fixed_;
  std::vector<const std::vector<std::vector<Coord>>*> shapes_;
  std::vector<std::vector<Relation>> parents_, children_;
  std::vector<std::map<int, int>> tp_after_;
};

}  // namespace mbqc
