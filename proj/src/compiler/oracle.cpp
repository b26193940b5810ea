#include <algorithm>

#include "search.hpp"

namespace mbqc {

// Branch and bound over the unpruned search: every distinct partial circuit
// is kept unless its depth bound already reaches the best known depth, or a
// kept circuit with the same unfinished part is at least as good.
int exhaustive_min_depth(const GateCircuit& circuit, int cluster_width, long long budget) {
  CompileConfig cfg;
  cfg.cluster_width = cluster_width;
  cfg.m = 12;
  const int upper = compile(circuit, cfg).depth();

  VariantOptions full;
  full.max_width = cluster_width;
  full.full_enumeration_cells = 16;
  const ComponentModel model(lower_baseline(circuit), full);
  for (const auto& c : model.components())
    if (c.kind == ComponentKind::S && c.size() > full.full_enumeration_cells)
      throw BudgetExceeded("single-qubit run of " + std::to_string(c.size()) + " cells is too long to enumerate");

  detail::SearchOptions opt;
  opt.cluster_width = cluster_width;
  opt.m = 0;
  opt.upper_bound = upper;
  opt.dominance = true;
  opt.budget = budget;
  detail::Search search(model, opt);
  if (!search.run()) return upper;
  const auto a = detail::assemble_groups(search.groups(), cluster_width);
  return std::min(upper, a.depth);
}

}  // namespace mbqc
