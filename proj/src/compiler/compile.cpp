#include <algorithm>
#include <chrono>
#include <cmath>

#include "search.hpp"

namespace mbqc {

int cluster_width_for(int num_qubits, double factor) {
  // Guard against 1.25 * 8 = 10.000000000000002 style rounding.
  return static_cast<int>(std::ceil(factor * (2 * num_qubits - 1) - 1e-9));
}

namespace detail {

VariantOptions variant_options(const CompileConfig& cfg) {
  VariantOptions v = cfg.variants;
  v.max_width = cfg.cluster_width;
  return v;
}

void check_config(const GateCircuit& circuit, const CompileConfig& cfg) {
  if (cfg.m < 1) throw std::invalid_argument("m must be positive");
  if (cfg.rounds < 1) throw std::invalid_argument("rounds must be positive");
  const int need = std::max(1, 2 * circuit.num_qubits - 1);
  if (cfg.cluster_width < need)
    throw std::invalid_argument("cluster width " + std::to_string(cfg.cluster_width) + " is below the " +
                                std::to_string(need) + " rows the circuit needs");
}

SearchOptions search_options(const CompileConfig& cfg) {
  SearchOptions o;
  o.cluster_width = cfg.cluster_width;
  o.m = static_cast<std::size_t>(cfg.m);
  o.random_order = cfg.random_order;
  o.seed = cfg.seed;
  o.nested = cfg.nested_beams;
  o.dominance = true;
  return o;
}

}  // namespace detail

std::vector<PartialCircuit> prune(std::vector<PartialCircuit> candidates, int m) {
  std::stable_sort(candidates.begin(), candidates.end(), [](const PartialCircuit& a, const PartialCircuit& b) {
    if (a.width() != b.width()) return a.width() < b.width();
    return detail::key_less(a.depth(), a.space(), a.hash(), b.depth(), b.space(), b.hash());
  });
  std::vector<PartialCircuit> out;
  int width = -1, taken = 0;
  for (auto& pc : candidates) {
    if (pc.width() != width) width = pc.width(), taken = 0;
    if (taken++ < m) out.push_back(std::move(pc));
  }
  return out;
}

CompileResult compile(const GateCircuit& circuit, const CompileConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::check_config(circuit, cfg);
  const MbqcGrid baseline = lower_baseline(circuit);
  const ComponentModel model(baseline, detail::variant_options(cfg));
  detail::Search search(model, detail::search_options(cfg));
  search.run();
  const auto assembly = detail::assemble_groups(search.groups(), cfg.cluster_width);
  CompileResult res;
  res.grid = detail::emit(model, assembly, cfg.cluster_width);
  res.stats = search.stats();
  res.stats.baseline_depth = baseline.depth();
  res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace mbqc
