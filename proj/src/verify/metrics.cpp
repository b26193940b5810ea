#include <algorithm>

#include "mbqc/verify.hpp"

namespace mbqc {

double photon_utilization(const MbqcGrid& grid) {
  const int d = grid.depth();
  if (d == 0 || grid.width <= 0) return 0.0;
  long long used = 0;
  for (const auto& [c, cell] : grid.cells)
    if (cell.m.basis != Basis::Z && c.col < d) ++used;
  return static_cast<double>(used) / (static_cast<double>(grid.width) * d);
}

MetricsReport metrics(const MbqcGrid& baseline, const MbqcGrid& compiled) {
  MetricsReport r;
  r.width = compiled.width;
  r.baseline_depth = baseline.depth();
  r.compiled_depth = compiled.depth();
  r.reduction_ratio = r.baseline_depth ? 1.0 - static_cast<double>(r.compiled_depth) / r.baseline_depth : 0.0;
  r.photon_utilization_baseline = photon_utilization(pad_to_width(baseline, std::max(baseline.width, compiled.width)));
  r.photon_utilization_compiled = photon_utilization(compiled);
  return r;
}

}  // namespace mbqc
