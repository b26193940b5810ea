#include "mbqc/model.hpp"

#include <algorithm>

namespace mbqc {

ComponentModel::ComponentModel(const MbqcGrid& baseline, const VariantOptions& opt)
    : baseline_(baseline), ex_(extract_components(baseline)), opt_(opt) {
  const int n = size();
  fixed_.resize(n);
  shapes_.resize(n);
  parents_.resize(n);
  children_.resize(n);
  tp_after_.resize(n);
  for (int id = 0; id < n; ++id) {
    const Component& c = ex_.components[id];
    if (c.kind == ComponentKind::S) {
      auto it = s_cache_.find(c.size());
      if (it == s_cache_.end()) it = s_cache_.emplace(c.size(), s_shapes(c.size(), opt_)).first;
      shapes_[id] = &it->second;
    } else {
      for (auto& v : generate_variants(c, opt_)) fixed_[id].push_back(std::move(v.offsets));
      shapes_[id] = &fixed_[id];
    }
    parents_[id].assign(c.in_points.size(), Relation{});
    children_[id].assign(c.out_points.size(), Relation{});
  }
  auto slot_of = [&](int id, int ch) {
    const auto& chans = ex_.components[id].channels;
    return static_cast<int>(std::find(chans.begin(), chans.end(), ch) - chans.begin());
  };
  for (const auto& e : ex_.dag.edges) {
    const int ps = slot_of(e.parent, e.channel), cs = slot_of(e.child, e.channel);
    parents_[e.child][cs] = {e.parent, ps};
    children_[e.parent][ps] = {e.child, cs};
  }
  for (int ch = 0; ch < num_channels(); ++ch) {
    const auto& seq = ex_.channel_components[ch];
    int count = 0;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      tp_after_[*it][ch] = count;
      if (ex_.components[*it].kind == ComponentKind::TP) ++count;
    }
  }
}

bool ComponentModel::internal_edge(int id, int a, int b) const {
  const Component& c = ex_.components[id];
  if (c.kind == ComponentKind::S || c.kind == ComponentKind::Wire) return std::abs(a - b) == 1;
  for (auto [x, y] : c.edges)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

int ComponentModel::couplers_after(int id, int channel) const {
  auto it = tp_after_[id].find(channel);
  return it == tp_after_[id].end() ? 0 : it->second;
}

}  // namespace mbqc
