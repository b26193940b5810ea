#include "search.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace mbqc::detail {

bool key_less(int d1, int s1, std::uint64_t h1, int d2, int s2, std::uint64_t h2) {
  if (d1 != d2) return d1 < d2;
  if (s1 != s2) return s1 > s2;
  return h1 < h2;
}

namespace {

bool pc_less(const PartialCircuit& a, const PartialCircuit& b) {
  if (a.width() != b.width()) return a.width() < b.width();
  return key_less(a.depth(), a.space(), a.hash(), b.depth(), b.space(), b.hash());
}

int slot_of(const Component& c, int channel) {
  for (int k = 0; k < static_cast<int>(c.channels.size()); ++k)
    if (c.channels[k] == channel) return k;
  return -1;
}

// Last placed component on each channel, or -1.
std::vector<int> frontier(const PartialCircuit& pc) {
  const ComponentModel& m = pc.model();
  std::vector<int> out(m.num_channels(), -1);
  for (int ch = 0; ch < m.num_channels(); ++ch)
    for (int id : m.channel_components(ch))
      if (pc.has(id)) out[ch] = id;
  return out;
}

bool is_last(const ComponentModel& m, int ch, int id) { return m.channel_components(ch).back() == id; }

// Everything a completion of pc can observe, with columns measured from the
// leftmost open out-point. Cells further left cannot touch anything new.
std::string future_signature(const PartialCircuit& pc, int& fmin) {
  const ComponentModel& m = pc.model();
  const auto front = frontier(pc);
  std::vector<std::pair<Coord, std::uint32_t>> special;
  fmin = INT_MAX;
  for (int ch = 0; ch < m.num_channels(); ++ch) {
    const int id = front[ch];
    if (id < 0 || is_last(m, ch, id)) continue;
    const Component& c = m.component(id);
    const int k = slot_of(c, ch);
    const Coord out = pc.cell_position(id, c.out_points[k]);
    fmin = std::min(fmin, out.col);
    special.push_back({out, owner::comp(id, c.out_points[k])});
    if (c.partner >= 0) special.push_back({pc.cell_position(id, c.partner), owner::comp(id, c.partner)});
  }
  std::string sig;
  auto put = [&sig](std::int64_t v) { sig.append(reinterpret_cast<const char*>(&v), sizeof v); };
  put(pc.width());
  if (fmin == INT_MAX) {
    fmin = 0;
    return sig;
  }
  for (const auto& [c, code] : pc.cell_list()) {
    if (c.col < fmin - 1) continue;
    std::uint32_t cls = 1;
    for (const auto& [sc, scode] : special)
      if (sc == c) cls = scode;
    put(c.row);
    put(c.col - fmin);
    put(cls);
  }
  return sig;
}

}  // namespace

int depth_lower_bound(const PartialCircuit& pc) {
  const ComponentModel& m = pc.model();
  int lb = pc.depth();
  const auto front = frontier(pc);
  for (int ch = 0; ch < m.num_channels(); ++ch) {
    const int id = front[ch];
    if (id < 0) continue;
    const Component& c = m.component(id);
    const int col = pc.cell_position(id, c.out_points[slot_of(c, ch)]).col;
    // A coupler's successor sits one column right of it.
    const int tp = c.kind == ComponentKind::TP ? 1 : 0;
    lb = std::max(lb, col + tp + m.couplers_after(id, ch) + 1);
  }
  return lb;
}

struct Search::Collector {
  IterationStats* st = nullptr;
  PartialCircuit empty;
  // Bounded mode: distinct candidates, and per beam and width the pool
  // indices that beam keeps, best first.
  std::vector<Entry> pool;
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::vector<std::vector<int>>> buckets;
  // Per beam, the best pool entry seen for each future signature.
  std::vector<std::unordered_map<std::string, int>> futures;
  // Unbounded mode.
  bool dominance = false;
  std::unordered_set<std::uint64_t> seen;
  std::vector<PartialCircuit> all;
  std::vector<bool> dead;
  std::vector<int> fmin;
  std::unordered_map<std::string, std::vector<int>> by_signature;
  std::set<int> rejected;
  std::optional<PartialCircuit> home;

  Collector(const ComponentModel& m, int width, std::size_t beams)
      : empty(m),
        buckets(beams, std::vector<std::vector<int>>(static_cast<std::size_t>(width) + 1)),
        futures(beams) {}
};

Search::Search(const ComponentModel& model, SearchOptions opt)
    : model_(model),
      opt_(opt),
      builder_(model, opt.cluster_width),
      rng_(opt.seed),
      group_of_(static_cast<std::size_t>(model.size()), -1),
      placed_(static_cast<std::size_t>(model.size()), false),
      home_wires_(static_cast<std::size_t>(model.size())) {
  if (opt_.m > 0 && !opt_.nested) beams_ = {opt_.m};
  if (opt_.m > 0 && opt_.nested) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(opt_.m, 64); ++k) beams_.push_back(k);
    if (opt_.m > 64) beams_.back() = opt_.m;
  }
  for (int id = 0; id < model.size(); ++id) {
    const Component& C = model.component(id);
    home_wires_[id].resize(C.in_points.size());
    for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k) {
      const Relation par = model.parent(id, k);
      if (!par) continue;
      const Component& P = model.component(par.comp);
      const Coord out = P.cells[P.out_points[par.slot]].home;
      const Coord in = C.cells[C.in_points[k]].home;
      for (const auto& w : model.extraction().wires)
        if (w.channel == C.channels[k] && adjacent(w.cells.front(), out) && adjacent(w.cells.back(), in))
          home_wires_[id][k] = w.cells;
    }
  }
}

std::optional<Recipe> Search::home_recipe(int comp, const PartialCircuit* base, const PartialCircuit* other) const {
  if (!base) return std::nullopt;
  const Component& C = model_.component(comp);
  // Offset from baseline coordinates into a circuit's frame.
  auto delta_of = [&](const PartialCircuit& pc) {
    const int p = pc.placed_ids().front();
    return pc.placement(p).origin - model_.component(p).cells[0].home;
  };
  const Coord delta = base->empty() ? Coord{0, 0} - C.cells[0].home : delta_of(*base);
  Recipe r;
  r.base = base;
  r.other = other;
  r.comp = comp;
  r.shape = 0;
  r.origin = C.cells[0].home + delta;
  if (other) r.other_shift = delta - delta_of(*other);
  for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k) {
    if (home_wires_[comp][k].empty()) continue;
    WireSpec w{C.channels[k], model_.parent(comp, k).comp, comp, {}};
    for (Coord c : home_wires_[comp][k]) w.cells.push_back(c + delta);
    r.wires.push_back(std::move(w));
  }
  return r;
}

std::uint64_t Search::all_beams() const {
  return beams_.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << beams_.size()) - 1;
}

const PartialCircuit* Search::home_row(int group) const {
  for (const auto& pc : tables_[group])
    if (pc.hash() == home_hash_[group]) return &pc;
  return nullptr;
}

std::vector<const std::vector<PartialCircuit>*> Search::groups() const {
  std::vector<const std::vector<PartialCircuit>*> out;
  for (std::size_t g = 0; g < tables_.size(); ++g)
    if (alive_[g]) out.push_back(&tables_[g]);
  return out;
}

int Search::next_component() {
  std::vector<int> ready;
  for (int id = 0; id < model_.size(); ++id) {
    if (placed_[id]) continue;
    bool ok = true;
    for (const auto& e : model_.dag().parents(id)) ok = ok && placed_[e.parent];
    if (ok) ready.push_back(id);
  }
  if (ready.empty()) return -1;
  if (!opt_.random_order) return ready.front();
  return ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng_)];
}

bool Search::run() {
  for (int it = 1;; ++it) {
    const int comp = next_component();
    if (comp < 0) break;
    IterationStats st;
    st.iteration = it;
    st.component = comp;
    st.kind = model_.component(comp).kind;
    Collector col(model_, opt_.cluster_width, beams_.size());
    col.st = &st;
    step(comp, col);
    st.rejected_widths.assign(col.rejected.begin(), col.rejected.end());
    stats_.iterations.push_back(st);
    finish(comp, col);
    stats_.iterations.back().kept = static_cast<long long>(tables_[group_of_[comp]].size());
    if (opt_.observe) opt_.observe(comp, tables_[group_of_[comp]]);
    if (tables_[group_of_[comp]].empty()) {
      if (opt_.upper_bound != INT_MAX) return false;
      throw CompileError("no valid placement for component " + std::to_string(comp) + " at iteration " +
                             std::to_string(it) + "; the cluster width may be too small",
                         it, comp);
    }
  }
  int alive = 0;
  for (bool a : alive_) alive += a;
  stats_.groups = alive;
  return true;
}

bool Search::extensions(const PartialCircuit& pc, int comp, const std::function<bool(const Recipe&)>& fn) const {
  const Component& C = model_.component(comp);
  const auto& shapes = model_.shapes(comp);
  std::vector<int> slots;
  for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k)
    if (model_.parent(comp, k)) slots.push_back(k);
  auto anchors_for = [&](Relation par) {
    std::vector<AnchorPoint> out;
    for (const auto& a : anchor_points(pc, par.comp))
      if (a.slot == par.slot) out.push_back(a);
    return out;
  };

  if (slots.size() == 1) {
    const Relation p = model_.parent(comp, slots[0]);
    for (const auto& a : anchors_for(p)) {
      for (int s = 0; s < static_cast<int>(shapes.size()); ++s) {
        Recipe r;
        r.base = &pc;
        r.comp = comp;
        r.shape = s;
        r.origin = a.at - shapes[s][C.in_points[slots[0]]];
        if (fn(r)) return true;
      }
    }
    return false;
  }

  // Both parents already share a placement: attach one line at an anchor
  // and meet the other directly or through a wire.
  for (int o = 0; o < 2; ++o) {
    const int ka = slots[o], kb = slots[1 - o];
    const Relation pa = model_.parent(comp, ka), pb = model_.parent(comp, kb);
    const Component& B = model_.component(pb.comp);
    const Coord out_b = pc.cell_position(pb.comp, B.out_points[pb.slot]);
    for (const auto& a : anchors_for(pa)) {
      for (int s = 0; s < static_cast<int>(shapes.size()); ++s) {
        Recipe r;
        r.base = &pc;
        r.comp = comp;
        r.shape = s;
        r.origin = a.at - shapes[s][C.in_points[ka]];
        const Coord in_b = r.origin + shapes[s][C.in_points[kb]];
        if (adjacent(in_b, out_b)) {
          if (o == 0 && fn(r)) return true;
          continue;
        }
        if (B.partner >= 0) continue;
        for (auto& route : wire_routes(out_b, in_b)) {
          r.wires = {WireSpec{C.channels[kb], pb.comp, comp, std::move(route)}};
          if (fn(r)) return true;
        }
      }
    }
  }
  return false;
}

bool Search::viable(const PartialCircuit& pc, int just_placed) {
  for (int id = 0; id < model_.size(); ++id) {
    if (placed_[id] || id == just_placed) continue;
    const Component& C = model_.component(id);
    bool ready = true, inside = true, rooted = false;
    for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k) {
      const Relation par = model_.parent(id, k);
      if (!par) continue;
      rooted = true;
      ready = ready && (placed_[par.comp] || par.comp == just_placed);
      inside = inside && pc.has(par.comp);
    }
    if (!rooted || !ready || !inside) continue;
    if (!extensions(pc, id, [&](const Recipe& r) { return builder_.evaluate(r).valid; })) return false;
  }
  return true;
}

void Search::step(int comp, Collector& col) {
  const Component& C = model_.component(comp);
  const auto& shapes = model_.shapes(comp);
  IterationStats& st = *col.st;

  auto offer = [&](const Recipe& r, std::uint64_t mask) {
    ++st.generated;
    if (opt_.budget >= 0 && ++evaluated_ > opt_.budget) throw BudgetExceeded("search budget exhausted");
    const Outcome o = builder_.evaluate(r);
    if (!o.valid) {
      ++st.invalid[static_cast<int>(o.failed)];
      if (o.failed == Constraint::IV) col.rejected.insert(o.width);
      return;
    }
    if (o.depth >= opt_.upper_bound) {
      ++st.pruned;
      return;
    }
    if (opt_.m == 0) {
      if (!col.seen.insert(o.hash).second) {
        ++st.duplicates;
        return;
      }
      PartialCircuit pc = builder_.materialize(r);
      if (opt_.upper_bound != INT_MAX && depth_lower_bound(pc) >= opt_.upper_bound) {
        ++st.pruned;
        return;
      }
      if (!viable(pc, comp)) {
        ++st.dead_ends;
        return;
      }
      int f = 0;
      if (col.dominance) {
        auto& list = col.by_signature[future_signature(pc, f)];
        for (int i : list)
          if (!col.dead[i] && col.fmin[i] <= f && col.all[i].depth() <= pc.depth()) {
            ++st.pruned;
            return;
          }
        for (int i : list)
          if (!col.dead[i] && f <= col.fmin[i] && pc.depth() <= col.all[i].depth()) {
            col.dead[i] = true;
            ++st.pruned;
          }
        list.push_back(static_cast<int>(col.all.size()));
      }
      col.all.push_back(std::move(pc));
      col.dead.push_back(false);
      col.fmin.push_back(f);
      return;
    }
    auto& pool = col.pool;
    auto found = col.index.find(o.hash);
    const int known = found == col.index.end() ? -1 : found->second;
    if (known >= 0 && (pool[known].dead_end || (mask & ~pool[known].kept) == 0)) {
      ++st.duplicates;
      return;
    }
    auto before = [&](int a, int b) {
      return key_less(pool[a].depth, pool[a].space, pool[a].hash, pool[b].depth, pool[b].space, pool[b].hash);
    };
    auto beats = [&](int b) {
      return key_less(o.depth, o.space, o.hash, pool[b].depth, pool[b].space, pool[b].hash);
    };
    std::uint64_t want = 0;
    for (std::size_t b = 0; b < beams_.size(); ++b) {
      if (!(mask >> b & 1) || (known >= 0 && (pool[known].kept >> b & 1))) continue;
      const auto& bucket = col.buckets[b][o.width];
      if (bucket.size() < beams_[b] || beats(bucket.back())) want |= std::uint64_t{1} << b;
    }
    if (!want) {
      ++st.pruned;
      return;
    }
    int idx = known;
    if (idx < 0) {
      Entry e{o.depth, o.space, o.hash, r, builder_.materialize(r), 0, false, {}};
      idx = static_cast<int>(pool.size());
      col.index.emplace(o.hash, idx);
      if (!viable(*e.pc, comp)) {
        e.pc.reset();
        e.dead_end = true;
        pool.push_back(std::move(e));
        ++st.dead_ends;
        return;
      }
      if (col.dominance) {
        int f = 0;
        e.future = future_signature(*e.pc, f);
        e.future += std::to_string(f);
      }
      pool.push_back(std::move(e));
    }
    auto drop = [&](int b, int victim) {
      auto& bucket = col.buckets[b][pool[victim].pc->width()];
      bucket.erase(std::find(bucket.begin(), bucket.end(), victim));
      pool[victim].kept &= ~(std::uint64_t{1} << b);
      if (!pool[victim].kept) ++st.pruned;
    };
    for (std::size_t b = 0; b < beams_.size(); ++b) {
      if (!(want >> b & 1)) continue;
      if (col.dominance) {
        // Circuits with the same frontier have the same completions; a beam
        // keeps only the best of them.
        auto [it, fresh] = col.futures[b].emplace(pool[idx].future, idx);
        if (!fresh) {
          const int rival = it->second;
          if (!before(idx, rival)) {
            ++st.duplicates;
            continue;
          }
          if (pool[rival].kept >> b & 1) drop(static_cast<int>(b), rival);
          it->second = idx;
        }
      }
      auto& bucket = col.buckets[b][o.width];
      if (bucket.size() >= beams_[b]) {
        Entry& out = pool[bucket.back()];
        out.kept &= ~(std::uint64_t{1} << b);
        if (!out.kept) ++st.pruned;
        bucket.pop_back();
      }
      bucket.insert(std::upper_bound(bucket.begin(), bucket.end(), idx, before), idx);
      pool[idx].kept |= std::uint64_t{1} << b;
    }
  };

  std::vector<int> slots;
  for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k)
    if (model_.parent(comp, k)) slots.push_back(k);

  if (opt_.m > 0) {
    std::optional<Recipe> home;
    if (slots.empty()) {
      home = home_recipe(comp, &col.empty, nullptr);
    } else {
      const int ga = group_of_[model_.parent(comp, slots[0]).comp];
      const int gb = slots.size() > 1 ? group_of_[model_.parent(comp, slots[1]).comp] : ga;
      home = home_recipe(comp, home_row(ga), ga == gb ? nullptr : home_row(gb));
      if (ga != gb && !home->other) home.reset();
    }
    if (home && builder_.evaluate(*home).valid) col.home = builder_.materialize(*home);
  }

  if (slots.empty()) {
    for (int s = 0; s < static_cast<int>(shapes.size()); ++s) {
      Recipe r;
      r.base = &col.empty;
      r.comp = comp;
      r.shape = s;
      offer(r, all_beams());
    }
    return;
  }

  const Relation p0 = model_.parent(comp, slots[0]);
  const int g0 = group_of_[p0.comp];
  const int g1 = slots.size() > 1 ? group_of_[model_.parent(comp, slots[1]).comp] : g0;

  if (opt_.dominance) {
    int alive = 0;
    for (bool a : alive_) alive += a;
    bool roots_left = false;
    for (int id = 0; id < model_.size(); ++id)
      if (!placed_[id] && id != comp && model_.dag().parents(id).empty()) roots_left = true;
    col.dominance = !roots_left && alive - (g0 != g1 ? 1 : 0) == 1;
  }

  if (g0 == g1) {
    for (std::size_t i = 0; i < tables_[g0].size(); ++i)
      extensions(tables_[g0][i], comp, [&](const Recipe& r) {
        offer(r, masks_[g0][i]);
        return false;
      });
    return;
  }

  auto anchors_for = [&](const PartialCircuit& pc, Relation par) {
    std::vector<AnchorPoint> out;
    for (const auto& a : anchor_points(pc, par.comp))
      if (a.slot == par.slot) out.push_back(a);
    return out;
  };
  const int k0 = slots[0], k1 = slots[1];
  const Relation p1 = model_.parent(comp, k1);
  std::vector<std::vector<AnchorPoint>> anchors2;
  for (const auto& pc2 : tables_[g1]) anchors2.push_back(anchors_for(pc2, p1));
  for (std::size_t i = 0; i < tables_[g0].size(); ++i) {
    const auto& pc1 = tables_[g0][i];
    const auto anchors1 = anchors_for(pc1, p0);
    for (std::size_t j = 0; j < tables_[g1].size(); ++j) {
      const auto& pc2 = tables_[g1][j];
      // A pair is only explored by beams that keep both halves.
      const std::uint64_t mask = masks_[g0][i] & masks_[g1][j];
      if (!mask) continue;
      for (int s = 0; s < static_cast<int>(shapes.size()); ++s) {
        for (const auto& a1 : anchors1) {
          for (const auto& a2 : anchors2[j]) {
            Recipe r;
            r.base = &pc1;
            r.other = &pc2;
            r.comp = comp;
            r.shape = s;
            r.origin = a1.at - shapes[s][C.in_points[k0]];
            r.other_shift = r.origin + shapes[s][C.in_points[k1]] - a2.at;
            offer(r, mask);
          }
        }
      }
    }
  }
}

void Search::finish(int comp, Collector& col) {
  std::vector<PartialCircuit> found;
  std::vector<std::uint64_t> found_masks;
  if (opt_.m == 0) {
    for (std::size_t i = 0; i < col.all.size(); ++i)
      if (!col.dead[i]) found.push_back(std::move(col.all[i]));
    found_masks.assign(found.size(), 1);
  } else {
    for (auto& e : col.pool) {
      if (!e.kept) continue;
      found.push_back(std::move(*e.pc));
      found_masks.push_back(e.kept);
    }
    if (col.home) {
      // Every beam keeps the home row on top of its budget.
      std::size_t i = 0;
      while (i < found.size() && found[i].hash() != col.home->hash()) ++i;
      if (i == found.size()) {
        found.push_back(*col.home);
        found_masks.push_back(0);
      }
      found_masks[i] = all_beams();
    }
  }
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pc_less(found[a], found[b]); });
  std::vector<PartialCircuit> table;
  std::vector<std::uint64_t> masks;
  for (std::size_t i : order) {
    table.push_back(std::move(found[i]));
    masks.push_back(found_masks[i]);
  }
  const std::uint64_t home = col.home ? col.home->hash() : 0;

  std::vector<int> parent_groups;
  for (const auto& e : model_.dag().parents(comp)) parent_groups.push_back(group_of_[e.parent]);
  std::sort(parent_groups.begin(), parent_groups.end());
  parent_groups.erase(std::unique(parent_groups.begin(), parent_groups.end()), parent_groups.end());

  int g;
  if (parent_groups.empty()) {
    g = static_cast<int>(tables_.size());
    tables_.push_back(std::move(table));
    masks_.push_back(std::move(masks));
    alive_.push_back(true);
    home_hash_.push_back(home);
  } else {
    g = parent_groups[0];
    tables_[g] = std::move(table);
    masks_[g] = std::move(masks);
    home_hash_[g] = home;
    for (std::size_t i = 1; i < parent_groups.size(); ++i) {
      const int dead = parent_groups[i];
      alive_[dead] = false;
      tables_[dead].clear();
      masks_[dead].clear();
      for (auto& x : group_of_)
        if (x == dead) x = g;
    }
  }
  group_of_[comp] = g;
  placed_[comp] = true;
}

Assembly assemble_groups(const std::vector<const std::vector<PartialCircuit>*>& groups, int cluster_width) {
  // Per group, the best candidate of each width that beats every narrower one.
  std::vector<std::vector<const PartialCircuit*>> options;
  double product = 1;
  for (const auto* table : groups) {
    std::vector<const PartialCircuit*> opts;
    int best_depth = INT_MAX;
    for (std::size_t i = 0; i < table->size(); ++i) {
      const PartialCircuit& pc = (*table)[i];
      if (i > 0 && (*table)[i - 1].width() == pc.width()) continue;
      if (pc.depth() >= best_depth) continue;
      best_depth = pc.depth();
      opts.push_back(&pc);
    }
    product *= static_cast<double>(opts.size());
    options.push_back(std::move(opts));
  }
  if (product > 1e5) {
    for (auto& opts : options) {
      const PartialCircuit* best = opts.front();
      for (const auto* pc : opts)
        if (pc->depth() < best->depth()) best = pc;
      opts = {best};
    }
  }

  auto layout = [&](const std::vector<const PartialCircuit*>& pick) {
    Assembly a;
    int total = -1;
    for (const auto* pc : pick) total += pc->width() + 1;
    const bool stacked = total <= cluster_width;
    Coord at{0, 0};
    for (const auto* pc : pick) {
      a.parts.push_back({pc, at});
      if (stacked) {
        at.row += pc->width() + 1;
        a.depth = std::max(a.depth, pc->depth());
        a.width = at.row - 1;
      } else {
        at.col += pc->depth() + 1;
        a.depth = at.col - 1;
        a.width = std::max(a.width, pc->width());
      }
    }
    std::vector<int> right(static_cast<std::size_t>(std::max(a.width, 0)), -1);
    for (const auto& p : a.parts)
      for (int r = 0; r < p.pc->width(); ++r)
        if (p.pc->rightmost(r) >= 0)
          right[r + p.offset.row] = std::max(right[r + p.offset.row], p.pc->rightmost(r) + p.offset.col);
    for (int x : right)
      if (x >= 0) a.space += a.depth - 1 - x;
    return a;
  };

  Assembly best;
  bool have = false;
  std::vector<const PartialCircuit*> pick(options.size());
  std::vector<std::size_t> idx(options.size(), 0);
  for (;;) {
    for (std::size_t g = 0; g < options.size(); ++g) pick[g] = options[g][idx[g]];
    Assembly a = layout(pick);
    if (!have || a.depth < best.depth || (a.depth == best.depth && a.width < best.width) ||
        (a.depth == best.depth && a.width == best.width && a.space > best.space)) {
      best = std::move(a);
      have = true;
    }
    std::size_t g = 0;
    while (g < options.size() && ++idx[g] == options[g].size()) idx[g++] = 0;
    if (g == options.size()) break;
  }
  return best;
}

void emit_round(const ComponentModel& model, const Assembly& a, int round, Coord offset, MbqcGrid& into) {
  const int nq = model.num_channels();
  if (static_cast<int>(into.channels.size()) < (round + 1) * nq)
    into.channels.resize(static_cast<std::size_t>((round + 1) * nq));
  for (const auto& p : a.parts) {
    MbqcGrid sub = p.pc->to_grid(into.width, round, p.offset + offset);
    for (auto& [c, cell] : sub.cells) into.cells[c] = cell;
    for (int ch = 0; ch < nq; ++ch)
      if (!sub.channels[ch].empty()) into.channels[round * nq + ch] = std::move(sub.channels[ch]);
    into.links.insert(into.links.end(), sub.links.begin(), sub.links.end());
  }
}

MbqcGrid emit(const ComponentModel& model, const Assembly& a, int cluster_width) {
  MbqcGrid g;
  g.width = cluster_width;
  g.num_qubits = model.num_channels();
  g.rounds = 1;
  emit_round(model, a, 0, {0, 0}, g);
  return g;
}

}  // namespace mbqc::detail
