#include <algorithm>
#include <climits>
#include <stdexcept>

#include "mbqc/candidate.hpp"

namespace mbqc {

namespace {

int slot_of(const Component& c, int channel) {
  for (int k = 0; k < static_cast<int>(c.channels.size()); ++k)
    if (c.channels[k] == channel) return k;
  return -1;
}

struct Bounds {
  int r0 = INT_MAX, r1 = INT_MIN, c0 = INT_MAX, c1 = INT_MIN;
  void add(Coord c) {
    r0 = std::min(r0, c.row), r1 = std::max(r1, c.row);
    c0 = std::min(c0, c.col), c1 = std::max(c1, c.col);
  }
  void add_box(Coord lo, int rows, int cols) {
    if (rows <= 0) return;
    add(lo);
    add(lo + Coord{rows - 1, cols - 1});
  }
};

Bounds recipe_bounds(const Recipe& r, const std::vector<Coord>& cells) {
  Bounds b;
  b.add_box({0, 0}, r.base->width(), r.base->depth());
  if (r.other) b.add_box(r.other_shift, r.other->width(), r.other->depth());
  for (Coord c : cells) b.add(c);
  for (const auto& w : r.wires)
    for (Coord c : w.cells) b.add(c);
  return b;
}

}  // namespace

Coord CandidateBuilder::locate(const Recipe& r, int comp, int cell) {
  if (r.base->has(comp)) return r.base->cell_position(comp, cell);
  if (r.other && r.other->has(comp)) return r.other->cell_position(comp, cell) + r.other_shift;
  throw std::logic_error("component is not placed");
}

CandidateBuilder::Owner CandidateBuilder::decode(std::uint32_t code, const PartialCircuit& pc) const {
  Owner o;
  if (!code) return o;
  if (owner::is_wire(code)) {
    const WirePath& w = pc.wires_[owner::id(code)];
    o.kind = 2;
    o.idx = owner::index(code);
    o.wire = &w;
    o.from = w.from;
    o.to = w.to;
    o.channel = w.channel;
    o.len = static_cast<int>(w.cells.size());
  } else {
    o.kind = 1;
    o.id = owner::id(code);
    o.idx = owner::index(code);
  }
  return o;
}

CandidateBuilder::Owner CandidateBuilder::lookup(const Recipe& r, Coord c) const {
  if (auto code = r.base->code_at(c)) return decode(code, *r.base);
  if (r.other)
    if (auto code = r.other->code_at(c - r.other_shift)) return decode(code, *r.other);
  for (int i = 0; i < static_cast<int>(new_cells_.size()); ++i)
    if (new_cells_[i] == c) return Owner{1, r.comp, i};
  for (const auto& w : r.wires) {
    for (int i = 0; i < static_cast<int>(w.cells.size()); ++i) {
      if (w.cells[i] == c) {
        Owner o;
        o.kind = 2;
        o.idx = i;
        o.wire = &w;
        o.from = w.from;
        o.to = w.to;
        o.channel = w.channel;
        o.len = static_cast<int>(w.cells.size());
        return o;
      }
    }
  }
  return {};
}

bool CandidateBuilder::has_wire(const Recipe& r, int from, int to) const {
  if (r.base->wire_between(from, to)) return true;
  if (r.other && r.other->wire_between(from, to)) return true;
  for (const auto& w : r.wires)
    if (w.from == from && w.to == to) return true;
  return false;
}

bool CandidateBuilder::linked(const Recipe& r, const Owner& p, const Owner& c) const {
  const Component& A = model_->component(p.id);
  const int so = A.out_slot(p.idx);
  if (so >= 0) {
    const Relation ch = model_->child(p.id, so);
    if (ch.comp == c.id && model_->component(c.id).in_points[ch.slot] == c.idx && !has_wire(r, p.id, c.id)) return true;
  }
  if (A.partner >= 0 && p.idx == A.partner) {
    for (int k = 0; k < static_cast<int>(A.out_points.size()); ++k) {
      const Relation ch = model_->child(p.id, k);
      if (ch.comp == c.id && model_->component(c.id).in_points[ch.slot] == c.idx) return true;
    }
  }
  return false;
}

bool CandidateBuilder::expected(const Recipe& r, const Owner& a, const Owner& b) const {
  if (a.kind == 1 && b.kind == 1) {
    if (a.id == b.id) return model_->internal_edge(a.id, a.idx, b.idx);
    return linked(r, a, b) || linked(r, b, a);
  }
  if (a.kind == 2 && b.kind == 2) return a.wire == b.wire && std::abs(a.idx - b.idx) == 1;
  const Owner& w = a.kind == 2 ? a : b;
  const Owner& c = a.kind == 2 ? b : a;
  if (w.idx == 0 && c.id == w.from) {
    const Component& f = model_->component(w.from);
    const int s = slot_of(f, w.channel);
    if (s >= 0 && f.out_points[s] == c.idx) return true;
  }
  if (w.idx == w.len - 1 && c.id == w.to) {
    const Component& t = model_->component(w.to);
    const int s = slot_of(t, w.channel);
    if (s >= 0 && t.in_points[s] == c.idx) return true;
  }
  return false;
}

Outcome CandidateBuilder::evaluate(const Recipe& r) {
  Outcome o;
  auto fail = [&](Constraint c, Coord at) {
    o.valid = false;
    o.failed = c;
    o.at = at;
    return o;
  };
  const PartialCircuit& base = *r.base;
  const Component& C = model_->component(r.comp);
  const auto& shape = model_->shapes(r.comp)[r.shape];
  new_cells_.clear();
  for (Coord d : shape) new_cells_.push_back(r.origin + d);

  // Overlap.
  for (Coord p : new_cells_) {
    if (base.code_at(p) || (r.other && r.other->code_at(p - r.other_shift))) return fail(Constraint::Overlap, p);
  }
  for (std::size_t wi = 0; wi < r.wires.size(); ++wi) {
    for (Coord q : r.wires[wi].cells) {
      if (base.code_at(q) || (r.other && r.other->code_at(q - r.other_shift))) return fail(Constraint::Overlap, q);
      if (std::find(new_cells_.begin(), new_cells_.end(), q) != new_cells_.end()) return fail(Constraint::Overlap, q);
      for (std::size_t wj = 0; wj < wi; ++wj) {
        const auto& cells = r.wires[wj].cells;
        if (std::find(cells.begin(), cells.end(), q) != cells.end()) return fail(Constraint::Overlap, q);
      }
    }
  }
  const PartialCircuit* small = nullptr;
  const PartialCircuit* large = nullptr;
  Coord small_shift, large_shift;
  if (r.other) {
    const bool other_small = r.other->cell_list().size() <= base.cell_list().size();
    small = other_small ? r.other : &base;
    large = other_small ? &base : r.other;
    small_shift = other_small ? r.other_shift : Coord{0, 0};
    large_shift = other_small ? Coord{0, 0} : r.other_shift;
    for (const auto& [q, code] : small->cell_list()) {
      const Coord p = q + small_shift;
      if (large->code_at(p - large_shift)) return fail(Constraint::Overlap, p);
    }
  }

  // Constraint II: every adjacency touching something new must be expected.
  for (int i = 0; i < static_cast<int>(new_cells_.size()); ++i) {
    const Owner a{1, r.comp, i};
    for (Coord d : kNeighbours) {
      const Owner b = lookup(r, new_cells_[i] + d);
      if (b.kind && !expected(r, a, b)) return fail(Constraint::II, new_cells_[i]);
    }
  }
  for (const auto& w : r.wires) {
    for (int i = 0; i < static_cast<int>(w.cells.size()); ++i) {
      Owner a;
      a.kind = 2;
      a.idx = i;
      a.wire = &w;
      a.from = w.from;
      a.to = w.to;
      a.channel = w.channel;
      a.len = static_cast<int>(w.cells.size());
      for (Coord d : kNeighbours) {
        const Owner b = lookup(r, w.cells[i] + d);
        if (b.kind && !expected(r, a, b)) return fail(Constraint::II, w.cells[i]);
      }
    }
  }
  if (r.other) {
    for (const auto& [q, code] : small->cell_list()) {
      const Coord p = q + small_shift;
      const Owner a = decode(code, *small);
      for (Coord d : kNeighbours) {
        const std::uint32_t c2 = large->code_at(p + d - large_shift);
        if (!c2) continue;
        if (!expected(r, a, decode(c2, *large))) return fail(Constraint::II, p);
      }
    }
  }

  // Constraints I and III for the new component's inputs.
  for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k) {
    const Relation par = model_->parent(r.comp, k);
    if (!par) continue;
    const bool placed = base.has(par.comp) || (r.other && r.other->has(par.comp));
    const Coord in = new_cells_[C.in_points[k]];
    if (!placed) return fail(Constraint::I, in);
    const Component& P = model_->component(par.comp);
    const Coord out = locate(r, par.comp, P.out_points[par.slot]);
    for (Coord p : new_cells_)
      if (p.col < out.col) return fail(Constraint::III, p);

    const WireSpec* wire = nullptr;
    for (const auto& w : r.wires)
      if (w.from == par.comp && w.to == r.comp) wire = &w;
    if (wire) {
      if (P.partner >= 0) return fail(Constraint::I, in);
      const auto& cells = wire->cells;
      if (!adjacent(out, cells.front()) || !adjacent(cells.back(), in)) return fail(Constraint::I, in);
      Coord prev = out;
      for (Coord q : cells) {
        if (q.col < prev.col) return fail(Constraint::III, q);
        prev = q;
      }
      if (in.col < prev.col) return fail(Constraint::III, in);
      continue;
    }
    if ((r.pending >> k) & 1u) continue;
    if (!adjacent(out, in)) return fail(Constraint::I, in);
    if (in.col < out.col) return fail(Constraint::III, in);
    if (P.partner >= 0 && !adjacent(in, locate(r, par.comp, P.partner))) return fail(Constraint::I, in);
  }

  // Constraint IV.
  const Bounds b = recipe_bounds(r, new_cells_);
  if (b.r1 - b.r0 + 1 > width_) {
    o.width = b.r1 - b.r0 + 1;
    return fail(Constraint::IV, {b.r1, b.c1});
  }

  o.valid = true;
  o.width = b.r1 - b.r0 + 1;
  o.depth = b.c1 - b.c0 + 1;
  const int sr = -b.r0, sc = -b.c0;

  std::vector<int>& right = right_scratch_;
  right.assign(static_cast<std::size_t>(o.width), -1);
  for (int row = 0; row < base.width(); ++row)
    if (base.right_[row] >= 0) right[row + sr] = std::max(right[row + sr], base.right_[row] + sc);
  if (r.other)
    for (int row = 0; row < r.other->width(); ++row)
      if (r.other->right_[row] >= 0)
        right[row + r.other_shift.row + sr] =
            std::max(right[row + r.other_shift.row + sr], r.other->right_[row] + r.other_shift.col + sc);
  for (Coord p : new_cells_) right[p.row + sr] = std::max(right[p.row + sr], p.col + sc);
  for (const auto& w : r.wires)
    for (Coord p : w.cells) right[p.row + sr] = std::max(right[p.row + sr], p.col + sc);
  o.space = 0;
  for (int x : right)
    if (x >= 0) o.space += o.depth - 1 - x;

  std::uint64_t h = chash::mul(base.hash(), chash::mul(chash::row_pow(sr), chash::col_pow(sc)));
  if (r.other)
    h = chash::add(h, chash::mul(r.other->hash(), chash::mul(chash::row_pow(r.other_shift.row + sr),
                                                             chash::col_pow(r.other_shift.col + sc))));
  for (int i = 0; i < static_cast<int>(new_cells_.size()); ++i)
    h = chash::add(h, chash::term(chash::comp_value(r.comp, i), new_cells_[i].row + sr, new_cells_[i].col + sc));
  for (const auto& w : r.wires)
    for (int i = 0; i < static_cast<int>(w.cells.size()); ++i)
      h = chash::add(h, chash::term(chash::wire_value(w.from, w.to, i), w.cells[i].row + sr, w.cells[i].col + sc));
  o.hash = h;
  return o;
}

bool CandidateBuilder::edge_expected(const PartialCircuit& pc, std::uint32_t a, std::uint32_t b) const {
  Recipe r;
  r.base = &pc;
  return expected(r, decode(a, pc), decode(b, pc));
}

PartialCircuit CandidateBuilder::materialize(const Recipe& r) const {
  const auto& shape = model_->shapes(r.comp)[r.shape];
  std::vector<Coord> cells;
  for (Coord d : shape) cells.push_back(r.origin + d);
  const Bounds b = recipe_bounds(r, cells);
  const Coord shift{-b.r0, -b.c0};

  PartialCircuit pc(*model_);
  pc.rows_ = b.r1 - b.r0 + 1;
  pc.cols_ = b.c1 - b.c0 + 1;
  pc.occ_.assign(static_cast<std::size_t>(pc.rows_) * pc.cols_, 0);
  auto put = [&](Coord c, std::uint32_t code) {
    const Coord f = c + shift;
    pc.occ_[static_cast<std::size_t>(f.row) * pc.cols_ + f.col] = code;
  };

  const PartialCircuit& base = *r.base;
  for (const auto& [q, code] : base.cell_list()) put(q, code);
  pc.placed_ = base.placed_;
  for (auto& p : pc.placed_)
    if (p.shape >= 0) p.origin = p.origin + shift;
  pc.wires_ = base.wires_;
  for (auto& w : pc.wires_)
    for (auto& c : w.cells) c = c + shift;

  if (r.other) {
    const auto offset = static_cast<std::uint32_t>(pc.wires_.size());
    for (const auto& [q, code] : r.other->cell_list()) {
      std::uint32_t c2 = code;
      if (owner::is_wire(code)) c2 = owner::wire(owner::id(code) + static_cast<int>(offset), owner::index(code));
      put(q + r.other_shift, c2);
    }
    for (int id = 0; id < model_->size(); ++id)
      if (r.other->has(id)) pc.placed_[id] = {r.other->placed_[id].shape, r.other->placed_[id].origin + r.other_shift + shift};
    for (auto w : r.other->wires_) {
      for (auto& c : w.cells) c = c + r.other_shift + shift;
      pc.wires_.push_back(std::move(w));
    }
  }

  for (int i = 0; i < static_cast<int>(cells.size()); ++i) put(cells[i], owner::comp(r.comp, i));
  pc.placed_[r.comp] = {r.shape, r.origin + shift};
  for (const auto& w : r.wires) {
    const int wid = static_cast<int>(pc.wires_.size());
    WirePath path{w.channel, w.from, w.to, {}};
    for (int i = 0; i < static_cast<int>(w.cells.size()); ++i) {
      put(w.cells[i], owner::wire(wid, i));
      path.cells.push_back(w.cells[i] + shift);
    }
    pc.wires_.push_back(std::move(path));
  }
  pc.finish_metrics();
  return pc;
}

std::vector<std::vector<Coord>> wire_routes(Coord from, Coord to) {
  std::vector<std::vector<Coord>> out;
  const Coord starts[] = {from + Coord{-1, 0}, from + Coord{0, 1}, from + Coord{1, 0}};
  const Coord ends[] = {to + Coord{-1, 0}, to + Coord{0, -1}, to + Coord{1, 0}};
  for (Coord s : starts) {
    for (Coord e : ends) {
      if (s.col > e.col) continue;
      const int dist = std::abs(s.row - e.row) + (e.col - s.col);
      if (dist % 2 == 0) continue;
      std::vector<int> bends{s.col};
      if (e.col != s.col && s.row != e.row) bends.push_back(e.col);
      for (int bend : bends) {
        std::vector<Coord> path;
        for (int c = s.col; c <= bend; ++c) path.push_back({s.row, c});
        const int step = e.row > s.row ? 1 : -1;
        for (int row = s.row; row != e.row;) {
          row += step;
          path.push_back({row, bend});
        }
        for (int c = bend + 1; c <= e.col; ++c) path.push_back({e.row, c});
        const bool clear =
            std::find(path.begin(), path.end(), from) == path.end() && std::find(path.begin(), path.end(), to) == path.end();
        if (clear) out.push_back(std::move(path));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<AnchorPoint> anchor_points(const PartialCircuit& pc, int comp) {
  const Component& c = pc.model().component(comp);
  std::vector<AnchorPoint> out;
  const std::pair<Coord, Direction> dirs[] = {
      {{-1, 0}, Direction::Up}, {{0, 1}, Direction::Right}, {{1, 0}, Direction::Down}};
  for (int k = 0; k < static_cast<int>(c.out_points.size()); ++k) {
    const Coord o = pc.cell_position(comp, c.out_points[k]);
    for (auto [d, dir] : dirs) {
      const Coord a = o + d;
      if (pc.occupied(a)) continue;
      if (c.partner >= 0 && !adjacent(a, pc.cell_position(comp, c.partner))) continue;
      out.push_back({a, dir, k});
    }
  }
  return out;
}

std::vector<std::pair<AnchorPoint, AnchorPoint>> anchor_pairs(const PartialCircuit& pc, int comp) {
  std::vector<std::pair<AnchorPoint, AnchorPoint>> out;
  const auto all = anchor_points(pc, comp);
  for (const auto& a : all)
    for (const auto& b : all)
      if (a.slot == 0 && b.slot == 1) out.push_back({a, b});
  return out;
}

std::optional<PartialCircuit> integrate(const PartialCircuit& pc, int comp, int shape, int in_slot,
                                        std::optional<AnchorPoint> anchor, int cluster_width) {
  const ComponentModel& m = pc.model();
  const Component& C = m.component(comp);
  const auto& sh = m.shapes(comp).at(shape);
  Recipe r;
  r.base = &pc;
  r.comp = comp;
  r.shape = shape;
  if (anchor) {
    r.origin = anchor->at - sh[C.in_points.at(in_slot)];
  } else if (!pc.empty()) {
    throw std::invalid_argument("root placement needs an empty circuit");
  }
  for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k) {
    const Relation par = m.parent(comp, k);
    if (k != in_slot && par && pc.has(par.comp)) r.pending |= 1u << k;
  }
  CandidateBuilder b(m, cluster_width);
  if (!b.evaluate(r).valid) return std::nullopt;
  return b.materialize(r);
}

std::optional<PartialCircuit> combine(const PartialCircuit& pc1, const PartialCircuit& pc2, int comp, int shape,
                                      const AnchorPoint& a1, const AnchorPoint& a2, int cluster_width) {
  const ComponentModel& m = pc1.model();
  const Component& C = m.component(comp);
  if (pc2.empty()) {
    for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k) {
      const Relation par = m.parent(comp, k);
      if (par && pc1.has(par.comp)) return integrate(pc1, comp, shape, k, a1, cluster_width);
    }
    return std::nullopt;
  }
  int k1 = -1, k2 = -1;
  for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k) {
    const Relation par = m.parent(comp, k);
    if (!par) continue;
    if (pc1.has(par.comp)) k1 = k;
    if (pc2.has(par.comp)) k2 = k;
  }
  if (k1 < 0 || k2 < 0 || k1 == k2) throw std::invalid_argument("combine needs one parent in each circuit");
  const auto& sh = m.shapes(comp).at(shape);
  Recipe r;
  r.base = &pc1;
  r.other = &pc2;
  r.comp = comp;
  r.shape = shape;
  r.origin = a1.at - sh[C.in_points[k1]];
  r.other_shift = (r.origin + sh[C.in_points[k2]]) - a2.at;
  CandidateBuilder b(m, cluster_width);
  if (!b.evaluate(r).valid) return std::nullopt;
  return b.materialize(r);
}

std::optional<PartialCircuit> insert_wire(const PartialCircuit& pc, int child, int cluster_width) {
  const ComponentModel& m = pc.model();
  const Component& C = m.component(child);
  if (!pc.has(child)) throw std::invalid_argument("child is not placed");
  PartialCircuit current = pc;
  for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k) {
    const Relation par = m.parent(child, k);
    if (!par || !current.has(par.comp) || current.wire_between(par.comp, child)) continue;
    const Component& P = m.component(par.comp);
    const Coord out = current.cell_position(par.comp, P.out_points[par.slot]);
    const Coord in = current.cell_position(child, C.in_points[k]);
    if (adjacent(out, in)) continue;
    if (P.partner >= 0) return std::nullopt;

    std::vector<std::pair<int, PlacedComponent>> comps;
    for (int id : current.placed_ids()) comps.push_back({id, current.placement(id)});
    bool done = false;
    for (auto& route : wire_routes(out, in)) {
      auto wires = current.wires();
      wires.push_back({C.channels[k], par.comp, child, route});
      PartialCircuit cand = PartialCircuit::assemble(m, comps, wires);
      if (validate_grid(cand, cluster_width).ok()) {
        current = std::move(cand);
        done = true;
        break;
      }
    }
    if (!done) return std::nullopt;
  }
  return current;
}

}  // namespace mbqc
