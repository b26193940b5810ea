#include <algorithm>
#include <stdexcept>

#include "mbqc/candidate.hpp"
#include "mbqc/placement.hpp"

namespace mbqc {

namespace chash {

namespace {
constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kRowBase = 0x1f3a5c7e9b2d4861ull % kMod;
constexpr std::uint64_t kColBase = 0x6c8e2a4f1b3d5979ull % kMod;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct Powers {
  std::vector<std::uint64_t> row, col;
  Powers() {
    const int n = 1 << 14;
    row.resize(n);
    col.resize(n);
    row[0] = col[0] = 1;
    for (int i = 1; i < n; ++i) {
      row[i] = mul(row[i - 1], kRowBase);
      col[i] = mul(col[i - 1], kColBase);
    }
  }
};

const Powers& powers() {
  static const Powers p;
  return p;
}

std::uint64_t slow_pow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}
}  // namespace

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kMod);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t row_pow(int k) {
  const auto& p = powers();
  return k < static_cast<int>(p.row.size()) ? p.row[k] : slow_pow(kRowBase, k);
}

std::uint64_t col_pow(int k) {
  const auto& p = powers();
  return k < static_cast<int>(p.col.size()) ? p.col[k] : slow_pow(kColBase, k);
}

std::uint64_t comp_value(int comp, int idx) {
  return splitmix((static_cast<std::uint64_t>(comp) << 20) ^ static_cast<std::uint64_t>(idx)) % kMod;
}

std::uint64_t wire_value(int from, int to, int idx) {
  return splitmix((std::uint64_t{1} << 62) ^ (static_cast<std::uint64_t>(from) << 40) ^
                  (static_cast<std::uint64_t>(to) << 20) ^ static_cast<std::uint64_t>(idx)) %
         kMod;
}

}  // namespace chash

const char* constraint_name(Constraint c) {
  switch (c) {
    case Constraint::Overlap: return "overlap";
    case Constraint::I: return "I";
    case Constraint::II: return "II";
    case Constraint::III: return "III";
    case Constraint::IV: return "IV";
  }
  return "?";
}

PartialCircuit::PartialCircuit(const ComponentModel& model)
    : model_(&model), placed_(static_cast<std::size_t>(model.size())) {}

Coord PartialCircuit::cell_position(int comp, int cell) const {
  const auto& p = placed_[comp];
  return p.origin + model_->shapes(comp)[p.shape][cell];
}

std::vector<int> PartialCircuit::placed_ids() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(placed_.size()); ++i)
    if (placed_[i].shape >= 0) out.push_back(i);
  return out;
}

const WirePath* PartialCircuit::wire_between(int from, int to) const {
  for (const auto& w : wires_)
    if (w.from == from && w.to == to) return &w;
  return nullptr;
}

int PartialCircuit::leftmost(int row) const {
  for (int c = 0; c < cols_; ++c)
    if (occ_[static_cast<std::size_t>(row) * cols_ + c]) return c;
  return -1;
}

std::vector<Coord> PartialCircuit::occupied_cells() const {
  std::vector<Coord> out;
  for (const auto& [c, code] : cells_) out.push_back(c);
  return out;
}

void PartialCircuit::finish_metrics() {
  right_.assign(static_cast<std::size_t>(rows_), -1);
  cells_.clear();
  hash_ = 0;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const std::uint32_t code = occ_[static_cast<std::size_t>(r) * cols_ + c];
      if (!code) continue;
      right_[r] = c;
      cells_.push_back({{r, c}, code});
      std::uint64_t v;
      if (owner::is_wire(code)) {
        const auto& w = wires_[owner::id(code)];
        v = chash::wire_value(w.from, w.to, owner::index(code));
      } else {
        v = chash::comp_value(owner::id(code), owner::index(code));
      }
      hash_ = chash::add(hash_, chash::term(v, r, c));
    }
  }
  space_ = 0;
  for (int r = 0; r < rows_; ++r)
    if (right_[r] >= 0) space_ += cols_ - 1 - right_[r];
}

PartialCircuit PartialCircuit::assemble(const ComponentModel& model,
                                        const std::vector<std::pair<int, PlacedComponent>>& comps,
                                        const std::vector<WirePath>& wires) {
  PartialCircuit pc(model);
  std::vector<std::pair<Coord, std::uint32_t>> cells;
  for (const auto& [id, p] : comps) {
    pc.placed_[id] = p;
    const auto& shape = model.shapes(id).at(p.shape);
    for (int i = 0; i < static_cast<int>(shape.size()); ++i) cells.push_back({p.origin + shape[i], owner::comp(id, i)});
  }
  pc.wires_ = wires;
  for (int w = 0; w < static_cast<int>(wires.size()); ++w)
    for (int i = 0; i < static_cast<int>(wires[w].cells.size()); ++i)
      cells.push_back({wires[w].cells[i], owner::wire(w, i)});
  if (cells.empty()) return pc;

  int r0 = cells[0].first.row, r1 = r0, c0 = cells[0].first.col, c1 = c0;
  for (const auto& [c, code] : cells) {
    r0 = std::min(r0, c.row), r1 = std::max(r1, c.row);
    c0 = std::min(c0, c.col), c1 = std::max(c1, c.col);
  }
  const Coord shift{-r0, -c0};
  pc.rows_ = r1 - r0 + 1;
  pc.cols_ = c1 - c0 + 1;
  pc.occ_.assign(static_cast<std::size_t>(pc.rows_) * pc.cols_, 0);
  for (const auto& [c, code] : cells) {
    const Coord f = c + shift;
    auto& slot = pc.occ_[static_cast<std::size_t>(f.row) * pc.cols_ + f.col];
    if (slot) pc.overlap_ = true;
    slot = code;
  }
  for (auto& p : pc.placed_)
    if (p.shape >= 0) p.origin = p.origin + shift;
  for (auto& w : pc.wires_)
    for (auto& c : w.cells) c = c + shift;
  pc.finish_metrics();
  return pc;
}

MbqcGrid PartialCircuit::to_grid(int cluster_width, int round, Coord offset) const {
  MbqcGrid g;
  g.width = cluster_width;
  g.num_qubits = model_->num_channels();
  g.rounds = 1;
  for (int id = 0; id < model_->size(); ++id) {
    if (!has(id)) continue;
    const Component& c = model_->component(id);
    for (int i = 0; i < c.size(); ++i) g.set(cell_position(id, i) + offset, c.cells[i].m, id, round);
  }
  for (const auto& w : wires_)
    for (Coord c : w.cells) g.set(c + offset, Measurement::x(), -1, round);

  g.channels.resize(static_cast<std::size_t>(model_->num_channels()));
  for (int ch = 0; ch < model_->num_channels(); ++ch) {
    auto& out = g.channels[ch];
    for (int id : model_->channel_components(ch)) {
      if (!has(id)) continue;
      const Component& c = model_->component(id);
      const int slot = static_cast<int>(std::find(c.channels.begin(), c.channels.end(), ch) - c.channels.begin());
      if (auto parent = model_->parent(id, slot)) {
        if (const WirePath* w = wire_between(parent.comp, id))
          for (Coord x : w->cells) out.push_back(x + offset);
      }
      if (c.kind == ComponentKind::S) {
        for (int i = 0; i < c.size(); ++i) out.push_back(cell_position(id, i) + offset);
      } else {
        out.push_back(cell_position(id, c.in_points[slot]) + offset);
      }
    }
  }

  for (int id = 0; id < model_->size(); ++id) {
    if (!has(id)) continue;
    const Component& c = model_->component(id);
    if (c.kind == ComponentKind::S) continue;
    for (auto [a, b] : c.edges) g.links.push_back({cell_position(id, a) + offset, cell_position(id, b) + offset});
    if (c.partner >= 0) {
      for (int k = 0; k < static_cast<int>(c.out_points.size()); ++k) {
        auto child = model_->child(id, k);
        if (child && has(child.comp)) {
          const int in = model_->component(child.comp).in_points[child.slot];
          g.links.push_back({cell_position(id, c.partner) + offset, cell_position(child.comp, in) + offset});
        }
      }
    }
  }
  return g;
}

int space_of(const PartialCircuit& pc) { return pc.space(); }

}  // namespace mbqc
