#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "mbqc/component.hpp"

namespace mbqc {

int Variant::height() const {
  int lo = 0, hi = 0;
  for (Coord c : offsets) {
    lo = std::min(lo, c.row);
    hi = std::max(hi, c.row);
  }
  return hi - lo + 1;
}

int Variant::span() const {
  int hi = 0;
  for (Coord c : offsets) hi = std::max(hi, c.col);
  return hi + 1;
}

namespace {

using Shape = std::vector<Coord>;

// Depth-first walk over monotone lattice paths. Steps are tried in the
// order right, up, down, so the straight shape is produced first.
class PathWalker {
 public:
  PathWalker(int cells, const VariantOptions& opt, std::size_t limit) : k_(cells), opt_(opt), limit_(limit) {}

  std::vector<Shape> run() {
    path_.assign(1, Coord{0, 0});
    walk(0, 0, 0);
    return std::move(out_);
  }

 private:
  bool fits(Coord p) const {
    // Self-avoiding, and touching only the cell before it.
    for (std::size_t i = 0; i + 1 < path_.size(); ++i)
      if (path_[i] == p || adjacent(path_[i], p)) return false;
    return path_.back() != p;
  }

  // last: 0 right or start, -1 up, +1 down. vertical: consecutive vertical steps.
  void walk(int last, int lo, int hi) {
    if (out_.size() >= limit_) return;
    if (static_cast<int>(path_.size()) == k_) {
      out_.push_back(path_);
      return;
    }
    const Coord tail = path_.back();
    const Coord steps[] = {{0, 1}, {-1, 0}, {1, 0}};
    for (Coord d : steps) {
      const int dir = d.row;
      if (dir != 0 && last == -dir) continue;
      if (dir != 0 && last == dir && !opt_.tall_columns) continue;
      const Coord p = tail + d;
      const int nlo = std::min(lo, p.row), nhi = std::max(hi, p.row);
      if (nhi - nlo + 1 > opt_.max_width) continue;
      if (!fits(p)) continue;
      path_.push_back(p);
      walk(dir, nlo, nhi);
      path_.pop_back();
      if (out_.size() >= limit_) return;
    }
  }

  int k_;
  const VariantOptions& opt_;
  std::size_t limit_;
  Shape path_;
  std::vector<Shape> out_;
};

int shape_height(const Shape& s) {
  int lo = 0, hi = 0;
  for (Coord c : s) {
    lo = std::min(lo, c.row);
    hi = std::max(hi, c.row);
  }
  return hi - lo + 1;
}

// Spread a capped selection over distinct (height, end row) classes, taking
// the most compact shapes of each class first.
std::vector<Shape> select_capped(std::vector<Shape> all, std::size_t cap) {
  std::map<std::pair<int, int>, std::vector<Shape>> classes;
  for (auto& s : all) classes[{shape_height(s), s.back().row}].push_back(std::move(s));
  for (auto& [key, v] : classes)
    std::stable_sort(v.begin(), v.end(), [](const Shape& a, const Shape& b) { return a.back().col < b.back().col; });
  std::vector<Shape> out;
  for (std::size_t round = 0; out.size() < cap; ++round) {
    bool any = false;
    for (auto& [key, v] : classes) {
      if (round < v.size()) {
        out.push_back(v[round]);
        any = true;
        if (out.size() == cap) break;
      }
    }
    if (!any) break;
  }
  return out;
}

}  // namespace

std::vector<std::vector<Coord>> s_shapes(int cells, const VariantOptions& opt) {
  using Key = std::tuple<int, int, int, int, bool>;
  static std::mutex mu;
  static std::map<Key, std::vector<Shape>> cache;
  const Key key{cells, std::min(opt.max_width, cells), opt.full_enumeration_cells, opt.cap, opt.tall_columns};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  std::vector<Shape> shapes;
  if (cells <= opt.full_enumeration_cells) {
    shapes = PathWalker(cells, opt, static_cast<std::size_t>(-1)).run();
  } else {
    const std::size_t pool = std::max<std::size_t>(static_cast<std::size_t>(opt.cap) * 64, 20000);
    auto all = PathWalker(cells, opt, pool).run();
    Shape straight = all.front();
    shapes = select_capped(std::move(all), static_cast<std::size_t>(opt.cap));
    // Keep the straight shape in front.
    auto it = std::find(shapes.begin(), shapes.end(), straight);
    if (it == shapes.end()) {
      shapes.insert(shapes.begin(), straight);
      shapes.pop_back();
    } else {
      std::rotate(shapes.begin(), it, it + 1);
    }
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, shapes);
  return shapes;
}

std::vector<Variant> generate_variants(const Component& c, const VariantOptions& opt) {
  std::vector<Variant> out;
  switch (c.kind) {
    case ComponentKind::TP:
    case ComponentKind::TX: {
      const Coord o = c.cells[0].home;
      Variant base{c.id, {}}, flip{c.id, {}};
      for (const auto& cell : c.cells) {
        const Coord d = cell.home - o;
        base.offsets.push_back(d);
        flip.offsets.push_back({-d.row, d.col});
      }
      out = {base, flip};
      break;
    }
    case ComponentKind::S:
      for (auto& s : s_shapes(c.size(), opt)) out.push_back({c.id, std::move(s)});
      break;
    case ComponentKind::Wire:
      for (int len = 2; len <= opt.max_wire_length; len += 2) {
        Variant v{c.id, {}};
        for (int i = 0; i < len; ++i) v.offsets.push_back({0, i});
        out.push_back(std::move(v));
      }
      break;
  }
  return out;
}

}  // namespace mbqc
