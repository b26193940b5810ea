#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "mbqc/verify.hpp"

namespace mbqc {

namespace {

using Edge = std::pair<Coord, Coord>;

Edge edge(Coord a, Coord b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string where(Coord c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

}  // namespace

std::vector<AuditViolation> audit(const MbqcGrid& g, int cluster_width) {
  std::vector<AuditViolation> out;
  auto flag = [&](const char* constraint, Coord at, const std::string& what) {
    out.push_back({constraint, at, what + " at " + where(at)});
  };
  auto present = [&](Coord c) { return g.at(c).basis != Basis::Z; };

  // IV: every used photon must fit inside the cluster's rows.
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [c, cell] : g.cells) {
    if (cell.m.basis == Basis::Z) continue;
    lo = std::min(lo, c.row);
    hi = std::max(hi, c.row);
  }
  if (lo != INT_MAX && (lo < 0 || hi >= cluster_width || hi - lo + 1 > cluster_width))
    flag("IV", {hi, 0}, "rows " + std::to_string(lo) + ".." + std::to_string(hi) + " exceed width " +
                            std::to_string(cluster_width));

  std::set<Edge> wanted;
  std::map<Coord, int> on_channels;
  std::set<Coord> in_links;
  for (std::size_t ch = 0; ch < g.channels.size(); ++ch) {
    const auto& cells = g.channels[ch];
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Coord c = cells[i];
      if (++on_channels[c] == 2) flag("overlap", c, "photon used by two channel steps");
      if (!present(c)) flag("I", c, "channel " + std::to_string(ch) + " passes a Z photon");
      if (i == 0) continue;
      const Coord p = cells[i - 1];
      if (!adjacent(p, c)) flag("I", c, "channel " + std::to_string(ch) + " is disconnected");
      if (c.col < p.col) flag("III", c, "channel " + std::to_string(ch) + " runs backwards");
      wanted.insert(edge(p, c));
    }
  }
  for (auto [a, b] : g.links) {
    if (!present(a) || !present(b)) flag("I", present(a) ? b : a, "coupler link to a Z photon");
    if (!adjacent(a, b)) flag("I", a, "coupler link is not a cluster edge");
    wanted.insert(edge(a, b));
    in_links.insert(a);
    in_links.insert(b);
  }

  // II: two used neighbours must be joined on purpose.
  for (const auto& [c, cell] : g.cells) {
    if (cell.m.basis == Basis::Z) continue;
    if (!on_channels.count(c) && !in_links.count(c)) flag("I", c, "measurement outside every channel");
    for (Coord d : {Coord{0, 1}, Coord{1, 0}}) {
      const Coord n = c + d;
      auto it = g.cells.find(n);
      if (it == g.cells.end() || it->second.m.basis == Basis::Z) continue;
      if (it->second.round != cell.round)
        flag("II", c, "rounds " + std::to_string(cell.round) + " and " + std::to_string(it->second.round) + " touch");
      else if (!wanted.count(edge(c, n)))
        flag("II", c, "unintended entanglement with " + where(n));
    }
  }

  // Grids that label components also tell wires (label -1) apart from gate
  // cells, which allows the component-level checks below.
  const bool labelled = std::any_of(g.cells.begin(), g.cells.end(), [](const auto& kv) { return kv.second.component >= 0; });
  if (!labelled) return out;

  std::map<int, int> first_col;
  std::map<int, std::vector<Coord>> members;
  for (const auto& [c, cell] : g.cells) {
    if (cell.component < 0) continue;
    const int key = cell.component + cell.round * (1 << 20);
    members[key].push_back(c);
    auto [it, fresh] = first_col.emplace(key, c.col);
    if (!fresh) it->second = std::min(it->second, c.col);
  }
  auto key_of = [&](Coord c) {
    const GridCell& cell = g.cells.at(c);
    return cell.component < 0 ? -1 : cell.component + cell.round * (1 << 20);
  };

  for (std::size_t ch = 0; ch < g.channels.size(); ++ch) {
    const auto& cells = g.channels[ch];
    int run = 0;
    int reached = INT_MIN;
    int prev = -2;
    for (std::size_t i = 0; i <= cells.size(); ++i) {
      const int k = i < cells.size() && present(cells[i]) ? key_of(cells[i]) : -2;
      if (k == -1) {
        ++run;
        continue;
      }
      if (run % 2) flag("I", cells[i - 1], "odd wire on channel " + std::to_string(ch));
      run = 0;
      if (k == -2) break;
      // III: a gate on this channel may not start before its predecessor ends.
      if (k != prev && first_col[k] < reached)
        flag("III", cells[i], "gate starts before its predecessor on channel " + std::to_string(ch));
      reached = std::max(reached, cells[i].col);
      prev = k;
    }
  }

  // A coupler made only of Y photons is measured in a single column.
  for (const auto& [k, cells] : members) {
    if (cells.size() < 3) continue;
    bool all_y = true, linked = false;
    for (Coord c : cells) all_y = all_y && g.at(c).basis == Basis::Y;
    for (auto [a, b] : g.links) linked = linked || (key_of(a) == k && key_of(b) == k);
    if (!all_y || !linked) continue;
    for (Coord c : cells)
      if (c.col != cells.front().col) flag("III", c, "simultaneous coupler spread over columns");
  }
  return out;
}

}  // namespace mbqc
