#include <algorithm>
#include <string>

#include "mbqc/candidate.hpp"

namespace mbqc {

namespace {

std::string where(Coord c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

}  // namespace

ValidationReport validate_grid(const PartialCircuit& pc, int cluster_width) {
  ValidationReport rep;
  auto report = [&](Constraint c, Coord at, std::string what) {
    rep.violations.push_back({c, at, std::move(what) + " at " + where(at)});
    return rep;
  };
  const ComponentModel& m = pc.model();
  if (pc.has_overlap()) return report(Constraint::Overlap, {0, 0}, "two cells share a photon");

  CandidateBuilder builder(m, cluster_width);
  for (const auto& [c, code] : pc.cell_list()) {
    for (Coord d : kNeighbours) {
      const std::uint32_t other = pc.code_at(c + d);
      if (other && !builder.edge_expected(pc, code, other)) return report(Constraint::II, c, "unexpected adjacency");
    }
  }

  for (int id : pc.placed_ids()) {
    const Component& C = m.component(id);
    for (auto [a, b] : C.edges)
      if (!adjacent(pc.cell_position(id, a), pc.cell_position(id, b)))
        return report(Constraint::I, pc.cell_position(id, a), "broken component");
    for (int k = 0; k < static_cast<int>(C.in_points.size()); ++k) {
      const Relation par = m.parent(id, k);
      if (!par) continue;
      const Coord in = pc.cell_position(id, C.in_points[k]);
      if (!pc.has(par.comp)) return report(Constraint::I, in, "parent not placed");
      const Component& P = m.component(par.comp);
      const Coord out = pc.cell_position(par.comp, P.out_points[par.slot]);
      Coord last = out;
      if (const WirePath* w = pc.wire_between(par.comp, id)) {
        if (P.partner >= 0) return report(Constraint::I, in, "wire after a phase coupler");
        for (Coord q : w->cells) {
          if (!adjacent(last, q)) return report(Constraint::I, q, "disconnected wire");
          if (q.col < last.col) return report(Constraint::III, q, "wire runs backwards");
          last = q;
        }
      }
      if (!adjacent(last, in)) return report(Constraint::I, in, "disconnected channel");
      if (in.col < last.col) return report(Constraint::III, in, "channel runs backwards");
      if (P.partner >= 0 && !adjacent(in, pc.cell_position(par.comp, P.partner)))
        return report(Constraint::I, in, "coupler successor detached");
      for (int i = 0; i < C.size(); ++i)
        if (pc.cell_position(id, i).col < out.col)
          return report(Constraint::III, pc.cell_position(id, i), "child before its parent");
    }
    if (C.kind == ComponentKind::S) {
      for (int i = 1; i < C.size(); ++i)
        if (pc.cell_position(id, i).col < pc.cell_position(id, i - 1).col)
          return report(Constraint::III, pc.cell_position(id, i), "channel runs backwards");
    } else if (C.kind == ComponentKind::TX) {
      for (int i = 1; i < C.size(); ++i)
        if (pc.cell_position(id, i).col != pc.cell_position(id, 0).col)
          return report(Constraint::III, pc.cell_position(id, i), "coupler not simultaneous");
    }
  }
  for (const auto& w : pc.wires()) {
    if (w.cells.size() < 2 || w.cells.size() % 2 != 0) return report(Constraint::I, w.cells.front(), "odd wire");
    if (!pc.has(w.to) || !pc.has(w.from)) return report(Constraint::I, w.cells.front(), "dangling wire");
  }

  if (pc.width() > cluster_width) return report(Constraint::IV, {pc.width() - 1, 0}, "width exceeds cluster");
  return rep;
}

}  // namespace mbqc
