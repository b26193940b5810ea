#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "mbqc/component.hpp"

namespace mbqc {

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::TP: return "TP";
    case ComponentKind::TX: return "TX";
    case ComponentKind::S: return "S";
    case ComponentKind::Wire: return "Wire";
  }
  return "?";
}

int Component::in_slot(int cell) const {
  for (std::size_t k = 0; k < in_points.size(); ++k)
    if (in_points[k] == cell) return static_cast<int>(k);
  return -1;
}

int Component::out_slot(int cell) const {
  for (std::size_t k = 0; k < out_points.size(); ++k)
    if (out_points[k] == cell) return static_cast<int>(k);
  return -1;
}

std::vector<DagEdge> ComponentDag::parents(int node) const {
  std::vector<DagEdge> out;
  for (const auto& e : edges)
    if (e.child == node) out.push_back(e);
  return out;
}

std::vector<DagEdge> ComponentDag::children(int node) const {
  std::vector<DagEdge> out;
  for (const auto& e : edges)
    if (e.parent == node) out.push_back(e);
  return out;
}

namespace {

[[noreturn]] void malformed(Coord c, const std::string& why) {
  throw std::invalid_argument("cannot partition cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                              "): " + why);
}

struct ChannelPos {
  int channel;
  int index;
};

}  // namespace

Extraction extract_components(const MbqcGrid& grid) {
  std::map<Coord, ChannelPos> on_channel;
  for (int ch = 0; ch < static_cast<int>(grid.channels.size()); ++ch) {
    const auto& cells = grid.channels[ch];
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
      if (!on_channel.emplace(cells[i], ChannelPos{ch, i}).second) malformed(cells[i], "shared by two channels");
      if (!grid.occupied(cells[i])) malformed(cells[i], "channel cell is measured in Z");
    }
  }

  // Coupler cells are the non-channel cells; group them by adjacency.
  std::set<Coord> couplers;
  for (const auto& [c, cell] : grid.cells)
    if (!on_channel.count(c)) couplers.insert(c);

  std::vector<Component> comps;
  // Channel cell -> index of the coupler component that owns it.
  std::map<Coord, int> owned;
  std::set<Coord> pinned;

  std::set<Coord> seen;
  for (Coord start : couplers) {
    if (seen.count(start)) continue;
    std::vector<Coord> group{start};
    seen.insert(start);
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (Coord d : kNeighbours) {
        Coord nb = group[i] + d;
        if (couplers.count(nb) && seen.insert(nb).second) group.push_back(nb);
      }
    }
    std::sort(group.begin(), group.end(), [](Coord a, Coord b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
    const Coord entry = group.front();
    const Coord up = entry + Coord{-1, 0}, down = entry + Coord{1, 0};
    if (!on_channel.count(up) || !on_channel.count(down)) malformed(entry, "coupler is not between two channels");

    Component c;
    c.pinned = false;
    if (group.size() == 1 && grid.at(entry).basis == Basis::Y) {
      c.kind = ComponentKind::TX;
      c.cells = {{grid.at(up), on_channel[up].channel, up},
                 {grid.at(entry), -1, entry},
                 {grid.at(down), on_channel[down].channel, down}};
      c.in_points = c.out_points = {0, 2};
      c.edges = {{0, 1}, {1, 2}};
    } else if (group.size() == 2 && grid.at(entry).basis == Basis::X && group[1] == entry + Coord{0, 1} &&
               grid.at(group[1]).basis == Basis::Theta) {
      c.kind = ComponentKind::TP;
      c.cells = {{grid.at(up), on_channel[up].channel, up},
                 {grid.at(entry), -1, entry},
                 {grid.at(group[1]), -1, group[1]},
                 {grid.at(down), on_channel[down].channel, down}};
      c.in_points = c.out_points = {0, 3};
      c.edges = {{0, 1}, {1, 3}, {1, 2}};
      c.partner = 2;
      for (Coord line : {up, down}) {
        const auto& pos = on_channel[line];
        const auto& chan = grid.channels[pos.channel];
        if (pos.index + 1 >= static_cast<int>(chan.size())) malformed(line, "coupler at the end of a channel");
        const Coord next = chan[pos.index + 1];
        if (!adjacent(next, group[1])) malformed(next, "line successor does not touch the coupler");
        pinned.insert(next);
      }
      if (c.cells[0].m.basis != Basis::Theta || c.cells[3].m.basis != Basis::Theta)
        malformed(entry, "two-line phase coupler needs theta cells on both lines");
    } else {
      malformed(entry, "unrecognised coupler shape");
    }
    c.channels = {c.cells[0].channel, c.cells[2 + (c.kind == ComponentKind::TP)].channel};
    for (int k : c.in_points) {
      if (owned.count(c.cells[k].home)) malformed(c.cells[k].home, "channel cell claimed by two couplers");
      owned[c.cells[k].home] = static_cast<int>(comps.size());
    }
    comps.push_back(std::move(c));
  }

  Extraction ex;
  ex.channel_components.resize(grid.channels.size());
  // Per channel, the sequence of component indices (pre-renumbering).
  std::vector<std::vector<int>> chain(grid.channels.size());

  for (int ch = 0; ch < static_cast<int>(grid.channels.size()); ++ch) {
    const auto& cells = grid.channels[ch];
    if (cells.empty()) continue;
    if (grid.at(cells.back()).basis != Basis::Readout) malformed(cells.back(), "channel does not end in a readout");
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      Basis b = grid.at(cells[i]).basis;
      if (b == Basis::Readout) malformed(cells[i], "readout before the end of a channel");
    }

    auto emit_s = [&](int from, int to) {  // [from, to)
      if (from >= to) return;
      Component s;
      s.kind = ComponentKind::S;
      for (int i = from; i < to; ++i) s.cells.push_back({grid.at(cells[i]), ch, cells[i]});
      s.in_points = {0};
      s.out_points = {to - from - 1};
      s.channels = {ch};
      for (int i = 0; i + 1 < to - from; ++i) s.edges.push_back({i, i + 1});
      s.pinned = pinned.count(cells[from]) != 0;
      chain[ch].push_back(static_cast<int>(comps.size()));
      comps.push_back(std::move(s));
    };

    const int last = static_cast<int>(cells.size()) - 1;
    int i = 0;
    while (i < last) {
      if (auto it = owned.find(cells[i]); it != owned.end()) {
        chain[ch].push_back(it->second);
        ++i;
        continue;
      }
      int end = i;
      while (end < last && !owned.count(cells[end])) ++end;
      // Segment [i, end): strip wire-eligible X runs.
      int piece = i;
      int j = i;
      while (j < end) {
        const bool eligible = grid.at(cells[j]).basis == Basis::X && !pinned.count(cells[j]);
        if (!eligible) {
          ++j;
          continue;
        }
        int k = j;
        while (k < end && grid.at(cells[k]).basis == Basis::X && !pinned.count(cells[k])) ++k;
        const int len = k - j;
        if (len >= 2) {
          const int wire_len = len - len % 2;
          int w0 = j;
          if (len % 2 == 1 && j != i) w0 = j + 1;
          emit_s(piece, w0);
          WireSpan w{ch, {}};
          for (int t = w0; t < w0 + wire_len; ++t) w.cells.push_back(cells[t]);
          ex.wires.push_back(std::move(w));
          piece = w0 + wire_len;
        }
        j = k;
      }
      emit_s(piece, end);
      i = end;
    }
    emit_s(last, last + 1);
  }

  // Number components by their first line cell, column then row.
  auto key = [&](const Component& c) {
    const Coord h = c.cells[c.in_points[0]].home;
    return std::pair{h.col, h.row};
  };
  std::vector<int> order(comps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(comps[a]) < key(comps[b]); });
  std::vector<int> renum(comps.size());
  for (std::size_t n = 0; n < order.size(); ++n) renum[order[n]] = static_cast<int>(n);
  for (std::size_t n = 0; n < order.size(); ++n) {
    ex.components.push_back(comps[order[n]]);
    ex.components.back().id = static_cast<int>(n);
  }

  ex.dag.num_nodes = static_cast<int>(ex.components.size());
  for (std::size_t ch = 0; ch < chain.size(); ++ch) {
    for (int c : chain[ch]) ex.channel_components[ch].push_back(renum[c]);
    const auto& seq = ex.channel_components[ch];
    for (std::size_t i = 1; i < seq.size(); ++i)
      ex.dag.edges.push_back({seq[i - 1], seq[i], static_cast<int>(ch)});
  }
  return ex;
}

}  // namespace mbqc
