#include <algorithm>
#include <stdexcept>

#include "mbqc/grid.hpp"

namespace mbqc {

Lowering route_to_lines(const GateCircuit& c) {
  Lowering out;
  const int n = c.num_qubits;
  std::vector<int> line_of(static_cast<std::size_t>(n)), qubit_on(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) line_of[q] = qubit_on[q] = q;
  out.line_circuit.num_qubits = n;
  auto& gates = out.line_circuit.gates;

  for (const Gate& g : c.gates) {
    check_gate(g, n);
    Gate lg = g;
    lg.q0 = line_of[g.q0];
    if (g.two_qubit()) {
      int lc = line_of[g.q0];
      const int lt = line_of[g.q1];
      while (std::abs(lt - lc) > 1) {
        const int ln = lc + (lt > lc ? 1 : -1);
        gates.push_back(Gate::cpswap(lc, ln, 0.0));
        std::swap(qubit_on[lc], qubit_on[ln]);
        line_of[qubit_on[lc]] = lc;
        line_of[qubit_on[ln]] = ln;
        lc = ln;
      }
      lg.q0 = lc;
      lg.q1 = lt;
    }
    gates.push_back(lg);
  }
  out.final_line = line_of;
  return out;
}

namespace {

class Lowerer {
 public:
  explicit Lowerer(int lines) : n_(lines), open_(lines, -1), deferred_(lines) {
    grid_.width = 2 * lines - 1;
    grid_.num_qubits = lines;
    grid_.channels.resize(lines);
  }

  void add(const Gate& g) {
    if (!g.two_qubit()) {
      if (open_[g.q0] < 0)
        deferred_[g.q0].push_back(g);
      else
        place_single(g.q0, g);
      return;
    }
    place_pair(g);
  }

  MbqcGrid finish() {
    for (int l = 0; l < n_; ++l) {
      // Lines without couplers start at column 0.
      if (open_[l] < 0) start_line(l, deferred_length(l));
      put(l, open_[l], Measurement::readout());
    }
    return std::move(grid_);
  }

 private:
  int row(int line) const { return 2 * line; }

  void put(int line, int col, Measurement m) {
    grid_.set({row(line), col}, m);
    grid_.channels[line].push_back({row(line), col});
  }

  static int length(const Gate& g) { return pattern_for(g).cols() - 1; }

  int deferred_length(int l) const {
    int len = 0;
    for (const Gate& g : deferred_[l]) len += length(g);
    return len;
  }

  void place_single(int l, const Gate& g) {
    const Pattern p = pattern_for(g);
    for (const auto& pc : p.cells) {
      if (pc.m.basis == Basis::Readout) continue;
      put(l, open_[l] + pc.offset.col, pc.m);
    }
    open_[l] += p.cols() - 1;
  }

  // Starts a line so that its deferred single-qubit gates end exactly at col.
  void start_line(int l, int col) {
    open_[l] = col - deferred_length(l);
    for (const Gate& g : deferred_[l]) place_single(l, g);
    deferred_[l].clear();
  }

  // Identity filler of k cells: XX pairs, or YYY plus pairs for odd k.
  void fill(int l, int k) {
    if (k == 1) throw std::logic_error("cannot fill a single column");
    if (k % 2 == 1) {
      for (int i = 0; i < 3; ++i) put(l, open_[l]++, Measurement::y());
      k -= 3;
    }
    for (int i = 0; i < k; ++i) put(l, open_[l]++, Measurement::x());
  }

  bool conflicts(const Pattern& p, Coord origin) const {
    for (const auto& pc : p.cells) {
      if (pc.m.basis == Basis::Readout) continue;
      for (Coord d : kNeighbours) {
        const Coord nb = pc.offset + d;
        if (p.find(nb)) continue;
        const bool channel_left = d.col == -1 && std::find(p.in_points.begin(), p.in_points.end(), pc.offset) !=
                                                     p.in_points.end();
        if (channel_left) continue;
        if (grid_.occupied(origin + nb)) return true;
      }
    }
    return false;
  }

  void place_pair(const Gate& g) {
    const int a = g.q0, b = g.q1;
    if (std::abs(a - b) != 1) throw std::logic_error("pair gate on non-neighbouring lines");
    const int top = std::min(a, b);
    Pattern p = pattern_for(g);
    if (a > b) p = mirrored(p);

    auto ready = [&](int l) { return open_[l] >= 0 ? open_[l] : deferred_length(l); };
    auto delay_ok = [&](int l, int s) { return open_[l] < 0 || s - open_[l] != 1; };
    int s = std::max(ready(a), ready(b));
    for (;;) {
      if (!delay_ok(a, s) || !delay_ok(b, s)) {
        ++s;
        continue;
      }
      // Unstarted lines may begin anywhere, so only placed cells matter.
      if (conflicts(p, {row(top), s})) {
        ++s;
        continue;
      }
      break;
    }

    for (int l : {a, b}) {
      if (open_[l] < 0)
        start_line(l, s);
      else
        fill(l, s - open_[l]);
    }

    const Coord origin{row(top), s};
    // Channel cells go in column order per line; coupler cells become links.
    for (int c = 0; c + 1 < p.cols(); ++c) {
      for (const auto& pc : p.cells) {
        if (pc.offset.col != c) continue;
        const Coord at = origin + pc.offset;
        if (pc.offset.row == 1) {
          grid_.set(at, pc.m);
        } else {
          put(top + pc.offset.row / 2, at.col, pc.m);
        }
      }
    }
    for (std::size_t i = 0; i < p.cells.size(); ++i) {
      for (std::size_t j = i + 1; j < p.cells.size(); ++j) {
        const auto& u = p.cells[i];
        const auto& v = p.cells[j];
        if (!adjacent(u.offset, v.offset)) continue;
        if (u.offset.row == v.offset.row && u.offset.row != 1) continue;
        grid_.links.push_back({origin + u.offset, origin + v.offset});
      }
    }
    open_[a] = s + p.cols() - 1;
    open_[b] = s + p.cols() - 1;
  }

  int n_;
  std::vector<int> open_;
  std::vector<std::vector<Gate>> deferred_;
  MbqcGrid grid_;
};

}  // namespace

Lowering lower_baseline_detailed(const GateCircuit& c) {
  Lowering l = route_to_lines(c);
  Lowerer low(c.num_qubits);
  for (const Gate& g : l.line_circuit.gates) low.add(g);
  l.grid = low.finish();
  return l;
}

MbqcGrid lower_baseline(const GateCircuit& c) { return lower_baseline_detailed(c).grid; }

MbqcGrid pad_to_width(const MbqcGrid& g, int target_width) {
  if (target_width < g.width)
    throw std::invalid_argument("target width " + std::to_string(target_width) + " is below grid width " +
                                std::to_string(g.width));
  MbqcGrid out = g;
  out.width = target_width;
  return out;
}

}  // namespace mbqc
