#include <algorithm>
#include <chrono>
#include <climits>
#include <unordered_set>

#include "search.hpp"

namespace mbqc {

namespace {

using detail::Assembly;

// Occupied extent of a one-round layout per row.
struct Profile {
  std::vector<int> left, right;
};

Profile profile_of(const Assembly& a) {
  Profile p{std::vector<int>(a.width, INT_MAX), std::vector<int>(a.width, -1)};
  for (const auto& part : a.parts) {
    for (const auto& [c, code] : part.pc->cell_list()) {
      const Coord q = c + part.offset;
      p.left[q.row] = std::min(p.left[q.row], q.col);
      p.right[q.row] = std::max(p.right[q.row], q.col);
    }
  }
  return p;
}

struct RoundState {
  std::vector<int> right;
  int depth = 0;
  int space = 0;
  std::uint64_t hash = 0;
  int parent = -1;
  int layout = -1;
  Coord offset;
};

void finish_state(RoundState& s) {
  s.space = 0;
  s.hash = 1469598103934665603ull;
  for (int x : s.right) {
    if (x >= 0) s.space += s.depth - 1 - x;
    s.hash = (s.hash ^ static_cast<std::uint64_t>(x + 1)) * 1099511628211ull;
  }
  s.hash = (s.hash ^ static_cast<std::uint64_t>(s.depth)) * 1099511628211ull;
}

}  // namespace

CompileResult compile_multiround(const GateCircuit& circuit, const CompileConfig& cfg) {
  if (cfg.rounds == 1) return compile(circuit, cfg);
  const auto t0 = std::chrono::steady_clock::now();
  detail::check_config(circuit, cfg);
  const int W = cfg.cluster_width;
  const MbqcGrid baseline = lower_baseline(circuit);
  const ComponentModel model(baseline, detail::variant_options(cfg));
  detail::Search search(model, detail::search_options(cfg));
  search.run();

  // Every finished single-round layout is a candidate for every round.
  std::vector<Assembly> layouts;
  const auto groups = search.groups();
  if (groups.size() == 1) {
    for (const auto& pc : *groups[0]) layouts.push_back(Assembly{{{&pc, {0, 0}}}, pc.width(), pc.depth(), pc.space()});
  } else {
    layouts.push_back(detail::assemble_groups(groups, W));
  }
  std::vector<Profile> profiles;
  for (const auto& a : layouts) profiles.push_back(profile_of(a));

  // Rounds are placed left to right; a new round may start inside the
  // previous one's trailing free photons but never touches its cells.
  std::vector<RoundState> history;
  std::vector<int> frontier;
  RoundState start;
  start.right.assign(W, -1);
  history.push_back(start);
  frontier.push_back(0);
  auto better = [](const RoundState& a, const RoundState& b) {
    return detail::key_less(a.depth, a.space, a.hash, b.depth, b.space, b.hash);
  };
  for (int round = 0; round < cfg.rounds; ++round) {
    std::vector<RoundState> cands;
    for (int si : frontier) {
      for (int li = 0; li < static_cast<int>(layouts.size()); ++li) {
        const Profile& p = profiles[li];
        const int h = layouts[li].width;
        for (int v = 0; v + h <= W; ++v) {
          const RoundState& s = history[si];
          int shift = 0;
          for (int r = 0; r < h; ++r) {
            if (p.left[r] == INT_MAX) continue;
            const int row = r + v;
            // Same row: one Z photon between the rounds. Neighbouring rows:
            // no side contact, diagonal is fine.
            if (s.right[row] >= 0) shift = std::max(shift, s.right[row] + 2 - p.left[r]);
            if (row > 0 && s.right[row - 1] >= 0) shift = std::max(shift, s.right[row - 1] + 1 - p.left[r]);
            if (row + 1 < W && s.right[row + 1] >= 0) shift = std::max(shift, s.right[row + 1] + 1 - p.left[r]);
          }
          RoundState n;
          n.right = s.right;
          for (int r = 0; r < h; ++r)
            if (p.right[r] >= 0) n.right[r + v] = std::max(n.right[r + v], p.right[r] + shift);
          n.depth = std::max(s.depth, shift + layouts[li].depth);
          n.parent = si;
          n.layout = li;
          n.offset = {v, shift};
          finish_state(n);
          cands.push_back(std::move(n));
        }
      }
    }
    std::sort(cands.begin(), cands.end(), better);
    frontier.clear();
    std::unordered_set<std::uint64_t> seen;
    for (auto& c : cands) {
      if (static_cast<int>(frontier.size()) >= cfg.m) break;
      if (!seen.insert(c.hash).second) continue;
      frontier.push_back(static_cast<int>(history.size()));
      history.push_back(std::move(c));
    }
  }

  std::vector<int> chain;
  for (int i = frontier.front(); history[i].parent >= 0; i = history[i].parent) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());

  CompileResult res;
  res.grid.width = W;
  res.grid.num_qubits = model.num_channels();
  res.grid.rounds = cfg.rounds;
  for (int round = 0; round < cfg.rounds; ++round) {
    const RoundState& s = history[chain[round]];
    detail::emit_round(model, layouts[s.layout], round, s.offset, res.grid);
  }
  res.stats = search.stats();
  res.stats.baseline_depth = baseline_multiround(circuit, cfg).depth();
  res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

MbqcGrid baseline_multiround(const GateCircuit& circuit, const CompileConfig& cfg) {
  if (cfg.rounds < 1) throw std::invalid_argument("rounds must be positive");
  const MbqcGrid one = lower_baseline(circuit);
  const int width = std::max(one.width, cfg.cluster_width);
  if (cfg.rounds == 1) return pad_to_width(one, width);
  const int d = one.depth();
  MbqcGrid g;
  g.width = width;
  g.num_qubits = one.num_qubits;
  g.rounds = cfg.rounds;
  for (int k = 0; k < cfg.rounds; ++k) {
    const Coord shift{0, k * (d + 1)};
    for (const auto& [c, cell] : one.cells) g.cells[c + shift] = GridCell{cell.m, cell.component, k};
    for (const auto& ch : one.channels) {
      auto& out = g.channels.emplace_back();
      for (Coord c : ch) out.push_back(c + shift);
    }
    for (auto [a, b] : one.links) g.links.push_back({a + shift, b + shift});
  }
  return g;
}

}  // namespace mbqc
