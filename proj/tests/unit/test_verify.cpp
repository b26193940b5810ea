#include <algorithm>

#include "doctest.h"
#include "layouts.hpp"
#include "mbqc/compiler.hpp"
#include "mbqc/verify.hpp"

using namespace mbqc;

namespace {

MbqcGrid line_grid(int width, const std::vector<std::pair<Coord, Measurement>>& cells) {
  MbqcGrid g;
  g.width = width;
  g.num_qubits = 1;
  g.channels.emplace_back();
  for (const auto& [c, m] : cells) {
    g.set(c, m);
    g.channels[0].push_back(c);
  }
  return g;
}

bool has(const std::vector<AuditViolation>& v, const std::string& constraint) {
  for (const auto& x : v)
    if (x.constraint == constraint) return true;
  return false;
}

}  // namespace

TEST_CASE("a grid is equivalent to itself and to its compilation") {
  const auto c = generate_benchmark(Benchmark::QFT, 3, 0);
  const MbqcGrid base = lower_baseline(c);
  CHECK(check_equivalence(base, base).overall);
  CompileConfig cfg;
  cfg.cluster_width = 7;
  const auto r = compile(c, cfg);
  const auto rep = check_equivalence(base, r.grid);
  CHECK(rep.overall);
  CHECK(rep.channels.size() == 3);
}

TEST_CASE("a perturbed angle is pinned to its channel") {
  const auto c = generate_benchmark(Benchmark::HWEA, 3, 2);
  CompileConfig cfg;
  cfg.cluster_width = 7;
  MbqcGrid g = compile(c, cfg).grid;
  int channel = -1;
  for (int ch = 0; ch < 3 && channel < 0; ++ch) {
    for (Coord at : g.channels[ch]) {
      auto& cell = g.cells.at(at);
      if (cell.m.basis == Basis::Theta) {
        cell.m.angle += 1e-3;
        channel = ch;
        break;
      }
    }
  }
  REQUIRE(channel >= 0);
  const auto rep = check_equivalence(lower_baseline(c), g);
  CHECK_FALSE(rep.overall);
  CHECK(rep.mismatched() == std::vector<int>{channel});
}

TEST_CASE("wires of any even length compare equal") {
  const auto plain = line_grid(1, {{{0, 0}, Measurement::x()}, {{0, 1}, Measurement::y()}, {{0, 2}, Measurement::readout()}});
  const auto wired = line_grid(1, {{{0, 0}, Measurement::x()},
                                   {{0, 1}, Measurement::x()},
                                   {{0, 2}, Measurement::x()},
                                   {{0, 3}, Measurement::y()},
                                   {{0, 4}, Measurement::readout()}});
  CHECK(check_equivalence(plain, wired).overall);
  // An odd extra run changes the computation.
  const auto odd = line_grid(1, {{{0, 0}, Measurement::x()},
                                 {{0, 1}, Measurement::x()},
                                 {{0, 2}, Measurement::y()},
                                 {{0, 3}, Measurement::readout()}});
  CHECK_FALSE(check_equivalence(plain, odd).overall);
}

TEST_CASE("channels that step back a column are reported") {
  auto g = line_grid(3, {{{0, 1}, Measurement::x()}, {{1, 1}, Measurement::y()}, {{1, 0}, Measurement::readout()}});
  const auto rep = check_equivalence(g, g);
  CHECK(rep.order_violations.size() == 1);
  CHECK_FALSE(rep.overall);
}

TEST_CASE("photon utilization") {
  MbqcGrid empty;
  empty.width = 4;
  CHECK(photon_utilization(empty) == 0.0);
  // A full 2x2 block, readouts included.
  MbqcGrid full;
  full.width = 2;
  full.set({0, 0}, Measurement::x());
  full.set({0, 1}, Measurement::readout());
  full.set({1, 0}, Measurement::theta(0.3));
  full.set({1, 1}, Measurement::y());
  CHECK(photon_utilization(full) == 1.0);
  full.width = 4;
  CHECK(photon_utilization(full) == 0.5);

  const auto c = generate_benchmark(Benchmark::BV, 4, 0);
  CompileConfig cfg;
  cfg.cluster_width = cluster_width_for(4, 1.25);
  const auto r = compile(c, cfg);
  const auto m = metrics(lower_baseline(c), r.grid);
  CHECK(m.width == cfg.cluster_width);
  CHECK(m.reduction_ratio == doctest::Approx(1.0 - double(r.depth()) / m.baseline_depth));
  CHECK(m.photon_utilization_compiled > m.photon_utilization_baseline);
  CHECK(m.photon_utilization_compiled <= 1.0);
}

TEST_CASE("audit flags hand-built constraint violations") {
  // A channel that jumps over a Z photon.
  const auto gap = line_grid(1, {{{0, 0}, Measurement::x()},
                                 {{0, 1}, Measurement::y()},
                                 {{0, 3}, Measurement::y()},
                                 {{0, 4}, Measurement::readout()}});
  CHECK(has(audit(gap, 1), "I"));

  // Two lines whose Y photons touch.
  MbqcGrid touch;
  touch.width = 2;
  touch.channels.resize(2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 3; ++c) {
      touch.set({r, c}, c == 2 ? Measurement::readout() : Measurement::y());
      touch.channels[r].push_back({r, c});
    }
  }
  const auto v = audit(touch, 2);
  CHECK(has(v, "II"));
  CHECK_FALSE(has(v, "I"));

  // The same lines one Z row apart are fine until the cluster is too narrow.
  MbqcGrid apart = touch;
  apart.cells.clear();
  for (auto& ch : apart.channels)
    for (auto& at : ch) at.row *= 2;
  for (const auto& ch : apart.channels)
    for (Coord at : ch) apart.set(at, at.col == 2 ? Measurement::readout() : Measurement::y());
  apart.width = 3;
  CHECK(audit(apart, 3).empty());
  CHECK(has(audit(apart, 2), "IV"));

  // Touching photons of different rounds.
  MbqcGrid rounds = line_grid(2, {{{0, 0}, Measurement::readout()}});
  rounds.channels.push_back({{0, 1}});
  rounds.set({0, 1}, Measurement::readout(), -1, 1);
  CHECK(has(audit(rounds, 2), "II"));
}

TEST_CASE("baselines and compiled grids audit clean") {
  for (auto b : {Benchmark::BV, Benchmark::QFT, Benchmark::IQP, Benchmark::HWEA, Benchmark::HC}) {
    const auto c = generate_benchmark(b, 4, 1);
    CHECK(audit(lower_baseline(c), 7).empty());
    CompileConfig cfg;
    cfg.cluster_width = cluster_width_for(4, 1.5);
    CHECK(audit(compile(c, cfg).grid, cfg.cluster_width).empty());
  }
}

TEST_CASE("audit and validate_grid agree on 1000 layouts") {
  int cases = 0, valid = 0;
  const int overlapping = testsupport::random_layouts(2024, 1000, [&](const PartialCircuit& pc, int width) {
    ++cases;
    const bool ok = validate_grid(pc, width).ok();
    valid += ok;
    CAPTURE(cases);
    CHECK(ok == audit(pc.to_grid(std::max(width, pc.width())), width).empty());
  });
  MESSAGE("valid " << valid << " of " << cases << ", skipped " << overlapping << " overlapping");
  CHECK(valid > 200);
  CHECK(cases - valid > 200);
}
