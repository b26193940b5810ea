#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mbqc/cli.hpp"

using namespace mbqc;
using namespace mbqc::cli;

namespace {

std::string temp_path(const std::string& name) { return "mbqc_cli_test_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

RunSpec bench(const std::string& name, int qubits) {
  RunSpec s;
  s.benchmark = name;
  s.qubits = qubits;
  return s;
}

}  // namespace

TEST_CASE("grid json round-trips") {
  std::vector<MbqcGrid> grids = {lower_baseline(generate_benchmark(Benchmark::QFT, 3, 0))};
  CompileConfig cfg;
  cfg.cluster_width = 7;
  cfg.rounds = 2;
  grids.push_back(compile_multiround(generate_benchmark(Benchmark::HWEA, 3, 4), cfg).grid);
  MbqcGrid odd;
  odd.width = 2;
  odd.set({0, 0}, Measurement::theta(0.1 + 1e-17));
  odd.set({1, 0}, Measurement::theta(-3.141592653589793));
  grids.push_back(odd);
  for (const auto& g : grids) {
    const MbqcGrid back = grid_from_json(grid_to_json(g));
    CHECK(back == g);
    for (const auto& [at, cell] : g.cells) CHECK(back.cells.at(at).m.angle == cell.m.angle);
    CHECK(grid_to_json(back, 2) == grid_to_json(g, 2));
  }
}

TEST_CASE("malformed grid json is rejected") {
  const std::string good = grid_to_json(lower_baseline(GateCircuit{1, {Gate::h(0)}}));
  CHECK_NOTHROW(grid_from_json(good));
  CHECK_THROWS_AS(grid_from_json("{"), FormatError);
  CHECK_THROWS_AS(grid_from_json("[]"), FormatError);
  std::string wrong_depth = good;
  wrong_depth.replace(wrong_depth.find("\"depth\":5"), 9, "\"depth\":6");
  CHECK_THROWS_AS(grid_from_json(wrong_depth), FormatError);
  std::string bad_basis = good;
  bad_basis.replace(bad_basis.find("\"X\""), 3, "\"Q\"");
  CHECK_THROWS_AS(grid_from_json(bad_basis), FormatError);
}

TEST_CASE("text and svg rendering") {
  MbqcGrid one;
  one.set({0, 0}, Measurement::readout());
  CHECK(render_text(one) == "O\n");

  const MbqcGrid base = lower_baseline(generate_benchmark(Benchmark::BV, 3, 0));
  const std::string text = render_text(base);
  std::istringstream lines(text);
  std::string line;
  for (int r = 0; r < base.width; ++r) {
    REQUIRE(std::getline(lines, line));
    CHECK(static_cast<int>(line.size()) == base.depth());
  }
  CHECK(count(render_svg(base), "<circle") == base.width * base.depth());

  MbqcGrid t;
  t.set({0, 0}, Measurement::theta(0.5));
  t.set({0, 1}, Measurement::readout());
  const std::string with_angle = render_text(t, true);
  CHECK(with_angle.rfind("TO\n\n..\n", 0) == 0);
  CHECK(with_angle.find("(0, 0) 0.5") != std::string::npos);
}

TEST_CASE("width resolution and ranges") {
  auto s = bench("bv", 5);
  CHECK(resolve_width(s, 5) == 12);
  s.width_factor = 1.5;
  CHECK(resolve_width(s, 6) == 17);
  s.width = 20;
  CHECK_THROWS_AS(resolve_width(s, 6), UsageError);
  CHECK(parse_range("2..5") == std::vector<int>{2, 3, 4, 5});
  CHECK(parse_range("7") == std::vector<int>{7});
  CHECK_THROWS_AS(parse_range("5..2"), UsageError);
  CHECK_THROWS_AS(parse_range("x"), UsageError);
  CHECK_THROWS_AS(parse_range("0..3"), UsageError);
}

TEST_CASE("run writes a grid that matches a direct compile") {
  auto s = bench("bv", 5);
  s.emit = Emit::Json;
  s.out_path = temp_path("bv5.json");
  s.report_path = temp_path("bv5.report.json");
  std::ostringstream out, err;
  REQUIRE(run(s, out, err) == 0);
  const MbqcGrid g = grid_from_json(slurp(s.out_path));
  CHECK(g.width == 12);
  CompileConfig cfg;
  cfg.cluster_width = 12;
  CHECK(g == compile(generate_benchmark(Benchmark::BV, 5, 0), cfg).grid);
  CHECK(out.str().find("audit ok") != std::string::npos);
  CHECK(slurp(s.report_path).find("\"compiled_depth\"") != std::string::npos);

  // A second identical run is byte-identical.
  const std::string first = slurp(s.out_path);
  REQUIRE(run(s, out, err) == 0);
  CHECK(slurp(s.out_path) == first);
  std::remove(s.out_path.c_str());
  std::remove(s.report_path.c_str());
}

TEST_CASE("run exit codes") {
  std::ostringstream out, err;
  const std::string path = temp_path("bad.txt");
  {
    std::ofstream f(path);
    f << "qubits 2\nh 0\ncnot 0 7\n";
  }
  RunSpec s;
  s.circuit_path = path;
  CHECK(run(s, out, err) == 2);
  CHECK(err.str().find("parse error") != std::string::npos);
  std::remove(path.c_str());

  s.circuit_path = temp_path("missing.txt");
  CHECK(run(s, out, err) == 3);

  CHECK(run(bench("hc", 5), out, err) == 2);
  CHECK(run(bench("nope", 3), out, err) == 2);
  CHECK(run(RunSpec{}, out, err) == 2);

  auto narrow = bench("bv", 3);
  narrow.width = 4;
  CHECK(run(narrow, out, err) == 2);
}

TEST_CASE("sweep rows match single runs") {
  auto s = bench("qft", 3);
  const GateCircuit c = load_circuit(s);
  const auto rows = sweep_m(c, s, {1, 4, 12});
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    auto one = s;
    one.m = row.m;
    const auto r = compile_and_check(c, one);
    CHECK(row.depth == r.metrics.compiled_depth);
    CHECK(row.reduction_ratio == r.metrics.reduction_ratio);
    CHECK(row.ok);
  }
  CHECK(rows[0].depth >= rows[2].depth);
  CHECK_THROWS_AS(sweep_m(c, s, {}), UsageError);
}

TEST_CASE("oracle comparison") {
  RunSpec s;
  const GateCircuit c{1, {Gate::h(0)}};
  s.width = 3;
  s.oracle = true;
  const auto r = compile_and_check(c, s);
  REQUIRE(r.oracle_depth);
  CHECK(*r.oracle_depth == r.metrics.compiled_depth);
}
