#include <numbers>
#include <random>

#include "doctest.h"
#include "mbqc/circuit.hpp"

using namespace mbqc;

TEST_CASE("parse transcribes gates in file order") {
  auto c = parse_circuit("qubits 2\nh 0\ncnot 0 1");
  CHECK(c.num_qubits == 2);
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0] == Gate::h(0));
  CHECK(c.gates[1] == Gate::cnot(0, 1));
}

TEST_CASE("parse accepts an empty body") {
  auto c = parse_circuit("qubits 1\n");
  CHECK(c.num_qubits == 1);
  CHECK(c.gates.empty());
}

TEST_CASE("parse rejects bad input with a line number") {
  auto line_of = [](const char* text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("qubits 2\ncnot 0 2") == 2);
  CHECK(line_of("qubits 2\n# note\nrot 0 1 x 2") == 3);
  CHECK(line_of("qubits 2\nfoo 1") == 2);
  CHECK(line_of("h 0") == 1);
  CHECK(line_of("qubits 2\ncnot 1 1") == 2);
  CHECK(line_of("qubits 2\nh") == 2);
}

TEST_CASE("angles accept pi literals") {
  CHECK(parse_angle("pi") == doctest::Approx(std::numbers::pi));
  CHECK(parse_angle("pi/4") == doctest::Approx(std::numbers::pi / 4));
  CHECK(parse_angle("-pi/2") == doctest::Approx(-std::numbers::pi / 2));
  CHECK(parse_angle("3*pi/8") == doctest::Approx(3 * std::numbers::pi / 8));
  CHECK(parse_angle("0.25") == 0.25);
  CHECK_THROWS(parse_angle("pi/0"));
  CHECK_THROWS(parse_angle("tau"));
}

TEST_CASE("comments and blank lines are ignored") {
  auto c = parse_circuit("# header\nqubits 3   # three\n\n  h 2\ncpswap 0 1 pi/2\n");
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[1].kind == GateKind::CPSwap);
  CHECK(c.gates[1].phi() == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("render then parse is the identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    GateCircuit c{static_cast<int>(2 + rng() % 4), {}};
    std::uniform_real_distribution<double> ang(-10, 10);
    for (int i = 0; i < 12; ++i) {
      int a = static_cast<int>(rng() % c.num_qubits);
      int b = static_cast<int>((a + 1 + rng() % (c.num_qubits - 1)) % c.num_qubits);
      switch (rng() % 4) {
        case 0: c.gates.push_back(Gate::h(a)); break;
        case 1: c.gates.push_back(Gate::rot(a, ang(rng), ang(rng), ang(rng))); break;
        case 2: c.gates.push_back(Gate::cnot(a, b)); break;
        default: c.gates.push_back(Gate::cpswap(a, b, ang(rng))); break;
      }
    }
    CHECK(parse_circuit(render_circuit(c)) == c);
  }
}

TEST_CASE("layers are greedy and qubit-disjoint") {
  GateCircuit a{2, {Gate::h(0), Gate::h(1)}};
  CHECK(layers(a).size() == 1);
  GateCircuit b{2, {Gate::h(0), Gate::cnot(0, 1)}};
  CHECK(layers(b).size() == 2);

  for (auto bm : {Benchmark::BV, Benchmark::IQP, Benchmark::HWEA, Benchmark::QFT, Benchmark::HC}) {
    auto c = generate_benchmark(bm, 6, 3);
    std::vector<std::size_t> order;
    for (const auto& layer : layers(c)) {
      std::vector<int> used;
      for (auto i : layer) {
        const Gate& g = c.gates[i];
        for (int q : {g.q0, g.q1}) {
          if (q < 0) continue;
          CHECK(std::find(used.begin(), used.end(), q) == used.end());
          used.push_back(q);
        }
        order.push_back(i);
      }
    }
    // Per-qubit order is preserved.
    std::vector<std::size_t> last(6, 0);
    std::vector<bool> seen(6, false);
    for (auto i : order) {
      const Gate& g = c.gates[i];
      for (int q : {g.q0, g.q1}) {
        if (q < 0) continue;
        if (seen[q]) CHECK(last[q] < i);
        seen[q] = true;
        last[q] = i;
      }
    }
    CHECK(order.size() == c.gates.size());
  }
}

TEST_CASE("bv layer structure") {
  auto bv3 = generate_benchmark(Benchmark::BV, 3, 0);
  CHECK(two_qubit_layer_count(bv3) == 2);
  auto bv5 = generate_benchmark(Benchmark::BV, 5, 0);
  CHECK(two_qubit_layer_count(bv5) == 4);
  int cnots = 0;
  for (const auto& g : bv5.gates) cnots += g.kind == GateKind::CNOT;
  CHECK(cnots == 4);
}

TEST_CASE("benchmarks are pure and validate their size") {
  for (auto bm : {Benchmark::BV, Benchmark::IQP, Benchmark::HWEA, Benchmark::QFT, Benchmark::HC}) {
    CHECK(generate_benchmark(bm, 6, 11) == generate_benchmark(bm, 6, 11));
    for (const auto& g : generate_benchmark(bm, 6, 11).gates) CHECK_NOTHROW(check_gate(g, 6));
  }
  CHECK_THROWS_AS(generate_benchmark(Benchmark::HC, 5, 0), std::invalid_argument);
  CHECK_THROWS(generate_benchmark(Benchmark::BV, 1, 0));
  CHECK(benchmark_from_name("qft") == Benchmark::QFT);
  CHECK_THROWS(benchmark_from_name("grover"));
}

TEST_CASE("bv seeds pick different hidden strings") {
  auto a = generate_benchmark(Benchmark::BV, 8, 1);
  auto b = generate_benchmark(Benchmark::BV, 8, 0);
  CHECK(a.gates.size() <= b.gates.size());
  bool differs = false;
  for (std::uint64_t s = 1; s < 6; ++s) differs = differs || !(generate_benchmark(Benchmark::BV, 8, s) == b);
  CHECK(differs);
}
