#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "mbqc/circuit.hpp"

// Benchmark constructions. The exact gate sequences are fixed here so that
// depth numbers are reproducible; every choice is documented in README.md.

namespace mbqc {

namespace {

constexpr double kPi = std::numbers::pi;

class AngleSource {
 public:
  explicit AngleSource(std::uint64_t seed) : rng_(seed) {}
  // Uniform in [0, 2pi) from the top 53 bits, independent of the stdlib's
  // distribution implementation.
  double next() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 * 2.0 * kPi; }
  std::uint64_t bits() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

GateCircuit bv(int n, std::uint64_t seed) {
  // Ancilla in the middle line keeps the oracle's CNOT fan-in short.
  const int anc = (n - 1) / 2;
  std::vector<int> data;
  for (int d = 1; d < n; ++d) {
    if (anc - d >= 0) data.push_back(anc - d);
    if (anc + d < n) data.push_back(anc + d);
  }
  std::vector<bool> hidden(static_cast<std::size_t>(n), true);
  if (seed != 0) {
    AngleSource src(seed);
    bool any = false;
    for (int q : data) {
      hidden[q] = (src.bits() & 1u) != 0;
      any = any || hidden[q];
    }
    if (!any) hidden[data.front()] = true;
  }

  GateCircuit c{n, {}};
  for (int q = 0; q < n; ++q) {
    if (q == anc) {
      c.gates.push_back(Gate::rot(q, kPi, 0.0, 0.0));
      c.gates.push_back(Gate::h(q));
    } else {
      c.gates.push_back(Gate::h(q));
    }
  }
  for (int q : data)
    if (hidden[q]) c.gates.push_back(Gate::cnot(q, anc));
  for (int q = 0; q < n; ++q)
    if (q != anc) c.gates.push_back(Gate::h(q));
  return c;
}

GateCircuit qft(int n) {
  // Nearest-neighbour form: qubit i sits on line 0 at round i, takes its H,
  // then bubbles to the bottom through CP+SWAP gates.
  GateCircuit c{n, {}};
  for (int i = 0; i < n; ++i) {
    c.gates.push_back(Gate::h(0));
    for (int s = 1; s < n - i; ++s) c.gates.push_back(Gate::cpswap(s - 1, s, kPi / static_cast<double>(1 << s)));
  }
  return c;
}

GateCircuit iqp(int n, std::uint64_t seed) {
  // H wall, an odd-even transposition network of CP+SWAP gates (every pair
  // meets once), diagonal Z rotations, H wall.
  AngleSource src(seed);
  GateCircuit c{n, {}};
  for (int q = 0; q < n; ++q) c.gates.push_back(Gate::h(q));
  for (int layer = 0; layer < n; ++layer)
    for (int i = layer % 2; i + 1 < n; i += 2) c.gates.push_back(Gate::cpswap(i, i + 1, src.next()));
  for (int q = 0; q < n; ++q) c.gates.push_back(Gate::rot(q, 0.0, src.next(), 0.0));
  for (int q = 0; q < n; ++q) c.gates.push_back(Gate::h(q));
  return c;
}

GateCircuit hwea(int n, std::uint64_t seed) {
  AngleSource src(seed);
  GateCircuit c{n, {}};
  auto rot_wall = [&] {
    for (int q = 0; q < n; ++q) {
      double a = src.next(), b = src.next(), g = src.next();
      c.gates.push_back(Gate::rot(q, a, b, g));
    }
  };
  for (int layer = 0; layer < 2; ++layer) {
    rot_wall();
    for (int q = 0; q + 1 < n; ++q) c.gates.push_back(Gate::cnot(q, q + 1));
  }
  rot_wall();
  return c;
}

GateCircuit hc(int n, std::uint64_t seed) {
  // Half filling, then two brick rounds of a parametrised two-qubit block.
  AngleSource src(seed);
  GateCircuit c{n, {}};
  for (int q = 0; q < n / 2; ++q) c.gates.push_back(Gate::rot(q, kPi, 0.0, 0.0));
  for (int round = 0; round < 2; ++round) {
    for (int parity = 0; parity < 2; ++parity) {
      for (int i = parity; i + 1 < n; i += 2) {
        c.gates.push_back(Gate::cnot(i, i + 1));
        c.gates.push_back(Gate::rot(i + 1, 0.0, src.next(), 0.0));
        c.gates.push_back(Gate::h(i));
        c.gates.push_back(Gate::cnot(i, i + 1));
        c.gates.push_back(Gate::h(i));
      }
    }
  }
  return c;
}

}  // namespace

Benchmark benchmark_from_name(std::string_view name) {
  if (name == "bv") return Benchmark::BV;
  if (name == "iqp") return Benchmark::IQP;
  if (name == "hwea") return Benchmark::HWEA;
  if (name == "qft") return Benchmark::QFT;
  if (name == "hc") return Benchmark::HC;
  throw std::invalid_argument("unknown benchmark '" + std::string(name) + "'");
}

std::string_view benchmark_name(Benchmark b) {
  switch (b) {
    case Benchmark::BV: return "bv";
    case Benchmark::IQP: return "iqp";
    case Benchmark::HWEA: return "hwea";
    case Benchmark::QFT: return "qft";
    case Benchmark::HC: return "hc";
  }
  return "?";
}

GateCircuit generate_benchmark(Benchmark b, int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("benchmarks need at least 2 qubits");
  switch (b) {
    case Benchmark::BV: return bv(n, seed);
    case Benchmark::IQP: return iqp(n, seed);
    case Benchmark::HWEA: return hwea(n, seed);
    case Benchmark::QFT: return qft(n);
    case Benchmark::HC:
      if (n % 2 != 0) throw std::invalid_argument("hc requires an even number of qubits");
      return hc(n, seed);
  }
  throw std::invalid_argument("unknown benchmark");
}

}  // namespace mbqc
