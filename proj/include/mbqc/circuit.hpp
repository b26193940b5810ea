#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbqc {

enum class GateKind { H, RotXZX, CNOT, CPSwap };

// One gate of the supported set. Rotation angles are (alpha, beta, gamma);
// CPSwap keeps its phase in angles[0].
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  std::array<double, 3> angles{};

  static Gate h(int q) { return {GateKind::H, q, -1, {}}; }
  static Gate rot(int q, double a, double b, double g) { return {GateKind::RotXZX, q, -1, {a, b, g}}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target, {}}; }
  static Gate cpswap(int control, int target, double phi) {
    return {GateKind::CPSwap, control, target, {phi, 0.0, 0.0}};
  }

  bool two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::CPSwap; }
  double phi() const { return angles[0]; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct GateCircuit {
  int num_qubits = 1;
  std::vector<Gate> gates;

  friend bool operator==(const GateCircuit&, const GateCircuit&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Throws std::invalid_argument when a gate is malformed for the circuit.
void check_gate(const Gate& g, int num_qubits);

GateCircuit parse_circuit(std::string_view text);
std::string render_circuit(const GateCircuit& circuit);

// Accepts decimals and pi literals such as "pi", "-pi/4", "3*pi/8".
double parse_angle(std::string_view token);

enum class Benchmark { BV, IQP, HWEA, QFT, HC };

Benchmark benchmark_from_name(std::string_view name);
std::string_view benchmark_name(Benchmark b);
GateCircuit generate_benchmark(Benchmark b, int num_qubits, std::uint64_t seed);

// ASAP layering; each layer holds indices into circuit.gates.
std::vector<std::vector<std::size_t>> layers(const GateCircuit& circuit);
std::size_t two_qubit_layer_count(const GateCircuit& circuit);

}  // namespace mbqc
