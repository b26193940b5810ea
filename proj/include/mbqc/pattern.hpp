#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mbqc/circuit.hpp"
#include "mbqc/geometry.hpp"

namespace mbqc {

enum class Basis : unsigned char { Z, X, Y, Theta, Readout };

// Theta(a) projects onto (|0> + e^{-ia}|1>)/sqrt2, so X is Theta(0) and Y is
// Theta(-pi/2). The angle is ignored for every other basis.
struct Measurement {
  Basis basis = Basis::Z;
  double angle = 0.0;

  static Measurement x() { return {Basis::X, 0.0}; }
  static Measurement y() { return {Basis::Y, 0.0}; }
  static Measurement z() { return {Basis::Z, 0.0}; }
  static Measurement theta(double a) { return {Basis::Theta, a}; }
  static Measurement readout() { return {Basis::Readout, 0.0}; }

  friend bool operator==(const Measurement& a, const Measurement& b) {
    return a.basis == b.basis && (a.basis != Basis::Theta || a.angle == b.angle);
  }
};

char basis_letter(Basis b);
std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

struct PatternCell {
  Coord offset;
  Measurement m;
};

// A gate pattern. Output cells carry Readout as a placeholder: in a lowered
// grid they become the first cell of the next pattern on that line.
struct Pattern {
  GateKind kind = GateKind::H;
  std::vector<PatternCell> cells;
  std::vector<Coord> in_points;
  std::vector<Coord> out_points;

  int rows() const;
  int cols() const;
  const PatternCell* find(Coord c) const;
};

// Two-qubit patterns put the control on row 0 and the target on row 2.
Pattern pattern_for(const Gate& g);
Pattern wire_pattern(int x_count);
// Flip a three-row pattern upside down (control ends up on row 2).
Pattern mirrored(const Pattern& p);

using Amplitudes = std::vector<std::complex<double>>;

// Entangles the pattern's cells as a graph state, projects every non-output
// cell onto its +1 eigenstate and returns the normalised output state. Qubit
// 0 of the input is in_points[0] and is the most significant bit.
Amplitudes simulate_pattern_postselected(const Pattern& p, const Amplitudes& input);

// Dense unitary of a gate acting on (q0, q1) with q0 most significant.
std::vector<std::vector<std::complex<double>>> gate_unitary(const Gate& g);

double fidelity(const Amplitudes& a, const Amplitudes& b);

}  // namespace mbqc
