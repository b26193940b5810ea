#include "mbqc/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace mbqc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  // strtod needs a terminated buffer; angles are short.
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && std::isfinite(out);
}

bool parse_int(std::string_view s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string fmt_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

double parse_angle(std::string_view tok) {
  double v = 0.0;
  if (parse_double(tok, v)) return v;

  std::string_view s = tok;
  double sign = 1.0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    if (s[0] == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  double mult = 1.0;
  if (auto star = s.find('*'); star != std::string_view::npos) {
    if (!parse_double(s.substr(0, star), mult)) throw std::invalid_argument("malformed angle '" + std::string(tok) + "'");
    s.remove_prefix(star + 1);
  }
  if (s.substr(0, 2) != "pi") throw std::invalid_argument("malformed angle '" + std::string(tok) + "'");
  s.remove_prefix(2);
  double div = 1.0;
  if (!s.empty()) {
    if (s[0] != '/' || !parse_double(s.substr(1), div) || div == 0.0)
      throw std::invalid_argument("malformed angle '" + std::string(tok) + "'");
  }
  return sign * mult * std::numbers::pi / div;
}

void check_gate(const Gate& g, int n) {
  auto in_range = [n](int q) { return q >= 0 && q < n; };
  if (!in_range(g.q0)) throw std::invalid_argument("qubit index " + std::to_string(g.q0) + " out of range");
  if (g.two_qubit()) {
    if (!in_range(g.q1)) throw std::invalid_argument("qubit index " + std::to_string(g.q1) + " out of range");
    if (g.q0 == g.q1) throw std::invalid_argument("control and target coincide");
  }
  for (double a : g.angles)
    if (!std::isfinite(a)) throw std::invalid_argument("non-finite angle");
}

GateCircuit parse_circuit(std::string_view text) {
  GateCircuit c;
  bool have_header = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) {
      if (nl == text.size()) break;
      continue;
    }

    auto need = [&](std::size_t k) {
      if (tok.size() != k)
        throw ParseError(lineno, "'" + std::string(tok[0]) + "' expects " + std::to_string(k - 1) + " operands");
    };
    auto qubit = [&](std::size_t i) {
      int q = 0;
      if (!parse_int(tok[i], q)) throw ParseError(lineno, "bad qubit index '" + std::string(tok[i]) + "'");
      return q;
    };
    auto angle = [&](std::size_t i) {
      try {
        return parse_angle(tok[i]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    };

    if (tok[0] == "qubits") {
      if (have_header) throw ParseError(lineno, "duplicate qubits header");
      need(2);
      c.num_qubits = qubit(1);
      if (c.num_qubits < 1) throw ParseError(lineno, "qubit count must be positive");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "missing 'qubits <n>' header");

    Gate g;
    if (tok[0] == "h") {
      need(2);
      g = Gate::h(qubit(1));
    } else if (tok[0] == "rot") {
      need(5);
      g = Gate::rot(qubit(1), angle(2), angle(3), angle(4));
    } else if (tok[0] == "cnot") {
      need(3);
      g = Gate::cnot(qubit(1), qubit(2));
    } else if (tok[0] == "cpswap") {
      need(4);
      g = Gate::cpswap(qubit(1), qubit(2), angle(3));
    } else {
      throw ParseError(lineno, "unknown instruction '" + std::string(tok[0]) + "'");
    }
    try {
      check_gate(g, c.num_qubits);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    c.gates.push_back(g);
    if (nl == text.size()) break;
  }
  if (!have_header) throw ParseError(lineno, "missing 'qubits <n>' header");
  return c;
}

std::string render_circuit(const GateCircuit& c) {
  std::ostringstream os;
  os << "qubits " << c.num_qubits << '\n';
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: os << "h " << g.q0; break;
      case GateKind::RotXZX:
        os << "rot " << g.q0 << ' ' << fmt_angle(g.angles[0]) << ' ' << fmt_angle(g.angles[1]) << ' '
           << fmt_angle(g.angles[2]);
        break;
      case GateKind::CNOT: os << "cnot " << g.q0 << ' ' << g.q1; break;
      case GateKind::CPSwap: os << "cpswap " << g.q0 << ' ' << g.q1 << ' ' << fmt_angle(g.phi()); break;
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<std::size_t>> layers(const GateCircuit& c) {
  std::vector<std::size_t> ready(static_cast<std::size_t>(c.num_qubits), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    std::size_t l = ready[g.q0];
    if (g.two_qubit()) l = std::max(l, ready[g.q1]);
    if (out.size() <= l) out.resize(l + 1);
    out[l].push_back(i);
    ready[g.q0] = l + 1;
    if (g.two_qubit()) ready[g.q1] = l + 1;
  }
  return out;
}

std::size_t two_qubit_layer_count(const GateCircuit& c) {
  std::size_t n = 0;
  for (const auto& layer : layers(c)) {
    for (std::size_t i : layer) {
      if (c.gates[i].two_qubit()) {
        ++n;
        break;
      }
    }
  }
  return n;
}

}  // namespace mbqc
