#include <cmath>
#include <stdexcept>

#include "mbqc/pattern.hpp"

namespace mbqc {

namespace {

using cd = std::complex<double>;

// Amplitudes of the +1 eigenstate: (|0> + e^{-ia}|1>)/sqrt2.
std::pair<cd, cd> plus_state(const Measurement& m) {
  double a = 0.0;
  switch (m.basis) {
    case Basis::X: a = 0.0; break;
    case Basis::Y: a = -M_PI / 2; break;
    case Basis::Theta: a = m.angle; break;
    default: throw std::invalid_argument("cell has no projective measurement");
  }
  const double s = 1.0 / std::sqrt(2.0);
  return {cd(s, 0.0), std::polar(s, -a)};
}

}  // namespace

Amplitudes simulate_pattern_postselected(const Pattern& p, const Amplitudes& input) {
  const int n = static_cast<int>(p.cells.size());
  if (n > 20) throw std::invalid_argument("pattern too large to simulate");
  const int k = static_cast<int>(p.in_points.size());
  if (input.size() != (std::size_t{1} << k)) throw std::invalid_argument("input size does not match in-points");

  auto index_of = [&](Coord c) {
    for (int i = 0; i < n; ++i)
      if (p.cells[i].offset == c) return i;
    throw std::invalid_argument("point is not a pattern cell");
  };
  std::vector<int> in_idx, out_idx;
  for (Coord c : p.in_points) in_idx.push_back(index_of(c));
  for (Coord c : p.out_points) out_idx.push_back(index_of(c));

  // Bit (n-1-i) of a basis index is cell i. Inputs carry the given state,
  // everything else starts in |+>.
  const std::size_t dim = std::size_t{1} << n;
  Amplitudes psi(dim);
  const double plus = 1.0 / std::sqrt(2.0);
  for (std::size_t s = 0; s < dim; ++s) {
    std::size_t in_bits = 0;
    for (int j = 0; j < k; ++j) in_bits = (in_bits << 1) | ((s >> (n - 1 - in_idx[j])) & 1u);
    psi[s] = input[in_bits] * std::pow(plus, n - k);
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adjacent(p.cells[i].offset, p.cells[j].offset)) continue;
      const std::size_t mi = std::size_t{1} << (n - 1 - i), mj = std::size_t{1} << (n - 1 - j);
      for (std::size_t s = 0; s < dim; ++s)
        if ((s & mi) && (s & mj)) psi[s] = -psi[s];
    }
  }

  std::vector<bool> is_out(static_cast<std::size_t>(n), false);
  for (int i : out_idx) is_out[i] = true;

  // Project measured cells one at a time, shrinking nothing: measured bits
  // are folded to 0 so the surviving amplitudes sit on outputs only.
  for (int i = 0; i < n; ++i) {
    if (is_out[i]) continue;
    auto [a0, a1] = plus_state(p.cells[i].m);
    const std::size_t mask = std::size_t{1} << (n - 1 - i);
    for (std::size_t s = 0; s < dim; ++s) {
      if (s & mask) continue;
      psi[s] = std::conj(a0) * psi[s] + std::conj(a1) * psi[s | mask];
      psi[s | mask] = 0.0;
    }
  }

  const int ko = static_cast<int>(out_idx.size());
  Amplitudes out(std::size_t{1} << ko);
  for (std::size_t o = 0; o < out.size(); ++o) {
    std::size_t s = 0;
    for (int j = 0; j < ko; ++j)
      if ((o >> (ko - 1 - j)) & 1u) s |= std::size_t{1} << (n - 1 - out_idx[j]);
    out[o] = psi[s];
  }
  double norm = 0.0;
  for (auto& a : out) norm += std::norm(a);
  if (norm < 1e-24) throw std::runtime_error("post-selected branch has zero probability");
  for (auto& a : out) a /= std::sqrt(norm);
  return out;
}

std::vector<std::vector<std::complex<double>>> gate_unitary(const Gate& g) {
  using M = std::vector<std::vector<cd>>;
  const cd i1(0.0, 1.0);
  auto mul = [](const M& a, const M& b) {
    M r(a.size(), std::vector<cd>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
  };
  switch (g.kind) {
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      return {{s, s}, {s, -s}};
    }
    case GateKind::RotXZX: {
      auto rx = [&](double t) {
        return M{{std::cos(t / 2), -i1 * std::sin(t / 2)}, {-i1 * std::sin(t / 2), std::cos(t / 2)}};
      };
      auto rz = [&](double t) { return M{{std::exp(-i1 * (t / 2)), 0.0}, {0.0, std::exp(i1 * (t / 2))}}; };
      return mul(rx(g.angles[2]), mul(rz(g.angles[1]), rx(g.angles[0])));
    }
    case GateKind::CNOT:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    case GateKind::CPSwap: {
      const cd ph = std::exp(i1 * g.phi());
      return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, ph}};
    }
  }
  throw std::invalid_argument("unsupported gate");
}

double fidelity(const Amplitudes& a, const Amplitudes& b) {
  if (a.size() != b.size()) return 0.0;
  cd ip = 0.0;
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ip += std::conj(a[i]) * b[i];
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  return std::norm(ip) / (na * nb);
}

}  // namespace mbqc
