#pragma once

#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>

namespace mbqc {

// Grid coordinate. Rows index the cluster width, columns its depth.
struct Coord {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
  friend Coord operator+(Coord a, Coord b) { return {a.row + b.row, a.col + b.col}; }
  friend Coord operator-(Coord a, Coord b) { return {a.row - b.row, a.col - b.col}; }
};

inline bool adjacent(Coord a, Coord b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

inline constexpr Coord kNeighbours[4] = {{-1, 0}, {0, 1}, {1, 0}, {0, -1}};

struct CoordHash {
  std::size_t operator()(Coord c) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(c.row) << 32) ^
                                  static_cast<unsigned>(c.col));
  }
};

}  // namespace mbqc
