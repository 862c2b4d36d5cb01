#pragma once

// Kauffman states, writhe, mirror image and the genus of the Turaev surface.

#include <cstddef>
#include <cstdint>

#include "almalt/realize.hpp"

namespace almalt {

/// A choice of A (bit clear) or B (bit set) smoothing per crossing.
class State {
 public:
  State(std::size_t length, std::uint64_t b_bits) : length_(length), bits_(b_bits) {}

  static State all_a(std::size_t length) { return {length, 0}; }
  static State all_b(std::size_t length) {
    return {length, length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1};
  }

  std::size_t length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool is_b(std::size_t crossing) const noexcept { return (bits_ >> crossing) & 1U; }

 private:
  std::size_t length_;
  std::uint64_t bits_;
};

struct StateLoopCounts {
  int all_a = 0;
  int all_b = 0;
};

/// Closed curves left after smoothing every crossing. The A-smoothing joins
/// the two regions swept counterclockwise from the over-strand, i.e. it pairs
/// slots {0,1} and {2,3}; the B-smoothing pairs {0,3} and {1,2}.
int state_loops(const PlanarDiagram& pd, const State& s);

StateLoopCounts state_loop_counts(const PlanarDiagram& pd);

/// (c + 2 - s_A - s_B) / 2. Throws DiagramError(disconnected) for a diagram
/// whose crossing graph falls apart.
int turaev_genus(const PlanarDiagram& pd);

int writhe(const PlanarDiagram& pd);

/// Reflection in the plane: reverses every rotation, keeps over/under.
PlanarDiagram mirror(const PlanarDiagram& pd);

bool is_connected(const PlanarDiagram& pd);

}  // namespace almalt
