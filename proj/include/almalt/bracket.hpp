#pragma once

// Kauffman bracket by full state sum, and the Jones polynomial.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "almalt/exec.hpp"
#include "almalt/laurent.hpp"
#include "almalt/realize.hpp"

namespace almalt {

inline constexpr std::size_t max_state_sum_crossings = 32;

/// Number of states with a given count of B-smoothings and a given number of
/// loops: count(b, loops) = counts[b * (max_loops + 1) + loops].
struct StateHistogram {
  std::size_t crossings = 0;
  std::size_t max_loops = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(std::size_t b, std::size_t loops) const { return counts[b * (max_loops + 1) + loops]; }
  bool operator==(const StateHistogram&) const = default;
};

/// Enumerates all 2^n states. The parallel kernel splits the state range
/// across threads and sums per-thread histograms, so both modes agree exactly.
StateHistogram state_histogram(const PlanarDiagram& pd, Exec exec = Exec::serial);

/// sum over states of A^(a-b) (-A^2 - A^-2)^(loops-1), in variable A.
LaurentPoly bracket_from_histogram(const StateHistogram& h);

LaurentPoly bracket(const PlanarDiagram& pd, Exec exec = Exec::serial);

/// V = (-A)^(-3w) <D> with t = A^-4. Throws PolyError(normalization_failure)
/// if an A-exponent is not a multiple of 4.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket_a, int writhe);

LaurentPoly jones(const PlanarDiagram& pd, Exec exec = Exec::serial);

}  // namespace almalt
