#pragma once

// Realization of DT codes as planar 4-valent diagrams.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "almalt/dt.hpp"
#include "almalt/exec.hpp"

namespace almalt {

class DiagramError : public std::runtime_error {
 public:
  enum class Kind { invalid_diagram, state_length_mismatch, disconnected, too_large };

  DiagramError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct Crossing {
  // Edge ids in counterclockwise order, slot 0 = incoming under-strand and
  // slot 2 = outgoing under-strand. The over-strand occupies slots 1 and 3.
  std::array<int, 4> slots{};
  // +1 when slot 1 carries the outgoing over-strand (right-handed crossing).
  int sign = 0;

  bool operator==(const Crossing&) const = default;
};

/// Oriented knot diagram on the sphere. Edges are numbered 1..2n along the
/// traversal; edge e runs from the crossing at visit e to the one at visit e+1.
/// A default-constructed diagram is the crossingless unknot.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  /// Checks edge bookkeeping (each edge once incoming, once outgoing, strands
  /// pass straight through). Planarity is not checked here; see face_count.
  explicit PlanarDiagram(std::vector<Crossing> crossings);

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t edge_count() const noexcept { return 2 * crossings_.size(); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& operator[](std::size_t i) const { return crossings_[i]; }

  bool operator==(const PlanarDiagram&) const = default;

 private:
  std::vector<Crossing> crossings_;
};

struct NotRealizable {
  std::string reason;
};

using RealizationResult = std::variant<PlanarDiagram, NotRealizable>;

inline constexpr std::size_t max_realize_crossings = 30;

/// Searches the 2^(n-1) local orientations (crossing 0 fixed) in increasing
/// order and returns the first one whose rotation system has n + 2 faces.
/// Both exec modes return the same diagram. Codes whose chord diagram is
/// disconnected (composite, ambiguous) are rejected.
RealizationResult realize(const DtCode& code, Exec exec = Exec::serial);

/// Faces of the rotation system; n + 2 exactly when the diagram is planar.
int face_count(const PlanarDiagram& pd);

/// `Xi: (a, b, c, d) sign=+1`, one line per crossing, 1-based.
std::string dump(const PlanarDiagram& pd);

}  // namespace almalt
