#include "almalt/diagram.hpp"

#include "almalt/union_find.hpp"

namespace almalt {

int state_loops(const PlanarDiagram& pd, const State& s) {
  const std::size_t n = pd.crossing_count();
  if (s.length() != n)
    throw DiagramError(DiagramError::Kind::state_length_mismatch,
                       "state has " + std::to_string(s.length()) + " entries for " +
                           std::to_string(n) + " crossings");
  if (n == 0) return 1;
  UnionFind uf(pd.edge_count() + 1);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& x = pd[c].slots;
    if (s.is_b(c)) {
      uf.unite(x[0], x[3]);
      uf.unite(x[1], x[2]);
    } else {
      uf.unite(x[0], x[1]);
      uf.unite(x[2], x[3]);
    }
  }
  // Slot 0 of the union-find is unused.
  return static_cast<int>(uf.sets()) - 1;
}

StateLoopCounts state_loop_counts(const PlanarDiagram& pd) {
  const std::size_t n = pd.crossing_count();
  return {state_loops(pd, State::all_a(n)), state_loops(pd, State::all_b(n))};
}

bool is_connected(const PlanarDiagram& pd) {
  const std::size_t n = pd.crossing_count();
  if (n <= 1) return true;
  std::vector<std::size_t> first(pd.edge_count() + 1, SIZE_MAX);
  UnionFind uf(n);
  for (std::size_t c = 0; c < n; ++c)
    for (int e : pd[c].slots) {
      auto& f = first[static_cast<std::size_t>(e)];
      if (f == SIZE_MAX)
        f = c;
      else
        uf.unite(f, c);
    }
  return uf.sets() == 1;
}

int turaev_genus(const PlanarDiagram& pd) {
  if (!is_connected(pd))
    throw DiagramError(DiagramError::Kind::disconnected, "Turaev genus needs a connected diagram");
  const auto [sa, sb] = state_loop_counts(pd);
  const int twice = static_cast<int>(pd.crossing_count()) + 2 - sa - sb;
  return twice / 2;
}

int writhe(const PlanarDiagram& pd) {
  int w = 0;
  for (const auto& x : pd.crossings()) w += x.sign;
  return w;
}

PlanarDiagram mirror(const PlanarDiagram& pd) {
  std::vector<Crossing> out = pd.crossings();
  for (auto& x : out) {
    std::swap(x.slots[1], x.slots[3]);
    x.sign = -x.sign;
  }
  return PlanarDiagram(std::move(out));
}

}  // namespace almalt
