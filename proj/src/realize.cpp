#include "almalt/realize.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <cstddef>
#include <sstream>

#include "almalt/union_find.hpp"

namespace almalt {

namespace {

constexpr int next_edge(int e, int edges) { return e % edges + 1; }

// Edge ends of the two strands through one crossing.
struct Strands {
  int odd_in, odd_out, even_in, even_out;
};

using Rotation = std::array<int, 4>;

Rotation rotation(const Strands& s, bool flipped) {
  return flipped ? Rotation{s.odd_in, s.even_out, s.odd_out, s.even_in}
                 : Rotation{s.odd_in, s.even_in, s.odd_out, s.even_out};
}

constexpr std::size_t max_darts = 4 * max_realize_crossings;

// Orbit count of the face permutation: leave along a dart, arrive at the
// other end of its edge, turn to the next slot counterclockwise.
template <typename RotationAt>
int count_faces(std::size_t n, RotationAt&& rot) {
  const std::size_t darts = 4 * n;
  std::array<std::int16_t, 2 * max_realize_crossings + 1> first;
  std::array<std::int16_t, max_darts> other;
  first.fill(-1);
  for (std::size_t c = 0; c < n; ++c) {
    const Rotation& r = rot(c);
    for (int k = 0; k < 4; ++k) {
      const auto d = static_cast<std::int16_t>(4 * c + k);
      auto& f = first[static_cast<std::size_t>(r[k])];
      if (f < 0) {
        f = d;
      } else {
        other[static_cast<std::size_t>(d)] = f;
        other[static_cast<std::size_t>(f)] = d;
      }
    }
  }
  std::array<bool, max_darts> seen{};
  int faces = 0;
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    ++faces;
    std::size_t d = start;
    while (!seen[d]) {
      seen[d] = true;
      const auto o = static_cast<std::size_t>(other[d]);
      d = (o & ~std::size_t{3}) | ((o + 1) & 3);
    }
  }
  return faces;
}

std::vector<Strands> strands_of(const DtCode& code) {
  const std::size_t n = code.crossings();
  const int edges = static_cast<int>(2 * n);
  std::vector<Strands> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int odd = static_cast<int>(2 * i + 1);
    const int even = std::abs(code[i]);
    out[i] = {odd == 1 ? edges : odd - 1, odd, even - 1, even};
  }
  return out;
}

bool chords_connected(const DtCode& code) {
  const std::size_t n = code.crossings();
  std::vector<std::pair<int, int>> chord(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int a = static_cast<int>(2 * i + 1);
    const int b = std::abs(code[i]);
    chord[i] = {std::min(a, b), std::max(a, b)};
  }
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto [a1, b1] = chord[i];
      const auto [a2, b2] = chord[j];
      const bool interlaced = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
      if (interlaced) uf.unite(i, j);
    }
  return uf.sets() <= 1;
}

bool planar(const std::vector<Strands>& strands, std::uint64_t bits) {
  const std::size_t n = strands.size();
  std::array<Rotation, max_realize_crossings> rot;
  for (std::size_t c = 0; c < n; ++c) rot[c] = rotation(strands[c], (bits >> c) & 1U);
  return count_faces(n, [&](std::size_t c) -> const Rotation& { return rot[c]; }) ==
         static_cast<int>(n + 2);
}

constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

std::uint64_t search_serial(const std::vector<Strands>& strands) {
  const std::uint64_t candidates = std::uint64_t{1} << (strands.size() - 1);
  for (std::uint64_t m = 0; m < candidates; ++m)
    if (planar(strands, m << 1)) return m;
  return none;
}

std::uint64_t search_parallel(const std::vector<Strands>& strands) {
  const auto candidates = static_cast<std::int64_t>(std::uint64_t{1} << (strands.size() - 1));
  std::atomic<std::uint64_t> best{none};
#pragma omp parallel for schedule(dynamic, 512)
  for (std::int64_t i = 0; i < candidates; ++i) {
    const auto m = static_cast<std::uint64_t>(i);
    if (m >= best.load(std::memory_order_relaxed)) continue;
    if (!planar(strands, m << 1)) continue;
    std::uint64_t cur = best.load(std::memory_order_relaxed);
    while (m < cur && !best.compare_exchange_weak(cur, m, std::memory_order_relaxed)) {
    }
  }
  return best.load();
}

Crossing make_crossing(const Strands& s, bool flipped, bool even_over) {
  const Rotation r = rotation(s, flipped);
  if (even_over) return {r, flipped ? +1 : -1};
  // Odd strand is over: start the cycle at the incoming even end.
  const Rotation from_even = flipped ? Rotation{r[3], r[0], r[1], r[2]}
                                     : Rotation{r[1], r[2], r[3], r[0]};
  return {from_even, flipped ? -1 : +1};
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  const int edges = static_cast<int>(2 * crossings_.size());
  std::vector<int> heads(static_cast<std::size_t>(edges) + 1, 0);
  std::vector<int> tails(static_cast<std::size_t>(edges) + 1, 0);
  auto bad = [](const std::string& msg) { throw DiagramError(DiagramError::Kind::invalid_diagram, msg); };
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const Crossing& x = crossings_[c];
    for (int e : x.slots)
      if (e < 1 || e > edges) bad("edge id " + std::to_string(e) + " out of range");
    if (x.sign != 1 && x.sign != -1) bad("crossing sign must be +1 or -1");
    const int over_in = x.sign > 0 ? x.slots[3] : x.slots[1];
    const int over_out = x.sign > 0 ? x.slots[1] : x.slots[3];
    if (x.slots[2] != next_edge(x.slots[0], edges) || over_out != next_edge(over_in, edges))
      bad("strands at crossing " + std::to_string(c + 1) + " do not pass straight through");
    ++heads[static_cast<std::size_t>(x.slots[0])];
    ++heads[static_cast<std::size_t>(over_in)];
    ++tails[static_cast<std::size_t>(x.slots[2])];
    ++tails[static_cast<std::size_t>(over_out)];
  }
  for (int e = 1; e <= edges; ++e)
    if (heads[static_cast<std::size_t>(e)] != 1 || tails[static_cast<std::size_t>(e)] != 1)
      bad("edge " + std::to_string(e) + " must have exactly one head and one tail");
}

RealizationResult realize(const DtCode& code, Exec exec) {
  const std::size_t n = code.crossings();
  if (n == 0) return PlanarDiagram{};
  if (n > max_realize_crossings)
    throw DiagramError(DiagramError::Kind::too_large,
                       "exhaustive realization supports at most " +
                           std::to_string(max_realize_crossings) + " crossings");
  if (!chords_connected(code))
    return NotRealizable{"chord diagram is disconnected (composite diagram)"};

  const auto strands = strands_of(code);
  const std::uint64_t found = exec == Exec::parallel ? search_parallel(strands) : search_serial(strands);
  if (found == none) return NotRealizable{"no local orientation gives a planar rotation system"};

  const std::uint64_t bits = found << 1;
  std::vector<Crossing> crossings(n);
  for (std::size_t c = 0; c < n; ++c)
    crossings[c] = make_crossing(strands[c], (bits >> c) & 1U, code[c] > 0);
  return PlanarDiagram(std::move(crossings));
}

int face_count(const PlanarDiagram& pd) {
  const std::size_t n = pd.crossing_count();
  if (n == 0) return 2;
  constexpr std::size_t unset = SIZE_MAX;
  std::vector<std::array<std::size_t, 2>> ends(pd.edge_count() + 1, {unset, unset});
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < 4; ++k) {
      auto& e = ends[static_cast<std::size_t>(pd[c].slots[k])];
      (e[0] == unset ? e[0] : e[1]) = 4 * c + k;
    }
  std::vector<bool> seen(4 * n, false);
  int faces = 0;
  for (std::size_t s = 0; s < 4 * n; ++s) {
    if (seen[s]) continue;
    ++faces;
    for (std::size_t d = s; !seen[d];) {
      seen[d] = true;
      const auto& e = ends[static_cast<std::size_t>(pd[d / 4].slots[d % 4])];
      const std::size_t o = e[0] == d ? e[1] : e[0];
      d = (o & ~std::size_t{3}) | ((o + 1) & 3);
    }
  }
  return faces;
}

std::string dump(const PlanarDiagram& pd) {
  std::ostringstream out;
  for (std::size_t c = 0; c < pd.crossing_count(); ++c) {
    const auto& s = pd[c].slots;
    out << 'X' << c + 1 << ": (" << s[0] << ", " << s[1] << ", " << s[2] << ", " << s[3]
        << ") sign=" << (pd[c].sign > 0 ? "+1" : "-1") << '\n';
  }
  return out.str();
}

}  // namespace almalt
