#include "almalt/bracket.hpp"

#include <array>
#include <bit>

#include "almalt/diagram.hpp"

namespace almalt {

namespace {

// Smoothing pairs per crossing, edges relabelled 0..2n-1.
struct Pairs {
  std::array<std::uint8_t, 4> a;  // {0,1} {2,3}
  std::array<std::uint8_t, 4> b;  // {0,3} {1,2}
};

std::vector<Pairs> smoothing_pairs(const PlanarDiagram& pd) {
  std::vector<Pairs> out;
  out.reserve(pd.crossing_count());
  for (const auto& x : pd.crossings()) {
    std::array<std::uint8_t, 4> e;
    for (std::size_t k = 0; k < 4; ++k) e[k] = static_cast<std::uint8_t>(x.slots[k] - 1);
    out.push_back({{e[0], e[1], e[2], e[3]}, {e[0], e[3], e[1], e[2]}});
  }
  return out;
}

class SmallUnionFind {
 public:
  explicit SmallUnionFind(std::size_t n) : sets_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint8_t>(i);
  }

  std::uint8_t find(std::uint8_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint8_t a, std::uint8_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[a] = b;
    --sets_;
  }

  std::size_t sets() const { return sets_; }

 private:
  std::array<std::uint8_t, 2 * max_state_sum_crossings> parent_;
  std::size_t sets_;
};

std::size_t loops_of(const std::vector<Pairs>& pairs, std::uint64_t state) {
  SmallUnionFind uf(2 * pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto& p = ((state >> c) & 1U) ? pairs[c].b : pairs[c].a;
    uf.unite(p[0], p[1]);
    uf.unite(p[2], p[3]);
  }
  return uf.sets();
}

StateHistogram empty_histogram(std::size_t n) {
  StateHistogram h;
  h.crossings = n;
  h.max_loops = n == 0 ? 1 : 2 * n;
  h.counts.assign((n + 1) * (h.max_loops + 1), 0);
  return h;
}

}  // namespace

StateHistogram state_histogram(const PlanarDiagram& pd, Exec exec) {
  const std::size_t n = pd.crossing_count();
  if (n > max_state_sum_crossings)
    throw DiagramError(DiagramError::Kind::too_large,
                       "state sum supports at most " + std::to_string(max_state_sum_crossings) + " crossings");
  StateHistogram h = empty_histogram(n);
  if (n == 0) {
    h.counts[1] = 1;
    return h;
  }
  const auto pairs = smoothing_pairs(pd);
  const std::size_t stride = h.max_loops + 1;
  const auto states = static_cast<std::int64_t>(std::uint64_t{1} << n);

  if (exec == Exec::serial) {
    for (std::int64_t s = 0; s < states; ++s) {
      const auto state = static_cast<std::uint64_t>(s);
      ++h.counts[static_cast<std::size_t>(std::popcount(state)) * stride + loops_of(pairs, state)];
    }
    return h;
  }

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(h.counts.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < states; ++s) {
      const auto state = static_cast<std::uint64_t>(s);
      ++local[static_cast<std::size_t>(std::popcount(state)) * stride + loops_of(pairs, state)];
    }
#pragma omp critical(almalt_histogram_reduce)
    for (std::size_t i = 0; i < local.size(); ++i) h.counts[i] += local[i];
  }
  return h;
}

LaurentPoly bracket_from_histogram(const StateHistogram& h) {
  const auto n = static_cast<int>(h.crossings);
  // d^k for k = 0 .. max_loops - 1, d = -A^2 - A^-2.
  LaurentPoly d(Variable::a);
  d.add_term(2, -1);
  d.add_term(-2, -1);
  std::vector<LaurentPoly> d_pow{LaurentPoly::constant(Variable::a, 1)};
  for (std::size_t k = 1; k < h.max_loops; ++k) d_pow.push_back(d_pow.back() * d);

  LaurentPoly out(Variable::a);
  for (std::size_t b = 0; b <= h.crossings; ++b)
    for (std::size_t loops = 1; loops <= h.max_loops; ++loops) {
      const std::uint64_t count = h.at(b, loops);
      if (count == 0) continue;
      const int exponent = n - 2 * static_cast<int>(b);
      out += d_pow[loops - 1].shifted(exponent) * static_cast<std::int64_t>(count);
    }
  return out;
}

LaurentPoly bracket(const PlanarDiagram& pd, Exec exec) {
  return bracket_from_histogram(state_histogram(pd, exec));
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket_a, int w) {
  if (bracket_a.variable() != Variable::a)
    throw PolyError(PolyError::Kind::variable_mismatch, "bracket must be in A");
  // (-A)^(-3w) = (-1)^w A^(-3w)
  const std::int64_t sign = (w % 2 == 0) ? 1 : -1;
  LaurentPoly v(Variable::t);
  for (const auto& [e, c] : bracket_a.terms()) {
    const int shifted = e - 3 * w;
    if (shifted % 4 != 0)
      throw PolyError(PolyError::Kind::normalization_failure,
                      "A-exponent " + std::to_string(shifted) + " is not a multiple of 4");
    v.add_term(-shifted / 4, sign * c);
  }
  return v;
}

LaurentPoly jones(const PlanarDiagram& pd, Exec exec) {
  return jones_from_bracket(bracket(pd, exec), writhe(pd));
}

}  // namespace almalt
