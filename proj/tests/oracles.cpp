#include "oracles.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace oracle {

using almalt::Crossing;
using almalt::PlanarDiagram;

Poly to_poly(const almalt::LaurentPoly& p) {
  Poly out;
  for (auto [e, c] : p.terms()) out[e] = c;
  return out;
}

almalt::LaurentPoly from_terms(almalt::Variable v, const std::vector<std::pair<long long, int>>& terms) {
  almalt::LaurentPoly p(v);
  for (auto [c, e] : terms) p.add_term(e, c);
  return p;
}

namespace {

struct Chords {
  std::vector<std::pair<int, int>> ends;  // positions in 1..2n
  bool interlaced(std::size_t i, std::size_t j) const {
    auto [a, b] = ends[i];
    if (a > b) std::swap(a, b);
    const bool c = a < ends[j].first && ends[j].first < b;
    const bool d = a < ends[j].second && ends[j].second < b;
    return c != d;
  }
};

Chords chords_of(const std::vector<int>& labels) {
  Chords ch;
  for (std::size_t i = 0; i < labels.size(); ++i)
    ch.ends.emplace_back(static_cast<int>(2 * i + 1), std::abs(labels[i]));
  return ch;
}

std::vector<std::vector<bool>> interlacement(const std::vector<int>& labels) {
  const auto ch = chords_of(labels);
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> g(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) g[i][j] = ch.interlaced(i, j);
  return g;
}

}  // namespace

bool chords_connected(const std::vector<int>& labels) {
  const auto g = interlacement(labels);
  const std::size_t n = labels.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n; ++u)
      if (g[v][u] && !seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

bool gauss_realizable(const std::vector<int>& labels) {
  const auto g = interlacement(labels);
  const std::size_t n = labels.size();
  auto common = [&](std::size_t u, std::size_t v) {
    int c = 0;
    for (std::size_t w = 0; w < n; ++w) c += g[u][w] && g[v][w];
    return c;
  };
  for (std::size_t u = 0; u < n; ++u) {
    int deg = 0;
    for (std::size_t v = 0; v < n; ++v) deg += g[u][v];
    if (deg % 2) return false;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g[u][v] && common(u, v) % 2) return false;

  // Edges with an even common neighbourhood must be exactly a cut: 2-colour
  // each component so that those edges cross colours and the rest do not.
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u) {
        if (!g[v][u]) continue;
        const int want = colour[v] ^ (common(u, v) % 2 == 0 ? 1 : 0);
        if (colour[u] < 0) {
          colour[u] = want;
          stack.push_back(u);
        } else if (colour[u] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

int pd_faces(const PlanarDiagram& pd) {
  const std::size_t n = pd.crossing_count();
  if (n == 0) return 2;
  // dart = 4 * crossing + slot
  std::map<int, std::vector<int>> where;
  for (std::size_t c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) where[pd[c].slots[s]].push_back(static_cast<int>(4 * c + s));
  auto other_end = [&](int dart) {
    const auto& w = where.at(pd[dart / 4].slots[dart % 4]);
    return w[0] == dart ? w[1] : w[0];
  };
  std::vector<bool> used(4 * n, false);
  int faces = 0;
  for (std::size_t d0 = 0; d0 < 4 * n; ++d0) {
    if (used[d0]) continue;
    ++faces;
    int d = static_cast<int>(d0);
    while (!used[d]) {
      used[d] = true;
      const int e = other_end(d);
      d = 4 * (e / 4) + (e % 4 + 1) % 4;
    }
  }
  return faces;
}

namespace {

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void add_into(Poly& acc, const Poly& p) {
  for (auto [e, c] : p) acc[e] += c;
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

Poly power(const Poly& p, int k) {
  Poly out{{0, 1}};
  for (int i = 0; i < k; ++i) out = mul(out, p);
  return out;
}

using Slots = std::vector<std::array<int, 4>>;

Poly smooth(Slots xs, int loops) {
  if (xs.empty()) {
    const Poly d{{2, -1}, {-2, -1}};
    return power(d, loops - 1);
  }
  const auto x = xs.back();
  xs.pop_back();
  Poly total;
  for (int b = 0; b < 2; ++b) {
    std::array<std::pair<int, int>, 2> joins =
        b == 0 ? std::array{std::pair{x[0], x[1]}, std::pair{x[2], x[3]}}
               : std::array{std::pair{x[0], x[3]}, std::pair{x[1], x[2]}};
    Slots rest = xs;
    int closed = loops;
    for (std::size_t k = 0; k < 2; ++k) {
      auto [keep, drop] = joins[k];
      if (keep == drop) {
        ++closed;
        continue;
      }
      for (auto& y : rest)
        for (int& s : y)
          if (s == drop) s = keep;
      for (std::size_t m = k + 1; m < 2; ++m) {
        if (joins[m].first == drop) joins[m].first = keep;
        if (joins[m].second == drop) joins[m].second = keep;
      }
    }
    add_into(total, mul(Poly{{b == 0 ? 1 : -1, 1}}, smooth(std::move(rest), closed)));
  }
  return total;
}

}  // namespace

Poly skein_bracket(const PlanarDiagram& pd) {
  if (pd.crossing_count() == 0) return Poly{{0, 1}};
  if (pd.crossing_count() > 16) throw std::invalid_argument("skein oracle limited to 16 crossings");
  Slots xs;
  for (const auto& c : pd.crossings()) xs.push_back(c.slots);
  return smooth(std::move(xs), 0);
}

std::pair<long long, long long> word_fraction(const std::vector<int>& entries) {
  // (p, q) <- [[a, 1], [1, 0]] (p, q), starting from infinity = (1, 0).
  long long p = 1, q = 0;
  for (int a : entries) {
    const long long np = a * p + q;
    q = p;
    p = np;
  }
  const long long g = std::gcd(p, q);
  if (g != 0) {
    p /= g;
    q /= g;
  }
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

PlanarDiagram pretzel(const std::vector<int>& twists) {
  enum { NW = 0, SW = 1, SE = 2, NE = 3 };
  std::vector<int> base;
  int n = 0;
  for (int t : twists) {
    base.push_back(n);
    n += std::abs(t);
  }
  const std::size_t m = twists.size();
  std::vector<int> partner(4 * n, -1);
  std::vector<bool> over_nw_se(n);
  auto link = [&](int c1, int p1, int c2, int p2) {
    partner[4 * c1 + p1] = 4 * c2 + p2;
    partner[4 * c2 + p2] = 4 * c1 + p1;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const int k = std::abs(twists[i]);
    for (int j = 0; j < k; ++j) over_nw_se[base[i] + j] = twists[i] > 0;
    for (int j = 0; j + 1 < k; ++j) {
      link(base[i] + j, SW, base[i] + j + 1, NW);
      link(base[i] + j, SE, base[i] + j + 1, NE);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t next = (i + 1) % m;
    const int bottom_i = base[i] + std::abs(twists[i]) - 1;
    const int bottom_next = base[next] + std::abs(twists[next]) - 1;
    link(base[i], NE, base[next], NW);
    link(bottom_i, SE, bottom_next, SW);
  }

  // Walk the strand from crossing 0 entering at NW.
  std::vector<int> label(4 * n, 0);
  std::vector<int> in_port, crossing_of;
  int port = NW, c = 0, k = 0;
  do {
    ++k;
    in_port.push_back(port);
    crossing_of.push_back(c);
    const int out = 4 * c + (port ^ 2);
    label[4 * c + port] = k - 1;
    label[out] = k;
    const int arrive = partner[out];
    c = arrive / 4;
    port = arrive % 4;
  } while (!(c == 0 && port == NW));
  if (k != 2 * n) throw std::invalid_argument("pretzel pattern is a link, not a knot");
  for (int& l : label)
    if (l == 0) l = 2 * n;

  std::vector<Crossing> xs(n);
  std::vector<int> under_in(n, -1), over_in(n, -1);
  for (int v = 0; v < k; ++v) {
    const int p = in_port[v];
    const bool over = over_nw_se[crossing_of[v]] == (p == NW || p == SE);
    (over ? over_in : under_in)[crossing_of[v]] = p;
  }
  for (int i = 0; i < n; ++i) {
    const int u = under_in[i];
    for (int s = 0; s < 4; ++s) xs[i].slots[s] = label[4 * i + (u + s) % 4];
    // slot 1 is an over port; +1 when the strand leaves through it
    xs[i].sign = ((u + 1) % 4) == (over_in[i] ^ 2) ? 1 : -1;
  }
  return PlanarDiagram(std::move(xs));
}

}  // namespace oracle
