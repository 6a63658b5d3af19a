#include "braidcube/oracle/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "braidcube/error.hpp"

namespace braidcube::oracle {

namespace {

using Matrix = std::vector<long long>;  // row-major n x n

Matrix identity(int n) {
  Matrix m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, int n) {
  Matrix c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const long long aik = a[static_cast<std::size_t>(i * n + k)];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += aik * b[static_cast<std::size_t>(k * n + j)];
    }
  }
  return c;
}

// Matrix of s acting on root coordinates: alpha_j -> alpha_j - a(s,j) alpha_s.
std::vector<Matrix> generator_matrices(const CoxeterGraph& g) {
  const int n = g.size();
  std::vector<Matrix> out;
  for (int s = 0; s < n; ++s) {
    Matrix m = identity(n);
    for (int j = 0; j < n; ++j) {
      int a = 0;
      if (j == s) a = 2;
      for (auto [x, y] : g.bonds()) {
        if ((x - 1 == s && y - 1 == j) || (y - 1 == s && x - 1 == j)) a = -1;
      }
      m[static_cast<std::size_t>(s * n + j)] -= a;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

int brute_min_length(const CoxeterGraph& g, const Word& w, int bound) {
  if (bound < 0 || bound > 8) throw Error(Errc::BoundExceeded, "bound must lie in 0..8");
  if (g.size() > 4) throw Error(Errc::BoundExceeded, "at most 4 generators");
  const int n = g.size();
  const auto gens = generator_matrices(g);
  Matrix target = identity(n);
  for (Generator s : w) {
    if (s < 1 || s > n) throw Error(Errc::OutOfRange, "letter " + std::to_string(s));
    target = multiply(target, gens[static_cast<std::size_t>(s - 1)], n);
  }
  std::set<Matrix> seen{identity(n)};
  std::vector<Matrix> layer{identity(n)};
  for (int len = 0; len <= bound; ++len) {
    if (std::find(layer.begin(), layer.end(), target) != layer.end()) return len;
    std::vector<Matrix> next;
    for (const auto& m : layer) {
      for (const auto& s : gens) {
        Matrix x = multiply(m, s, n);
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  throw Error(Errc::BoundExceeded, "element longer than " + std::to_string(bound));
}

std::vector<std::vector<int>> all_pairs_distances(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] >= inf) throw Error(Errc::Disconnected, "vertices " + std::to_string(i) + ", " + std::to_string(j));
    }
  }
  return d;
}

bool is_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, const std::vector<Vertex>& mapping) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (mapping.size() != g1.vertex_count()) return false;
  std::set<Vertex> image(mapping.begin(), mapping.end());
  if (image.size() != mapping.size() || (!image.empty() && *image.rbegin() >= g2.vertex_count())) return false;
  for (auto [u, v] : g1.edges()) {
    if (!g2.has_edge(mapping[u], mapping[v])) return false;
  }
  return true;
}

IsoWitness small_iso(const SimpleGraph& g1, const SimpleGraph& g2) {
  constexpr std::size_t limit = 64;
  if (g1.vertex_count() > limit || g2.vertex_count() > limit) throw Error(Errc::TooLarge, "more than 64 vertices");
  IsoWitness none;
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return none;

  auto degrees = [](const SimpleGraph& g) {
    std::vector<std::size_t> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
    return out;
  };
  auto d1 = degrees(g1), d2 = degrees(g2);
  auto s1 = d1, s2 = d2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return none;

  std::vector<Vertex> same(n);
  for (Vertex v = 0; v < n; ++v) same[v] = v;
  if (is_isomorphism(g1, g2, same)) return {true, same};

  // Assign g1 vertices in order of decreasing degree.
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return d1[a] > d1[b]; });

  constexpr Vertex unset = static_cast<Vertex>(-1);
  std::vector<Vertex> map(n, unset);
  std::vector<char> taken(n, 0);

  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex u = order[depth];
    for (Vertex x = 0; x < n; ++x) {
      if (taken[x] || d2[x] != d1[u]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order[k];
        ok = g1.has_edge(u, w) == g2.has_edge(x, map[w]);
      }
      if (!ok) continue;
      map[u] = x;
      taken[x] = 1;
      if (self(self, depth + 1)) return true;
      taken[x] = 0;
      map[u] = unset;
    }
    return false;
  };
  if (!extend(extend, 0)) return none;
  return {true, map};
}

}  // namespace braidcube::oracle
