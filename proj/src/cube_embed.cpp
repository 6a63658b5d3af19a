#include "braidcube/cube_embed.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "braidcube/error.hpp"

namespace braidcube {

namespace {

constexpr int kMaxDimension = 24;

void check_all_pairs_size(const SimpleGraph& g, std::size_t cap) {
  if (g.vertex_count() > cap) throw CapExceededError(g.vertex_count(), cap);
}

// Bits at positions 2, 4, ..., len-1 of the span, comparing member to base.
std::string even_position_bits(const Word& base, const Word& member, Interval span) {
  std::string bits;
  for (int p = span.lo + 1; p < span.hi; p += 2) {
    const auto i = static_cast<std::size_t>(p - 1);
    bits.push_back(member[i] == base[i] ? '0' : '1');
  }
  return bits;
}

SimpleGraph cube_on(int r, bool no_adjacent_ones) {
  if (r < 0) throw std::invalid_argument("negative dimension");
  if (r > kMaxDimension) throw Error(Errc::DimensionTooLarge, std::to_string(r) + " > " + std::to_string(kMaxDimension));
  std::vector<std::uint32_t> codes;
  for (std::uint32_t x = 0; x < (1u << r); ++x) {
    if (!no_adjacent_ones || (x & (x >> 1)) == 0) codes.push_back(x);
  }
  std::vector<std::string> labels;
  labels.reserve(codes.size());
  for (auto x : codes) {
    std::string s(static_cast<std::size_t>(r), '0');
    for (int k = 0; k < r; ++k) {
      if (x >> (r - 1 - k) & 1u) s[static_cast<std::size_t>(k)] = '1';
    }
    labels.push_back(std::move(s));
  }
  SimpleGraph g(std::move(labels));
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (int b = 0; b < r; ++b) {
      auto y = codes[i] | (1u << b);
      if (y == codes[i]) continue;
      auto it = std::lower_bound(codes.begin(), codes.end(), y);
      if (it != codes.end() && *it == y) g.add_edge(i, static_cast<std::size_t>(it - codes.begin()));
    }
  }
  return g;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool theta_related(const DistanceTable& d, Edge e, Edge f) {
  auto [u, v] = e;
  auto [x, y] = f;
  return d(u, x) + d(v, y) != d(u, y) + d(v, x);
}

}  // namespace

BitLabel::BitLabel(std::string bits) : bits_(std::move(bits)) {
  if (bits_.find_first_not_of("01") != std::string::npos) throw std::invalid_argument("label must be 0/1: " + bits_);
}

BitLabel BitLabel::operator^(const BitLabel& other) const {
  if (size() != other.size()) throw std::invalid_argument("xor of labels of different length");
  std::string out = bits_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bits_[i] == other.bits_[i] ? '0' : '1';
  return BitLabel(std::move(out));
}

std::size_t hamming(const BitLabel& a, const BitLabel& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming distance of labels of different length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a.str()[i] != b.str()[i];
  return d;
}

BitLabel phi(const BraidClass& c, const Word& base, const Word& member) {
  if (!is_link_class(c)) throw Error(Errc::NotALink, format_word(c.base()) + " is not a link");
  if (!c.contains(base)) throw Error(Errc::NotInClass, format_word(base));
  if (!c.contains(member)) throw Error(Errc::NotInClass, format_word(member));
  return BitLabel(even_position_bits(base, member, {1, static_cast<int>(base.size())}));
}

BitLabel automorphism_shift(const BraidClass& c, const Word& alpha, const Word& beta) { return phi(c, beta, alpha); }

const BitLabel& Embedding::label_of(const Word& member) const {
  auto idx = cls.index_of(member);
  if (!idx) throw Error(Errc::NotInClass, format_word(member));
  return labels[*idx];
}

Embedding embed_word(const CoxeterGraph& g, const Word& w, const EmbedOptions& options) {
  const bool triangle_free = is_triangle_free(g);
  if (!triangle_free && !options.unchecked) {
    if (!is_reduced(g, w)) throw Error(Errc::NotReduced, format_word(w) + " is not reduced");
    throw Error(Errc::NotTriangleFree, describe(g) + " contains a three-cycle");
  }
  BraidClass cls = enumerate_braid_class(g, w, options.cap);
  LinkFactorization factorization = link_factorization(cls);

  std::vector<std::optional<BraidClass>> factor_classes;
  for (const auto& f : factorization.factors) {
    if (triangle_free) {
      factor_classes.push_back(enumerate_braid_class(g, f.word, options.cap));
    } else {
      factor_classes.emplace_back();
    }
  }

  std::vector<BitLabel> labels;
  labels.reserve(cls.size());
  for (const auto& member : cls.members()) {
    std::string bits;
    auto pieces = split_by(factorization, member);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& f = factorization.factors[i];
      if (factor_classes[i]) {
        bits += phi(*factor_classes[i], f.word, pieces[i]).str();
      } else {
        bits += even_position_bits(w, member, f.span);
      }
    }
    labels.emplace_back(std::move(bits));
  }
  return {std::move(cls), std::move(factorization), std::move(labels), triangle_free};
}

IsometryReport verify_isometric(const SimpleGraph& g, const std::vector<BitLabel>& labels) {
  if (labels.size() != g.vertex_count()) throw std::invalid_argument("labeling is not total");
  check_all_pairs_size(g, kAllPairsCap);
  std::map<BitLabel, Vertex> seen;
  for (Vertex v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = seen.emplace(labels[v], v);
    if (!inserted) {
      throw Error(Errc::LabelCollision, "vertices " + g.label(it->second) + " and " + g.label(v) + " share label " +
                                            labels[v].str());
    }
  }
  IsometryReport report;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      ++report.pairs_checked;
      auto h = hamming(labels[u], labels[v]);
      if (dist[v] == kUnreachable || static_cast<std::size_t>(dist[v]) != h) {
        report.isometric = false;
        report.violation = IsometryViolation{u, v, dist[v], h};
        return report;
      }
    }
  }
  return report;
}

SimpleGraph hypercube(int r) { return cube_on(r, false); }
SimpleGraph fibonacci_cube(int r) { return cube_on(r, true); }

std::vector<BitLabel> labels_of(const SimpleGraph& cube) {
  std::vector<BitLabel> out;
  for (const auto& s : cube.labels()) out.emplace_back(s);
  return out;
}

bool image_is_fibonacci(const BraidClass& c, const Word& base) {
  if (!is_fibonacci_link(c.graph(), base)) throw Error(Errc::NotFibonacci, format_word(base));
  std::set<BitLabel> image;
  for (const auto& m : c.members()) image.insert(phi(c, base, m));
  const auto cube = fibonacci_cube(static_cast<int>(rank(c)));
  std::set<BitLabel> expected;
  for (const auto& s : cube.labels()) expected.emplace(s);
  return image == expected;
}

std::vector<std::vector<std::size_t>> theta_classes(const SimpleGraph& g) {
  check_all_pairs_size(g, kAllPairsCap);
  const auto d = distance_table(g);
  const auto& edges = g.edges();
  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (theta_related(d, edges[i], edges[j])) parent[find_root(parent, i)] = find_root(parent, j);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < edges.size(); ++i) groups[find_root(parent, i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t isometric_dimension(const SimpleGraph& g) {
  const auto classes = theta_classes(g);
  const auto d = distance_table(g);
  const auto& edges = g.edges();
  for (const auto& cls : classes) {
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        if (!theta_related(d, edges[cls[a]], edges[cls[b]])) {
          throw Error(Errc::NotPartialCube, "Theta is not transitive");
        }
      }
    }
  }
  // Cut labeling: bit i says which side of the i-th class a vertex lies on.
  std::vector<std::string> bits(g.vertex_count());
  for (const auto& cls : classes) {
    auto [u, v] = edges[cls.front()];
    for (Vertex x = 0; x < g.vertex_count(); ++x) bits[x].push_back(d(x, v) < d(x, u) ? '1' : '0');
  }
  std::vector<BitLabel> labels;
  for (auto& s : bits) labels.emplace_back(std::move(s));
  try {
    if (!verify_isometric(g, labels).isometric) throw Error(Errc::NotPartialCube, "cut labeling is not isometric");
  } catch (const Error& e) {
    if (e.code() == Errc::LabelCollision) throw Error(Errc::NotPartialCube, "cut labeling is not injective");
    throw;
  }
  return classes.size();
}

bool is_median_graph(const SimpleGraph& g, std::size_t cap) {
  check_all_pairs_size(g, cap);
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  const auto d = distance_table(g);
  const std::size_t words = (n + 63) / 64;
  // interval[u][v] = vertices on some shortest u-v path, as a bitset
  std::vector<std::uint64_t> interval(n * n * words, 0);
  auto row = [&](Vertex u, Vertex v) { return interval.data() + (u * n + v) * words; };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) {
      auto* bitset = row(u, v);
      for (Vertex x = 0; x < n; ++x) {
        if (d(u, x) + d(x, v) == d(u, v)) bitset[x / 64] |= std::uint64_t{1} << (x % 64);
      }
      std::copy(bitset, bitset + words, row(v, u));
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) {
      for (Vertex w = v; w < n; ++w) {
        const auto *a = row(u, v), *b = row(v, w), *c = row(u, w);
        int count = 0;
        for (std::size_t i = 0; i < words && count <= 1; ++i) count += std::popcount(a[i] & b[i] & c[i]);
        if (count != 1) return false;
      }
    }
  }
  return true;
}

bool theta_matches_shadows(const BraidClass& c) {
  const auto bg = braid_graph(c);
  // braid_graph inserts edges in the order of c.edges()
  std::map<int, std::vector<std::size_t>> by_shadow;
  for (std::size_t i = 0; i < c.edges().size(); ++i) by_shadow[c.edges()[i].lo].push_back(i);
  std::set<std::vector<std::size_t>> expected;
  for (auto& [lo, idx] : by_shadow) expected.insert(idx);
  const auto classes = theta_classes(bg);
  return std::set<std::vector<std::size_t>>(classes.begin(), classes.end()) == expected;
}

}  // namespace braidcube
