#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidcube {

// Generators are dense 1-based indices, s_i is written i.
using Generator = int;
using Bond = std::pair<Generator, Generator>;

// A simply-laced Coxeter graph: a bond {s,t} means m(s,t) = 3, an absent
// pair means m(s,t) = 2. Immutable after construction.
class CoxeterGraph {
 public:
  // Validates endpoints and rejects self-loops; duplicate bonds collapse.
  static CoxeterGraph build(int n, const std::vector<Bond>& bonds);

  int size() const noexcept { return n_; }
  bool contains(Generator s) const noexcept { return s >= 1 && s <= n_; }

  // Unchecked lookup; callers validate generators first.
  bool bonded(Generator s, Generator t) const noexcept {
    return adjacency_[static_cast<std::size_t>((s - 1) * n_ + (t - 1))] != 0;
  }

  // Sorted, each pair (s,t) with s < t.
  const std::vector<Bond>& bonds() const noexcept { return bonds_; }
  const std::vector<Generator>& neighbors(Generator s) const { return neighbors_.at(s - 1); }

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.n_ == b.n_ && a.bonds_ == b.bonds_;
  }

 private:
  CoxeterGraph() = default;

  int n_ = 0;
  std::vector<char> adjacency_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Generator>> neighbors_;
};

enum class Family { A, D, AffineA, AffineD };

std::optional<Family> parse_family(std::string_view name);
std::string family_name(Family family);

// Labels follow the usual pictures: D_n has bonds {1,3},{2,3},{3,4},...,{n-1,n};
// affine A_n closes the path 1..n through s_{n+1}; affine D_n forks at s_{n-1}
// into s_n and s_{n+1}.
CoxeterGraph standard_family(Family family, int n);

// 1 if s = t, 3 if bonded, 2 otherwise.
int bond_order(const CoxeterGraph& g, Generator s, Generator t);

bool is_triangle_free(const CoxeterGraph& g);

// Star K_{1,k}, k >= 1, or a single vertex.
bool is_star(const CoxeterGraph& g);

struct InducedSubgraph {
  CoxeterGraph graph;
  // original[i - 1] is the label in the ambient graph of generator i.
  std::vector<Generator> original;
};

InducedSubgraph induced_support_subgraph(const CoxeterGraph& g, const std::set<Generator>& support);

// A[s][t] = 2 on the diagonal, -1 for bonds, 0 otherwise; row-major, 0-based.
std::vector<std::vector<int>> cartan_matrix(const CoxeterGraph& g);

// Text format: first line `n=<int>` followed by `bond <i> <j>` lines, or a single
// `family <A|D|A~|D~> <n>` line. Blank lines and `#` comments are ignored.
CoxeterGraph parse_graph_text(std::string_view text);

// `family:<F>:<n>` shorthand, otherwise a path to a graph file.
CoxeterGraph load_graph(const std::string& source);

std::string describe(const CoxeterGraph& g);

}  // namespace braidcube
