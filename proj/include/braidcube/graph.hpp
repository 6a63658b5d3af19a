#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace braidcube {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1, each carrying a display label.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n);
  explicit SimpleGraph(std::vector<std::string> labels);

  Vertex add_vertex(std::string label = {});
  // Rejects self-loops and repeated edges with std::invalid_argument.
  void add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Each edge once with first < second, in insertion order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Same set, sorted; handy for equality checks.
  std::set<Edge> edge_set() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::set<Edge> edge_lookup_;
};

inline constexpr int kUnreachable = -1;

std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source);
bool is_connected(const SimpleGraph& g);

// Row-major |V| x |V| BFS distance table.
struct DistanceTable {
  std::size_t n = 0;
  std::vector<int> d;
  int operator()(Vertex u, Vertex v) const { return d[u * n + v]; }
};

// Throws Disconnected when some pair is unreachable.
DistanceTable distance_table(const SimpleGraph& g);

// Cartesian (box) product; vertex (i, j) of the result has index i * |H| + j.
SimpleGraph box_product(const SimpleGraph& g, const SimpleGraph& h);

}  // namespace braidcube
