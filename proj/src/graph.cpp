#include "braidcube/graph.hpp"

#include <deque>
#include <stdexcept>

#include "braidcube/error.hpp"

namespace braidcube {

SimpleGraph::SimpleGraph(std::size_t n) : adjacency_(n), labels_(n) {
  for (std::size_t i = 0; i < n; ++i) labels_[i] = std::to_string(i);
}

SimpleGraph::SimpleGraph(std::vector<std::string> labels)
    : adjacency_(labels.size()), labels_(std::move(labels)) {}

Vertex SimpleGraph::add_vertex(std::string label) {
  adjacency_.emplace_back();
  labels_.push_back(label.empty() ? std::to_string(labels_.size()) : std::move(label));
  return adjacency_.size() - 1;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count()) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  Edge e = u < v ? Edge{u, v} : Edge{v, u};
  if (!edge_lookup_.insert(e).second) {
    throw std::invalid_argument("parallel edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
  }
  edges_.push_back(e);
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  return edge_lookup_.count(u < v ? Edge{u, v} : Edge{v, u}) != 0;
}

std::set<Edge> SimpleGraph::edge_set() const { return edge_lookup_; }

std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  for (int d : bfs_distances(g, 0)) {
    if (d == kUnreachable) return false;
  }
  return true;
}

DistanceTable distance_table(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceTable t{n, std::vector<int>(n * n)};
  for (Vertex u = 0; u < n; ++u) {
    auto row = bfs_distances(g, u);
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] == kUnreachable) {
        throw Error(Errc::Disconnected, "no path between vertices " + std::to_string(u) + " and " +
                                            std::to_string(v));
      }
      t.d[u * n + v] = row[v];
    }
  }
  return t;
}

SimpleGraph box_product(const SimpleGraph& g, const SimpleGraph& h) {
  const std::size_t nh = h.vertex_count();
  std::vector<std::string> labels;
  labels.reserve(g.vertex_count() * nh);
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j = 0; j < nh; ++j) labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
  }
  SimpleGraph out(std::move(labels));
  for (auto [a, b] : g.edges()) {
    for (Vertex j = 0; j < nh; ++j) out.add_edge(a * nh + j, b * nh + j);
  }
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (auto [a, b] : h.edges()) out.add_edge(i * nh + a, i * nh + b);
  }
  return out;
}

}  // namespace braidcube
