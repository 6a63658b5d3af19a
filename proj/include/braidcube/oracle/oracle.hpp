#pragma once

// Brute-force checkers for the test suite. Nothing here calls into the
// algorithms it is meant to check (word.cpp, braid_class.cpp, cube_embed.cpp).

#include <cstddef>
#include <optional>
#include <vector>

#include "braidcube/coxeter.hpp"
#include "braidcube/graph.hpp"
#include "braidcube/word.hpp"

namespace braidcube::oracle {

// Length of the element represented by w, by breadth-first search over group
// elements. Needs bound <= 8 and at most 4 generators; throws BoundExceeded
// otherwise or when the length exceeds the bound.
int brute_min_length(const CoxeterGraph& g, const Word& w, int bound);

// Floyd-Warshall. Throws Disconnected.
std::vector<std::vector<int>> all_pairs_distances(const SimpleGraph& g);

struct IsoWitness {
  bool isomorphic = false;
  std::vector<Vertex> mapping;  // g1 vertex -> g2 vertex
};

// Backtracking search with degree pruning. Throws TooLarge above 64 vertices.
IsoWitness small_iso(const SimpleGraph& g1, const SimpleGraph& g2);

// Checks that `mapping` is a bijection sending edges exactly onto edges.
bool is_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, const std::vector<Vertex>& mapping);

}  // namespace braidcube::oracle
