#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "braidcube/braid_class.hpp"
#include "braidcube/cube_embed.hpp"
#include "braidcube/link.hpp"

namespace braidcube::cli {

using Json = nlohmann::ordered_json;

enum class SeedOrder { Lex, Bfs };

// Member indices in the requested listing order.
std::vector<std::size_t> listing_order(const BraidClass& c, SeedOrder order);

// { "graph": {...}, "base": [...], "members": [[...],...], "edges": [[a,b,lo],...],
//   "shadows": [lo,...], "rank": r }, indices relative to the listed members.
Json class_to_json(const BraidClass& c, SeedOrder order = SeedOrder::Lex);

// What a class JSON document says, independent of listing order.
struct ClassRecord {
  CoxeterGraph graph;
  Word base;
  std::vector<Word> members;                          // sorted
  std::vector<std::tuple<Word, Word, int>> edges;     // (smaller, larger, lo), sorted
  std::vector<int> shadows;
  std::size_t rank = 0;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

ClassRecord record_of(const BraidClass& c);
// Throws Parse on malformed input.
ClassRecord class_from_json(const Json& doc);

std::string class_to_dot(const BraidClass& c);
std::string matsumoto_to_dot(const MatsumotoGraph& mg);

Json box_report_to_json(const BoxProductReport& report);

Json embedding_to_json(const Embedding& e, const IsometryReport& iso,
                       const std::vector<std::vector<std::size_t>>& theta);
std::string embedding_to_dot(const Embedding& e);

// Stable palette; colour i is used for shadow start lo with (lo - 1) mod 12 == i.
const std::vector<std::string>& shadow_palette();

}  // namespace braidcube::cli
