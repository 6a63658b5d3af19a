#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "braidcube/coxeter.hpp"
#include "braidcube/graph.hpp"
#include "braidcube/word.hpp"

namespace braidcube {

inline constexpr std::size_t kDefaultCap = 1'000'000;

// Indices into BraidClass::members(); a < b. `lo` is the shadow the move acts on
// (the same interval seen from either endpoint).
struct BraidEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  int lo = 0;
  friend auto operator<=>(const BraidEdge&, const BraidEdge&) = default;
};

class BraidClass {
 public:
  const CoxeterGraph& graph() const noexcept { return graph_; }
  const Word& base() const noexcept { return base_; }
  std::size_t base_index() const { return *index_of(base_); }
  std::size_t word_length() const noexcept { return base_.size(); }
  std::size_t size() const noexcept { return members_.size(); }

  // Lexicographic order on letter sequences.
  const std::vector<Word>& members() const noexcept { return members_; }
  const Word& member(std::size_t i) const { return members_.at(i); }
  // Member indices in breadth-first discovery order from the base.
  const std::vector<std::size_t>& discovery_order() const noexcept { return discovery_; }
  const std::vector<BraidEdge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<std::size_t>>& adjacency() const noexcept { return adjacency_; }

  std::optional<std::size_t> index_of(const Word& w) const;
  bool contains(const Word& w) const { return index_.count(w) != 0; }

 private:
  friend BraidClass enumerate_braid_class(const CoxeterGraph&, const Word&, std::size_t);
  explicit BraidClass(CoxeterGraph g) : graph_(std::move(g)) {}

  CoxeterGraph graph_;
  Word base_;
  std::vector<Word> members_;
  std::vector<std::size_t> discovery_;
  std::vector<BraidEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

// Breadth-first closure of w under braid moves. Throws NotReduced, or
// CapExceededError once more than `cap` members have been found.
BraidClass enumerate_braid_class(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCap);

std::vector<Interval> class_shadows(const BraidClass& c);
std::size_t rank(const BraidClass& c);
std::set<Generator> class_support(const BraidClass& c, Interval iv);

// Throws NotInClass.
std::size_t braid_distance(const BraidClass& c, const Word& a, const Word& b);
std::vector<int> distances_from(const BraidClass& c, std::size_t source);

// Vertices are member indices labelled by the formatted words.
SimpleGraph braid_graph(const BraidClass& c);

enum class MoveKind { Commutation, Braid };

struct MatsumotoEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  int lo = 0;  // first position touched by the move
  MoveKind kind = MoveKind::Braid;
};

struct MatsumotoGraph {
  std::vector<Word> members;  // lexicographic
  std::vector<MatsumotoEdge> edges;

  std::size_t count(MoveKind kind) const;
  // Connected components using only edges of the given kind, each sorted, listed
  // by smallest member.
  std::vector<std::vector<Word>> components(MoveKind kind) const;
  SimpleGraph as_graph() const;
};

MatsumotoGraph enumerate_matsumoto(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCap);
std::set<Word> commutation_class(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCap);

// Raw checks. These run on any graph; whether a violation is a contradiction
// depends on the graph, see Guarantee below.

// Two class shadows [i,i+2] and [i+1,i+3]; none expected in simply-laced systems.
std::optional<std::pair<Interval, Interval>> adjacent_shadow_violation(const BraidClass& c);

struct SupportViolation {
  Word a;
  Word b;
  Interval shadow;
};

// Two members sharing a braid shadow but with different local supports over it.
std::optional<SupportViolation> equal_support_violation(const BraidClass& c);

enum class Guarantee { Holds, Violated, NotApplicable };
const char* guarantee_name(Guarantee g) noexcept;

// NotApplicable unless the ambient graph is triangle-free.
Guarantee equal_support_guarantee(const BraidClass& c);

}  // namespace braidcube
