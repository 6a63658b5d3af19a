#include "braidcube/braid_class.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "braidcube/error.hpp"

namespace braidcube {

namespace {

void require_class_input(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  if (w.empty()) throw Error(Errc::OutOfRange, "braid-class operations need a nonempty word");
  if (!is_reduced(g, w)) throw Error(Errc::NotReduced, format_word(w) + " is not reduced");
}

Word braid_move_unchecked(const Word& w, int lo) {
  Word out = w;
  const auto i = static_cast<std::size_t>(lo - 1);
  std::swap(out[i], out[i + 1]);
  out[i + 2] = out[i];
  return out;
}

Word commute_unchecked(const Word& w, int lo) {
  Word out = w;
  std::swap(out[static_cast<std::size_t>(lo - 1)], out[static_cast<std::size_t>(lo)]);
  return out;
}

struct RawEdge {
  std::size_t a, b;
  int lo;
  MoveKind kind;
};

// Generic breadth-first closure. Edges are reported once, from the endpoint
// discovered first.
template <typename Expand>
std::pair<std::vector<Word>, std::vector<RawEdge>> closure(const Word& seed, std::size_t cap, Expand expand) {
  std::vector<Word> found{seed};
  std::unordered_map<Word, std::size_t, WordHash> seen{{seed, 0}};
  std::vector<RawEdge> edges;
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Word current = found[head];  // found may reallocate while expanding
    expand(current, [&](Word next, int lo, MoveKind kind) {
      auto [it, inserted] = seen.try_emplace(std::move(next), found.size());
      if (inserted) {
        if (found.size() >= cap) throw CapExceededError(found.size() + 1, cap);
        found.push_back(it->first);
      }
      if (head < it->second) edges.push_back({head, it->second, lo, kind});
    });
  }
  return {std::move(found), std::move(edges)};
}

// Permutation sending discovery index to lexicographic rank.
std::vector<std::size_t> lex_ranks(const std::vector<Word>& found) {
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return found[x] < found[y]; });
  std::vector<std::size_t> rank_of(found.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = r;
  return rank_of;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::optional<std::size_t> BraidClass::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BraidClass enumerate_braid_class(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  require_class_input(g, w, cap);
  auto [found, raw] = closure(w, cap, [&](const Word& u, auto&& emit) {
    for (int lo : detail::shadow_starts(g, u)) emit(braid_move_unchecked(u, lo), lo, MoveKind::Braid);
  });

  const auto rank_of = lex_ranks(found);
  BraidClass c(g);
  c.base_ = w;
  c.members_.resize(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) c.members_[rank_of[i]] = std::move(found[i]);
  c.discovery_.resize(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) c.discovery_[i] = rank_of[i];
  for (std::size_t i = 0; i < c.members_.size(); ++i) c.index_.emplace(c.members_[i], i);

  for (const auto& e : raw) {
    auto a = rank_of[e.a], b = rank_of[e.b];
    c.edges_.push_back({std::min(a, b), std::max(a, b), e.lo});
  }
  std::sort(c.edges_.begin(), c.edges_.end());
  c.adjacency_.assign(c.members_.size(), {});
  for (const auto& e : c.edges_) {
    c.adjacency_[e.a].push_back(e.b);
    c.adjacency_[e.b].push_back(e.a);
  }
  for (auto& nb : c.adjacency_) std::sort(nb.begin(), nb.end());
  return c;
}

std::vector<Interval> class_shadows(const BraidClass& c) {
  std::set<int> starts;
  for (const auto& e : c.edges()) starts.insert(e.lo);
  // A singleton class has no edges, but a shadow always yields an edge, so this is exact.
  std::vector<Interval> out;
  for (int lo : starts) out.push_back(Interval::shadow(lo));
  return out;
}

std::size_t rank(const BraidClass& c) { return class_shadows(c).size(); }

std::set<Generator> class_support(const BraidClass& c, Interval iv) {
  std::set<Generator> out;
  for (const auto& m : c.members()) {
    auto part = local_support(m, iv);
    out.insert(part.begin(), part.end());
  }
  return out;
}

std::vector<int> distances_from(const BraidClass& c, std::size_t source) {
  std::vector<int> dist(c.size(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : c.adjacency()[u]) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::size_t braid_distance(const BraidClass& c, const Word& a, const Word& b) {
  auto ia = c.index_of(a), ib = c.index_of(b);
  if (!ia) throw Error(Errc::NotInClass, format_word(a));
  if (!ib) throw Error(Errc::NotInClass, format_word(b));
  return static_cast<std::size_t>(distances_from(c, *ia)[*ib]);
}

SimpleGraph braid_graph(const BraidClass& c) {
  std::vector<std::string> labels;
  labels.reserve(c.size());
  for (const auto& m : c.members()) labels.push_back(format_word(m));
  SimpleGraph bg(std::move(labels));
  for (const auto& e : c.edges()) bg.add_edge(e.a, e.b);
  return bg;
}

std::size_t MatsumotoGraph::count(MoveKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const MatsumotoEdge& e) { return e.kind == kind; }));
}

std::vector<std::vector<Word>> MatsumotoGraph::components(MoveKind kind) const {
  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : edges) {
    if (e.kind == kind) parent[find_root(parent, e.a)] = find_root(parent, e.b);
  }
  std::map<std::size_t, std::vector<Word>> groups;
  for (std::size_t i = 0; i < members.size(); ++i) groups[find_root(parent, i)].push_back(members[i]);
  std::vector<std::vector<Word>> out;
  for (auto& [root, ws] : groups) out.push_back(std::move(ws));
  // members are lexicographic, so each group is already sorted
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

SimpleGraph MatsumotoGraph::as_graph() const {
  std::vector<std::string> labels;
  for (const auto& m : members) labels.push_back(format_word(m));
  SimpleGraph out(std::move(labels));
  for (const auto& e : edges) out.add_edge(e.a, e.b);
  return out;
}

MatsumotoGraph enumerate_matsumoto(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  require_class_input(g, w, cap);
  auto [found, raw] = closure(w, cap, [&](const Word& u, auto&& emit) {
    const int len = static_cast<int>(u.size());
    for (int lo = 1; lo < len; ++lo) {
      if (detail::commutation_at(g, u, lo)) emit(commute_unchecked(u, lo), lo, MoveKind::Commutation);
      if (detail::shadow_at(g, u, lo)) emit(braid_move_unchecked(u, lo), lo, MoveKind::Braid);
    }
  });
  const auto rank_of = lex_ranks(found);
  MatsumotoGraph mg;
  mg.members.resize(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) mg.members[rank_of[i]] = std::move(found[i]);
  for (const auto& e : raw) {
    auto a = rank_of[e.a], b = rank_of[e.b];
    mg.edges.push_back({std::min(a, b), std::max(a, b), e.lo, e.kind});
  }
  std::sort(mg.edges.begin(), mg.edges.end(), [](const MatsumotoEdge& x, const MatsumotoEdge& y) {
    return std::tie(x.a, x.b, x.lo) < std::tie(y.a, y.b, y.lo);
  });
  return mg;
}

std::set<Word> commutation_class(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  require_class_input(g, w, cap);
  auto [found, raw] = closure(w, cap, [&](const Word& u, auto&& emit) {
    for (int lo = 1; lo < static_cast<int>(u.size()); ++lo) {
      if (detail::commutation_at(g, u, lo)) emit(commute_unchecked(u, lo), lo, MoveKind::Commutation);
    }
  });
  return {found.begin(), found.end()};
}

std::optional<std::pair<Interval, Interval>> adjacent_shadow_violation(const BraidClass& c) {
  auto shadows = class_shadows(c);
  for (std::size_t i = 0; i + 1 < shadows.size(); ++i) {
    if (shadows[i + 1].lo == shadows[i].lo + 1) return std::make_pair(shadows[i], shadows[i + 1]);
  }
  return std::nullopt;
}

std::optional<SupportViolation> equal_support_violation(const BraidClass& c) {
  const auto& g = c.graph();
  for (const auto& shadow : class_shadows(c)) {
    const Word* first = nullptr;
    std::set<Generator> first_support;
    for (const auto& m : c.members()) {
      if (!detail::shadow_at(g, m, shadow.lo)) continue;
      auto support = local_support(m, shadow);
      if (!first) {
        first = &m;
        first_support = std::move(support);
      } else if (support != first_support) {
        return SupportViolation{*first, m, shadow};
      }
    }
  }
  return std::nullopt;
}

const char* guarantee_name(Guarantee g) noexcept {
  switch (g) {
    case Guarantee::Holds: return "holds";
    case Guarantee::Violated: return "violated";
    case Guarantee::NotApplicable: return "not applicable";
  }
  return "?";
}

Guarantee equal_support_guarantee(const BraidClass& c) {
  if (!is_triangle_free(c.graph())) return Guarantee::NotApplicable;
  return equal_support_violation(c) ? Guarantee::Violated : Guarantee::Holds;
}

}  // namespace braidcube
