#include "braidcube/coxeter.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "braidcube/error.hpp"

namespace braidcube {

namespace {

void check_generator(const CoxeterGraph& g, Generator s) {
  if (!g.contains(s)) {
    throw Error(Errc::OutOfRange,
                "generator " + std::to_string(s) + " not in 1.." + std::to_string(g.size()));
  }
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& token, const std::string& context) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw Error(Errc::Parse, "expected integer in " + context + ", got '" + token + "'");
  }
}

}  // namespace

CoxeterGraph CoxeterGraph::build(int n, const std::vector<Bond>& bonds) {
  if (n < 1) throw Error(Errc::RankTooSmall, "a Coxeter graph needs at least one generator");
  CoxeterGraph g;
  g.n_ = n;
  g.adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  g.neighbors_.resize(n);
  for (auto [s, t] : bonds) {
    if (s < 1 || s > n || t < 1 || t > n) {
      throw Error(Errc::OutOfRange, "bond {" + std::to_string(s) + "," + std::to_string(t) +
                                        "} outside 1.." + std::to_string(n));
    }
    if (s == t) throw Error(Errc::SelfLoop, "bond {" + std::to_string(s) + "," + std::to_string(s) + "}");
    if (s > t) std::swap(s, t);
    if (g.bonded(s, t)) continue;
    g.adjacency_[static_cast<std::size_t>((s - 1) * n + (t - 1))] = 1;
    g.adjacency_[static_cast<std::size_t>((t - 1) * n + (s - 1))] = 1;
    g.bonds_.emplace_back(s, t);
    g.neighbors_[s - 1].push_back(t);
    g.neighbors_[t - 1].push_back(s);
  }
  std::sort(g.bonds_.begin(), g.bonds_.end());
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  return g;
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "A") return Family::A;
  if (name == "D") return Family::D;
  if (name == "A~") return Family::AffineA;
  if (name == "D~") return Family::AffineD;
  return std::nullopt;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::AffineA: return "A~";
    case Family::AffineD: return "D~";
  }
  return "?";
}

CoxeterGraph standard_family(Family family, int n) {
  std::vector<Bond> bonds;
  auto too_small = [&](int min) {
    throw Error(Errc::RankTooSmall,
                family_name(family) + "_" + std::to_string(n) + " needs n >= " + std::to_string(min));
  };
  switch (family) {
    case Family::A:
      if (n < 1) too_small(1);
      for (int i = 1; i < n; ++i) bonds.emplace_back(i, i + 1);
      return CoxeterGraph::build(n, bonds);
    case Family::D:
      if (n < 4) too_small(4);
      bonds.emplace_back(1, 3);
      for (int i = 2; i < n; ++i) bonds.emplace_back(i, i + 1);
      return CoxeterGraph::build(n, bonds);
    case Family::AffineA:
      if (n < 2) too_small(2);
      for (int i = 1; i < n; ++i) bonds.emplace_back(i, i + 1);
      bonds.emplace_back(1, n + 1);
      bonds.emplace_back(n, n + 1);
      return CoxeterGraph::build(n + 1, bonds);
    case Family::AffineD:
      if (n < 5) too_small(5);
      bonds.emplace_back(1, 3);
      for (int i = 2; i < n - 1; ++i) bonds.emplace_back(i, i + 1);
      bonds.emplace_back(n - 1, n);
      bonds.emplace_back(n - 1, n + 1);
      return CoxeterGraph::build(n + 1, bonds);
  }
  throw Error(Errc::Parse, "unknown family");
}

int bond_order(const CoxeterGraph& g, Generator s, Generator t) {
  check_generator(g, s);
  check_generator(g, t);
  if (s == t) return 1;
  return g.bonded(s, t) ? 3 : 2;
}

bool is_triangle_free(const CoxeterGraph& g) {
  for (auto [s, t] : g.bonds()) {
    for (Generator u : g.neighbors(s)) {
      if (u != t && g.bonded(u, t)) return false;
    }
  }
  return true;
}

bool is_star(const CoxeterGraph& g) {
  const int n = g.size();
  if (n == 1) return true;
  if (static_cast<int>(g.bonds().size()) != n - 1) return false;
  for (Generator c = 1; c <= n; ++c) {
    if (static_cast<int>(g.neighbors(c).size()) == n - 1) return true;
  }
  return false;
}

InducedSubgraph induced_support_subgraph(const CoxeterGraph& g, const std::set<Generator>& support) {
  for (Generator s : support) check_generator(g, s);
  if (support.empty()) throw Error(Errc::RankTooSmall, "empty support");
  std::vector<Generator> original(support.begin(), support.end());
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i < original.size(); ++i) {
    for (std::size_t j = i + 1; j < original.size(); ++j) {
      if (g.bonded(original[i], original[j])) {
        bonds.emplace_back(static_cast<Generator>(i + 1), static_cast<Generator>(j + 1));
      }
    }
  }
  return {CoxeterGraph::build(static_cast<int>(original.size()), bonds), std::move(original)};
}

std::vector<std::vector<int>> cartan_matrix(const CoxeterGraph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [s, t] : g.bonds()) {
    a[s - 1][t - 1] = -1;
    a[t - 1][s - 1] = -1;
  }
  return a;
}

CoxeterGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::optional<int> n;
  std::vector<Bond> bonds;
  std::optional<CoxeterGraph> from_family;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (line.rfind("n=", 0) == 0 || line.rfind("n =", 0) == 0) {
      if (n || from_family) throw Error(Errc::Parse, where + ": repeated header");
      n = parse_int(trim(line.substr(line.find('=') + 1)), where);
      continue;
    }
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (keyword == "bond") {
      std::string a, b, extra;
      fields >> a >> b;
      if (b.empty() || (fields >> extra)) throw Error(Errc::Parse, where + ": expected `bond <i> <j>`");
      bonds.emplace_back(parse_int(a, where), parse_int(b, where));
    } else if (keyword == "family") {
      std::string name, count, extra;
      fields >> name >> count;
      if (count.empty() || (fields >> extra)) throw Error(Errc::Parse, where + ": expected `family <F> <n>`");
      if (n || from_family) throw Error(Errc::Parse, where + ": repeated header");
      auto family = parse_family(name);
      if (!family) throw Error(Errc::Parse, where + ": unknown family '" + name + "'");
      from_family = standard_family(*family, parse_int(count, where));
    } else {
      throw Error(Errc::Parse, where + ": unrecognized line '" + line + "'");
    }
  }
  if (from_family) {
    if (!bonds.empty()) throw Error(Errc::Parse, "`family` cannot be combined with `bond` lines");
    return *from_family;
  }
  if (!n) throw Error(Errc::Parse, "missing `n=<int>` header");
  return CoxeterGraph::build(*n, bonds);
}

CoxeterGraph load_graph(const std::string& source) {
  if (source.rfind("family:", 0) == 0) {
    std::string rest = source.substr(7);
    auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw Error(Errc::Parse, "expected family:<F>:<n>, got '" + source + "'");
    auto family = parse_family(rest.substr(0, colon));
    if (!family) throw Error(Errc::Parse, "unknown family in '" + source + "'");
    return standard_family(*family, parse_int(rest.substr(colon + 1), source));
  }
  std::ifstream file(source);
  if (!file) throw Error(Errc::Parse, "cannot open graph file '" + source + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_graph_text(buffer.str());
}

std::string describe(const CoxeterGraph& g) {
  std::ostringstream out;
  out << "n=" << g.size();
  for (auto [s, t] : g.bonds()) out << " {" << s << "," << t << "}";
  return out.str();
}

}  // namespace braidcube
