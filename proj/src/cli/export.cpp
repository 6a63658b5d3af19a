#include "braidcube/cli/export.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braidcube/error.hpp"

namespace braidcube::cli {

namespace {

Json word_json(const Word& w) { return Json(w); }

Word word_from(const Json& j) {
  if (!j.is_array()) throw Error(Errc::Parse, "expected an array of generators");
  Word w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::Parse, "generator must be an integer");
    w.push_back(x.get<int>());
  }
  return w;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

const std::vector<std::string>& shadow_palette() {
  static const std::vector<std::string> palette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                                "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
  return palette;
}

std::vector<std::size_t> listing_order(const BraidClass& c, SeedOrder order) {
  if (order == SeedOrder::Bfs) return c.discovery_order();
  std::vector<std::size_t> out(c.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Json class_to_json(const BraidClass& c, SeedOrder order) {
  const auto listed = listing_order(c, order);
  std::vector<std::size_t> position(c.size());
  for (std::size_t i = 0; i < listed.size(); ++i) position[listed[i]] = i;

  Json bonds = Json::array();
  for (auto [s, t] : c.graph().bonds()) bonds.push_back({s, t});
  Json doc;
  doc["graph"] = {{"n", c.graph().size()}, {"bonds", bonds}};
  doc["base"] = word_json(c.base());
  doc["members"] = Json::array();
  for (auto i : listed) doc["members"].push_back(word_json(c.member(i)));
  doc["edges"] = Json::array();
  for (const auto& e : c.edges()) {
    auto a = position[e.a], b = position[e.b];
    doc["edges"].push_back({std::min(a, b), std::max(a, b), e.lo});
  }
  doc["shadows"] = Json::array();
  for (const auto& s : class_shadows(c)) doc["shadows"].push_back(s.lo);
  doc["rank"] = rank(c);
  return doc;
}

ClassRecord record_of(const BraidClass& c) {
  ClassRecord r{c.graph(), c.base(), c.members(), {}, {}, rank(c)};
  for (const auto& e : c.edges()) r.edges.emplace_back(c.member(e.a), c.member(e.b), e.lo);
  std::sort(r.edges.begin(), r.edges.end());
  for (const auto& s : class_shadows(c)) r.shadows.push_back(s.lo);
  return r;
}

ClassRecord class_from_json(const Json& doc) {
  try {
    std::vector<Bond> bonds;
    for (const auto& b : doc.at("graph").at("bonds")) bonds.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
    ClassRecord r{CoxeterGraph::build(doc.at("graph").at("n").get<int>(), bonds), word_from(doc.at("base")), {}, {},
                  {}, doc.at("rank").get<std::size_t>()};
    for (const auto& m : doc.at("members")) r.members.push_back(word_from(m));
    for (const auto& e : doc.at("edges")) {
      const auto& a = r.members.at(e.at(0).get<std::size_t>());
      const auto& b = r.members.at(e.at(1).get<std::size_t>());
      r.edges.emplace_back(std::min(a, b), std::max(a, b), e.at(2).get<int>());
    }
    for (const auto& s : doc.at("shadows")) r.shadows.push_back(s.get<int>());
    std::sort(r.members.begin(), r.members.end());
    std::sort(r.edges.begin(), r.edges.end());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("class JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw Error(Errc::Parse, std::string("class JSON: ") + e.what());
  }
}

std::string class_to_dot(const BraidClass& c) {
  const auto& palette = shadow_palette();
  std::ostringstream out;
  out << "graph braid_class {\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << "  n" << i << " [label=" << quoted(format_word(c.member(i))) << "];\n";
  }
  for (const auto& e : c.edges()) {
    out << "  n" << e.a << " -- n" << e.b << " [color=" << quoted(palette[(e.lo - 1) % palette.size()])
        << ", label=" << quoted(to_string(Interval::shadow(e.lo))) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string matsumoto_to_dot(const MatsumotoGraph& mg) {
  std::ostringstream out;
  out << "graph matsumoto {\n";
  for (std::size_t i = 0; i < mg.members.size(); ++i) {
    out << "  n" << i << " [label=" << quoted(format_word(mg.members[i])) << "];\n";
  }
  for (const auto& e : mg.edges) {
    out << "  n" << e.a << " -- n" << e.b << " [color=" << (e.kind == MoveKind::Braid ? "blue" : "orange")
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json box_report_to_json(const BoxProductReport& report) {
  Json factors = Json::array();
  for (std::size_t i = 0; i < report.factorization.factors.size(); ++i) {
    const auto& f = report.factorization.factors[i];
    factors.push_back({{"span", {f.span.lo, f.span.hi}},
                       {"word", word_json(f.word)},
                       {"size", report.factor_sizes.at(i)},
                       {"rank", report.factor_ranks.at(i)}});
  }
  Json doc;
  doc["factorization"] = report.factorization.to_string();
  doc["factors"] = factors;
  doc["class_size"] = report.class_size;
  doc["product_size"] = report.product_size;
  doc["rank"] = report.rank;
  doc["rank_sum"] = report.rank_sum;
  doc["isomorphic"] = report.isomorphic;
  doc["passed"] = report.passed();
  if (!report.failure.empty()) doc["failure"] = report.failure;
  return doc;
}

Json embedding_to_json(const Embedding& e, const IsometryReport& iso,
                       const std::vector<std::vector<std::size_t>>& theta) {
  Json labels = Json::object();
  for (std::size_t i = 0; i < e.cls.size(); ++i) labels[format_word(e.cls.member(i))] = e.labels[i].str();
  Json classes = Json::array();
  for (const auto& cls : theta) {
    Json edges = Json::array();
    for (auto idx : cls) {
      const auto& edge = e.cls.edges().at(idx);
      edges.push_back({format_word(e.cls.member(edge.a)), format_word(e.cls.member(edge.b))});
    }
    classes.push_back(edges);
  }
  Json doc;
  doc["labels"] = labels;
  doc["isometric"] = iso.isometric;
  doc["theta_classes"] = classes;
  return doc;
}

std::string embedding_to_dot(const Embedding& e) {
  const auto& palette = shadow_palette();
  std::ostringstream out;
  out << "graph embedding {\n";
  for (std::size_t i = 0; i < e.cls.size(); ++i) {
    out << "  " << quoted(format_word(e.cls.member(i))) << " [label=" << quoted(e.labels[i].str()) << "];\n";
  }
  for (const auto& edge : e.cls.edges()) {
    out << "  " << quoted(format_word(e.cls.member(edge.a))) << " -- " << quoted(format_word(e.cls.member(edge.b)))
        << " [color=" << quoted(palette[(edge.lo - 1) % palette.size()]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace braidcube::cli
