// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidcube/braid_class.hpp"
#include "braidcube/cube_embed.hpp"
#include "braidcube/error.hpp"
#include "braidcube/link.hpp"
#include "braidcube/oracle/oracle.hpp"
#include "properties.hpp"

using namespace braidcube;

namespace {

Word W(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(c - '0');
  return w;
}

std::set<Word> Ws(std::initializer_list<const char*> list) {
  std::set<Word> out;
  for (const char* s : list) out.insert(W(s));
  return out;
}

CoxeterGraph A(int n) { return standard_family(Family::A, n); }
CoxeterGraph D(int n) { return standard_family(Family::D, n); }
CoxeterGraph At(int n) { return standard_family(Family::AffineA, n); }
CoxeterGraph Dt(int n) { return standard_family(Family::AffineD, n); }

std::pair<Word, Word> ordered(const Word& a, const Word& b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

std::set<Word> members(const BraidClass& c) { return {c.members().begin(), c.members().end()}; }

std::set<std::pair<Word, Word>> named_edges(const BraidClass& c) {
  std::set<std::pair<Word, Word>> out;
  for (const auto& e : c.edges()) out.insert(ordered(c.member(e.a), c.member(e.b)));
  return out;
}

SimpleGraph path(std::size_t n) {
  SimpleGraph p(n);
  for (Vertex i = 0; i + 1 < n; ++i) p.add_edge(i, i + 1);
  return p;
}

std::vector<BitLabel> phi_labels(const BraidClass& c, const Word& base) {
  std::vector<BitLabel> out;
  for (const auto& m : c.members()) out.push_back(phi(c, base, m));
  return out;
}

std::size_t fib(std::size_t n) {
  std::size_t a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    a += b;
    std::swap(a, b);
  }
  return a;
}

// Collects failed checks for one criterion.
struct Checks {
  std::vector<std::string> failed;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

using Body = std::function<void(Checks&, std::ostringstream&)>;

void criterion_1(Checks& check, std::ostringstream& note) {
  auto mg = enumerate_matsumoto(A(3), W("123121"));
  check(mg.members.size() == 16, "16 reduced expressions");
  auto as_sets = [](const std::vector<std::vector<Word>>& parts) {
    std::set<std::set<Word>> out;
    for (const auto& p : parts) out.emplace(p.begin(), p.end());
    return out;
  };
  auto sizes = [](const std::vector<std::vector<Word>>& parts) {
    std::multiset<std::size_t> out;
    for (const auto& p : parts) out.insert(p.size());
    return out;
  };
  auto braid = mg.components(MoveKind::Braid);
  auto comm = mg.components(MoveKind::Commutation);
  check(sizes(braid) == std::multiset<std::size_t>{3, 3, 3, 3, 1, 1, 1, 1}, "braid class sizes");
  check(sizes(comm) == std::multiset<std::size_t>{4, 4, 2, 2, 1, 1, 1, 1}, "commutation class sizes");
  check(as_sets(braid) == std::set<std::set<Word>>{Ws({"123121", "123212", "132312"}), Ws({"312312"}),
                                                   Ws({"312132", "321232", "321323"}), Ws({"132132"}),
                                                   Ws({"121321", "212321", "213231"}), Ws({"213213"}),
                                                   Ws({"231213", "232123", "323123"}), Ws({"231231"})},
        "braid classes");
  check(as_sets(comm) == std::set<std::set<Word>>{Ws({"232123"}), Ws({"231213", "213213", "213231", "231231"}),
                                                  Ws({"321323", "323123"}), Ws({"212321"}), Ws({"321232"}),
                                                  Ws({"123121", "121321"}),
                                                  Ws({"132312", "132132", "312132", "312312"}), Ws({"123212"})},
        "commutation classes");
  note << "16 words, " << braid.size() << " braid classes, " << comm.size() << " commutation classes";
}

void criterion_2(Checks& check, std::ostringstream& note) {
  auto c = enumerate_braid_class(A(4), W("1213243"));
  check(members(c) == Ws({"1213243", "2123243", "2132343", "2132434"}), "members");
  check(oracle::small_iso(braid_graph(c), path(4)).isomorphic, "braid graph is P_4");
  check(rank(c) == 3, "rank 3");
  auto report = verify_isometric(braid_graph(c), phi_labels(c, c.base()));
  check(report.isometric, "Phi labels isometric");
  check(phi(c, c.base(), c.base()).size() == 3, "labels in Q_3");
  check(c.size() < (std::size_t{1} << rank(c)), "strict size bound");
  note << "size " << c.size() << " < 2^" << rank(c);
}

void criterion_3(Checks& check, std::ostringstream& note) {
  const auto expected = Ws({"1213243565", "2123243565", "2132343565", "2132434565", "1213243656", "2123243656",
                            "2132343656", "2132434656"});
  auto c = enumerate_braid_class(A(6), W("1213243565"));
  check(members(c) == expected, "the eight members");
  auto report = verify_box_product(A(6), W("1213243565"));
  check(report.passed(), "box product verified: " + report.failure);
  check(report.factor_sizes == std::vector<std::size_t>{4, 2}, "factor sizes 4 and 2");
  check(report.witness.size() == 8, "witness covers every member");
  auto p = box_product(path(4), path(2));
  check(oracle::small_iso(braid_graph(c), p).isomorphic, "isomorphic to P_4 x P_2");
  note << report.factorization.to_string();
}

void criterion_4(Checks& check, std::ostringstream& note) {
  auto c = enumerate_braid_class(D(4), W("2321434"));
  check(members(c) == Ws({"2321434", "3231434", "2321343", "3231343", "3213143"}), "the five members");
  const auto bg = braid_graph(c);
  const auto dim = isometric_dimension(bg);
  check(dim == 3 && rank(c) == 3, "isometric dimension 3 = rank");
  check(theta_classes(bg).size() == 3, "three Theta classes");
  check(theta_matches_shadows(c), "Theta classes are the shadow groups");
  note << "dimension " << dim;
}

void criterion_5(Checks& check, std::ostringstream& note) {
  const std::vector<Word> d{W("232143454"), W("323143454"), W("232134354"), W("323134354"),
                            W("321314354"), W("232143545"), W("323143545")};
  auto c = enumerate_braid_class(D(5), d[0]);
  check(members(c) == std::set<Word>(d.begin(), d.end()), "the seven members");
  auto e = [&](int i, int j) { return ordered(d[i - 1], d[j - 1]); };
  check(named_edges(c) == std::set{e(4, 5), e(4, 3), e(4, 2), e(3, 1), e(1, 2), e(1, 6), e(7, 6), e(7, 2)},
        "edge set");
  note << c.size() << " vertices, " << c.edges().size() << " edges";
}

void criterion_6(Checks& check, std::ostringstream& note) {
  const Word w = W("3231343567543231343");
  auto f = link_factorization(D(7), w);
  std::vector<Word> expected{W("3231343"), W("5"), W("6"), W("7"), W("5"), W("4"), W("3231343")};
  std::vector<Word> got;
  for (const auto& x : f.factors) got.push_back(x.word);
  check(got == expected, "seven factors");
  auto e = embed_word(D(7), w);
  check(e.cls.size() == 25, "class size 25");
  check(rank(e.cls) == 6, "rank 6");
  check(std::all_of(e.labels.begin(), e.labels.end(), [](const BitLabel& b) { return b.size() == 6; }),
        "labels of length 6");
  check(verify_isometric(braid_graph(e.cls), e.labels).isometric, "labels isometric");
  note << f.to_string();
}

void criterion_7(Checks& check, std::ostringstream& note) {
  const std::vector<Word> ladder{W("343"), W("34313"), W("3431323"), W("343132343"), W("34313234313")};
  for (std::size_t r = 1; r <= ladder.size(); ++r) {
    const auto& w = ladder[r - 1];
    const auto tag = format_word(w) + ": ";
    auto c = enumerate_braid_class(D(4), w);
    check(rank(c) == r, tag + "rank");
    check(c.size() == fib(r + 2), tag + "size F(r+2)");
    const auto bg = braid_graph(c);
    const auto cube = fibonacci_cube(static_cast<int>(r));
    auto iso = oracle::small_iso(bg, cube);
    check(iso.isomorphic && oracle::is_isomorphism(bg, cube, iso.mapping), tag + "isomorphic to the Fibonacci cube");
    check(image_is_fibonacci(c, w), tag + "Phi image is the no-11 strings");
    if (r >= 2) {
      std::vector<Word> top;
      for (Vertex v = 0; v < bg.vertex_count(); ++v) {
        if (bg.degree(v) == r) top.push_back(c.member(v));
      }
      check(top == std::vector<Word>{w}, tag + "unique degree-r vertex is the link");
    }
    note << (r > 1 ? "," : "sizes ") << c.size();
  }
}

void criterion_8(Checks& check, std::ostringstream& note) {
  auto c = enumerate_braid_class(D(4), W("343132343"));
  auto xy = partition_xy(c, W("343132343"));
  check(std::set<Word>(xy.x.begin(), xy.x.end()) ==
            Ws({"343132343", "434132343", "434123243", "341312343", "343123243"}),
        "X");
  check(std::set<Word>(xy.y.begin(), xy.y.end()) == Ws({"343132434", "434132434", "341312434"}), "Y");
  note << "|X|=" << xy.x.size() << " |Y|=" << xy.y.size();
}

void criterion_9(Checks& check, std::ostringstream& note) {
  const std::vector<Word> golden{W("45465768798"), W("54565768798"), W("54656768798"),
                                 W("54657678798"), W("54657687898"), W("54657687989")};
  for (int k = 0; k < 6; ++k) {
    check(type_a_string({6, k, 4, Sign::Plus}) == golden[static_cast<std::size_t>(k)],
          "string k=" + std::to_string(k));
  }
  auto c = enumerate_braid_class(A(9), golden[0]);
  check(members(c) == std::set<Word>(golden.begin(), golden.end()), "one braid class");
  check(oracle::small_iso(braid_graph(c), path(6)).isomorphic, "braid graph is P_6");
  auto audit = testing::audit_strings(5, 9);
  check(audit.ok(), "link iff string on A_5: " + audit.example);
  note << audit.words << " words, " << audit.links << " links";
}

void criterion_10(Checks& check, std::ostringstream& note) {
  auto c = enumerate_braid_class(At(2), W("1213121"));
  check(c.contains(W("2123212")), "pair in one class");
  auto v = equal_support_violation(c);
  check(v.has_value(), "equal support violated");
  check(equal_support_guarantee(c) == Guarantee::NotApplicable, "guarantee not applicable");
  bool refused = false;
  try {
    embed_word(At(2), W("1213121"));
  } catch (const Error& e) {
    refused = e.code() == Errc::NotTriangleFree;
  }
  check(refused, "embedding reports NotTriangleFree");
  check(class_support(c, Interval::at(4)) == std::set<Generator>{1, 2, 3}, "support at 4");
  check(class_support(c, Interval::at(6)) == std::set<Generator>{1, 2}, "support at 6");
  if (v) note << format_word(v->a) << " vs " << format_word(v->b) << " on " << to_string(v->shadow);
}

void criterion_11(Checks& check, std::ostringstream& note) {
  const std::vector<std::pair<std::string, CoxeterGraph>> systems{{"A5", A(5)}, {"D5", D(5)}, {"Dt5", Dt(5)}};
  unsigned seed = 2024;
  for (const auto& [name, g] : systems) {
    auto tally = testing::run_property_suite(g, 500, seed++, 12);
    check(tally.ok(), name + ": " + tally.summary());
    note << name << " " << tally.words << " words (" << tally.bound_equalities << " bound equalities) ";
  }
}

void criterion_12(Checks& check, std::ostringstream& note) {
  const Word w = W("4534313234313");
  auto c = enumerate_braid_class(D(5), w);
  check(c.size() == 18, "size 18");
  check(is_link(D(5), w), "link");
  check(!is_fibonacci_link(D(5), w), "not Fibonacci");
  check(!star_criterion(D(5), w), "star criterion false");
  note << "size " << c.size();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Body>> criteria{
      {"A_3 longest element Matsumoto graph", criterion_1},
      {"A_4 class of 1213243", criterion_2},
      {"A_6 box product P_4 x P_2", criterion_3},
      {"D_4 isometric dimension", criterion_4},
      {"D_5 class of 232143454", criterion_5},
      {"D_7 link factorization and embedding", criterion_6},
      {"Fibonacci ladder in D_4", criterion_7},
      {"Fibonacci partition of 343132343", criterion_8},
      {"type A strings", criterion_9},
      {"three-cycle negative controls", criterion_10},
      {"randomized property suite", criterion_11},
      {"D_5 link 4534313234313", criterion_12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks check;
    std::ostringstream note;
    try {
      criteria[i].second(check, note);
    } catch (const std::exception& e) {
      check.failed.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = check.failed.empty();
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (ok) {
      std::cout << " (" << note.str() << ")";
    } else {
      for (const auto& f : check.failed) std::cout << " [" << f << "]";
    }
    std::cout << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
