#include "braidcube/cli/commands.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "braidcube/cube_embed.hpp"
#include "braidcube/error.hpp"
#include "braidcube/link.hpp"

namespace braidcube::cli {

namespace {

struct Inputs {
  CoxeterGraph graph;
  Word word;
};

Inputs load_inputs(const RunConfig& cfg) {
  if (cfg.graph.empty()) throw Error(Errc::Parse, "--graph is required");
  if (cfg.word.empty()) throw Error(Errc::Parse, "--word is required");
  auto graph = load_graph(cfg.graph);
  Inputs in{graph, parse_word(cfg.word, graph)};
  if (in.word.empty()) throw Error(Errc::Parse, "--word is empty");
  validate_word(in.graph, in.word);
  return in;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join_shadows(const std::vector<Interval>& shadows) {
  std::string out;
  for (const auto& s : shadows) out += (out.empty() ? "" : " ") + to_string(s);
  return out.empty() ? "(none)" : out;
}

void print_words(std::ostream& out, const std::vector<Word>& words) {
  out << "{";
  for (std::size_t i = 0; i < words.size(); ++i) out << (i ? ", " : "") << format_word(words[i]);
  out << "}";
}

int cmd_class(const RunConfig& cfg, std::ostream& out) {
  auto in = load_inputs(cfg);
  const auto c = enumerate_braid_class(in.graph, in.word, cfg.cap);
  if (cfg.format == Format::Json) {
    out << class_to_json(c, cfg.seed_order).dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.format == Format::Dot) {
    out << class_to_dot(c);
    return kExitOk;
  }
  out << "graph: " << describe(in.graph) << "\n";
  out << "base: " << format_word(c.base()) << "\n";
  out << "members: " << c.size() << "\n";
  for (auto i : listing_order(c, cfg.seed_order)) out << "  " << format_word(c.member(i)) << "\n";
  out << "shadows: " << join_shadows(class_shadows(c)) << "\n";
  out << "rank: " << rank(c) << "\n";
  out << "edges: " << c.edges().size() << "\n";
  for (const auto& e : c.edges()) {
    out << "  " << format_word(c.member(e.a)) << " -- " << format_word(c.member(e.b)) << " "
        << to_string(Interval::shadow(e.lo)) << "\n";
  }
  return kExitOk;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out) {
  auto in = load_inputs(cfg);
  const auto report = verify_box_product(in.graph, in.word, cfg.cap);
  if (cfg.format == Format::Json) {
    out << box_report_to_json(report).dump(2) << "\n";
    return kExitOk;
  }
  out << report.factorization.to_string() << "\n";
  out << "class size: " << report.class_size << " (product of factors: " << report.product_size << ")\n";
  out << "rank: " << report.rank << " (sum of factors: " << report.rank_sum << ")\n";
  out << "box product: " << yes_no(report.passed()) << "\n";
  if (!report.failure.empty()) out << "failure: " << report.failure << "\n";
  return kExitOk;
}

int cmd_embed(const RunConfig& cfg, std::ostream& out) {
  auto in = load_inputs(cfg);
  const auto e = embed_word(in.graph, in.word, {cfg.unchecked, cfg.cap});
  const auto iso = verify_isometric(braid_graph(e.cls), e.labels);
  if (cfg.format == Format::Json) {
    out << embedding_to_json(e, iso, theta_classes(braid_graph(e.cls))).dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.format == Format::Dot) {
    out << embedding_to_dot(e);
    return kExitOk;
  }
  if (!e.triangle_free) out << "warning: graph has a three-cycle; labels are not guaranteed to be isometric\n";
  out << "factorization: " << e.factorization.to_string() << "\n";
  out << "dimension: " << (e.labels.empty() ? 0 : e.labels.front().size()) << "\n";
  for (std::size_t i = 0; i < e.cls.size(); ++i) {
    out << "  " << format_word(e.cls.member(i)) << " " << (e.labels[i].size() ? e.labels[i].str() : "(empty)") << "\n";
  }
  out << "isometric: " << yes_no(iso.isometric) << "\n";
  if (iso.violation) {
    const auto& v = *iso.violation;
    out << "violation: " << format_word(e.cls.member(v.u)) << " " << format_word(e.cls.member(v.v))
        << " distance " << v.distance << " hamming " << v.hamming << "\n";
  }
  return kExitOk;
}

std::size_t fibonacci_number(std::size_t n) {
  std::size_t a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    a += b;
    std::swap(a, b);
  }
  return a;
}

int cmd_fibonacci(const RunConfig& cfg, std::ostream& out) {
  auto in = load_inputs(cfg);
  const auto c = enumerate_braid_class(in.graph, in.word, cfg.cap);
  const auto r = rank(c);
  const bool link = is_link_class(c);
  const bool fib = link && class_shadows(c) == braid_shadows(in.graph, in.word);
  Json doc;
  doc["word"] = format_word(in.word);
  doc["link"] = link;
  doc["fibonacci"] = fib;
  doc["rank"] = r;
  doc["class_size"] = c.size();
  if (fib) {
    const auto form = fibonacci_form(in.graph, in.word, cfg.cap);
    doc["form"] = {{"s", form.s}, {"t", form.ts}};
    doc["expected_size"] = fibonacci_number(r + 2);
    doc["fibonacci_cube"] = image_is_fibonacci(c, in.word) && c.size() == fibonacci_number(r + 2);
  }
  if (link && is_triangle_free(in.graph)) doc["star_criterion"] = star_criterion(in.graph, in.word, cfg.cap);
  if (cfg.format == Format::Json) {
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "link: " << yes_no(link) << "\n";
  out << "fibonacci: " << yes_no(fib) << "\n";
  out << "rank: " << r << "\n";
  out << "class size: " << c.size() << "\n";
  if (fib) {
    out << "form: s=" << doc["form"]["s"].get<int>() << " t=" << format_word(doc["form"]["t"].get<Word>()) << "\n";
    out << "F(r+2): " << doc["expected_size"].get<std::size_t>() << "\n";
    out << "fibonacci_cube: " << yes_no(doc["fibonacci_cube"].get<bool>()) << "\n";
  }
  if (doc.contains("star_criterion")) out << "star_criterion: " << yes_no(doc["star_criterion"].get<bool>()) << "\n";
  return kExitOk;
}

int cmd_matsumoto(const RunConfig& cfg, std::ostream& out) {
  auto in = load_inputs(cfg);
  const auto mg = enumerate_matsumoto(in.graph, in.word, cfg.cap);
  if (cfg.format == Format::Dot) {
    out << matsumoto_to_dot(mg);
    return kExitOk;
  }
  const auto braid = mg.components(MoveKind::Braid);
  const auto comm = mg.components(MoveKind::Commutation);
  if (cfg.format == Format::Json) {
    Json doc;
    doc["members"] = mg.members;
    doc["braid_edges"] = mg.count(MoveKind::Braid);
    doc["commutation_edges"] = mg.count(MoveKind::Commutation);
    doc["braid_classes"] = braid;
    doc["commutation_classes"] = comm;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "reduced expressions: " << mg.members.size() << "\n";
  out << "braid edges: " << mg.count(MoveKind::Braid) << "\n";
  out << "commutation edges: " << mg.count(MoveKind::Commutation) << "\n";
  out << "braid classes: " << braid.size() << "\n";
  for (const auto& b : braid) {
    out << "  ";
    print_words(out, b);
    out << "\n";
  }
  out << "commutation classes: " << comm.size() << "\n";
  for (const auto& b : comm) {
    out << "  ";
    print_words(out, b);
    out << "\n";
  }
  return kExitOk;
}

int cmd_string(const RunConfig& cfg, std::ostream& out) {
  auto sign = parse_sign(cfg.eps.empty() ? (cfg.l <= 2 ? "0" : "+") : cfg.eps);
  if (!sign) throw Error(Errc::SpecInvalid, "--eps must be +, - or 0");
  StringSpec spec{cfg.l, cfg.k, cfg.m, *sign};
  const Word w = type_a_string(spec);
  if (cfg.format == Format::Json) {
    out << Json{{"spec", to_string(spec)}, {"word", w}}.dump(2) << "\n";
  } else {
    out << format_word(w) << "\n";
  }
  return kExitOk;
}

int cmd_theta(const RunConfig& cfg, std::ostream& out) {
  auto in = load_inputs(cfg);
  const auto c = enumerate_braid_class(in.graph, in.word, cfg.cap);
  const auto bg = braid_graph(c);
  const auto classes = theta_classes(bg);
  std::optional<std::size_t> dim;
  try {
    dim = isometric_dimension(bg);
  } catch (const Error& e) {
    if (e.code() != Errc::NotPartialCube) throw;
  }
  const bool matches = theta_matches_shadows(c);
  if (cfg.format == Format::Json) {
    Json doc;
    doc["theta_classes"] = classes;
    doc["isometric_dimension"] = dim ? Json(*dim) : Json(nullptr);
    doc["rank"] = rank(c);
    doc["matches_shadows"] = matches;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "theta classes: " << classes.size() << "\n";
  for (const auto& cls : classes) {
    out << " ";
    for (auto idx : cls) {
      const auto& e = c.edges()[idx];
      out << " " << format_word(c.member(e.a)) << "-" << format_word(c.member(e.b));
    }
    out << "\n";
  }
  out << "isometric dimension: " << (dim ? std::to_string(*dim) : "not a partial cube") << "\n";
  out << "rank: " << rank(c) << "\n";
  out << "matches shadows: " << yes_no(matches) << "\n";
  return kExitOk;
}

int cmd_median(const RunConfig& cfg, std::ostream& out) {
  auto in = load_inputs(cfg);
  const auto c = enumerate_braid_class(in.graph, in.word, cfg.cap);
  const bool median = is_median_graph(braid_graph(c));
  if (cfg.format == Format::Json) {
    out << Json{{"vertices", c.size()}, {"median", median}}.dump(2) << "\n";
  } else {
    out << "vertices: " << c.size() << "\n" << "median: " << yes_no(median) << "\n";
  }
  return kExitOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotReduced: return kExitNotReduced;
    case Errc::CapExceeded: return kExitCapExceeded;
    case Errc::NotTriangleFree: return kExitNotTriangleFree;
    case Errc::Parse:
    case Errc::OutOfRange:
    case Errc::SelfLoop:
    case Errc::RankTooSmall:
    case Errc::SpecInvalid:
    case Errc::IntervalOutOfRange: return kExitUsage;
    default: return kExitOther;
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> commands{
      {"class", cmd_class},       {"factorize", cmd_factorize}, {"embed", cmd_embed}, {"fibonacci", cmd_fibonacci},
      {"matsumoto", cmd_matsumoto}, {"string", cmd_string},     {"theta", cmd_theta}, {"median", cmd_median},
  };
  auto it = commands.find(cfg.command);
  if (it == commands.end()) {
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  }
  if (cfg.cap < 1) {
    err << "error: --cap must be at least 1\n";
    return kExitUsage;
  }
  if (cfg.format == Format::Dot && (cfg.command == "factorize" || cfg.command == "fibonacci" ||
                                    cfg.command == "string" || cfg.command == "theta" || cfg.command == "median")) {
    err << "error: --format dot is not available for " << cfg.command << "\n";
    return kExitUsage;
  }
  try {
    return it->second(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitOther;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"braidcube: braid classes and their cube embeddings in simply-laced Coxeter systems"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  std::string seed_order = "lex";
  app.add_option("--graph", cfg.graph, "Coxeter graph: family:<A|D|A~|D~>:<n> or a graph file");
  app.add_option("--word", cfg.word, "Generator indices, e.g. \"2 3 2 1 4 3 4\"");
  app.add_option("--cap", cfg.cap, "Maximum number of words to enumerate")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}))->capture_default_str();
  app.add_flag("--unchecked", cfg.unchecked, "Embed even when the graph has a three-cycle");
  app.add_option("--seed-order", seed_order, "Member listing order")
      ->check(CLI::IsMember({"lex", "bfs"}))
      ->capture_default_str();

  for (const char* name : {"class", "factorize", "embed", "fibonacci", "matsumoto", "theta", "median"}) {
    app.add_subcommand(name);
  }
  app.get_subcommand("class")->description("Braid class, shadows, rank and braid graph");
  app.get_subcommand("factorize")->description("Link factorization and box-product check");
  app.get_subcommand("embed")->description("Hypercube labels and isometry check");
  app.get_subcommand("fibonacci")->description("Fibonacci link analysis");
  app.get_subcommand("matsumoto")->description("All reduced expressions with braid and commutation edges");
  app.get_subcommand("theta")->description("Djokovic-Winkler classes of the braid graph");
  app.get_subcommand("median")->description("Median-graph test of the braid graph");
  auto* str = app.add_subcommand("string", "Type A string sigma(l,k,m,eps)");
  str->add_option("--l", cfg.l)->required();
  str->add_option("--k", cfg.k)->required();
  str->add_option("--m", cfg.m)->required();
  str->add_option("--eps", cfg.eps, "+, - or 0 (default 0 for l <= 2, + otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
  cfg.seed_order = seed_order == "bfs" ? SeedOrder::Bfs : SeedOrder::Lex;
  return run(cfg, out, err);
}

}  // namespace braidcube::cli
