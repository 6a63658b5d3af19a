#include "braidcube/link.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "braidcube/error.hpp"

namespace braidcube {

namespace {

bool shadows_tile(const std::vector<Interval>& shadows, std::size_t len) {
  if (len == 1) return true;
  if (len % 2 == 0 || shadows.size() != (len - 1) / 2) return false;
  for (std::size_t i = 0; i < shadows.size(); ++i) {
    if (shadows[i].lo != static_cast<int>(2 * i + 1)) return false;
  }
  return true;
}

void require_link_class(const BraidClass& c) {
  if (!is_link_class(c)) throw Error(Errc::NotALink, format_word(c.base()) + " is not a link");
}

Word slice(const Word& w, Interval iv) {
  return {w.begin() + (iv.lo - 1), w.begin() + iv.hi};
}

}  // namespace

std::string LinkFactorization::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += " | ";
    out += format_word(factors[i].word);
  }
  return out;
}

std::vector<std::size_t> LinkFactorization::factor_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& f : factors) out.push_back(f.word.size());
  return out;
}

bool is_link_class(const BraidClass& c) { return shadows_tile(class_shadows(c), c.word_length()); }

bool is_link(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  return is_link_class(enumerate_braid_class(g, w, cap));
}

LinkFactorization link_factorization(const BraidClass& c) {
  const auto shadows = class_shadows(c);
  const int len = static_cast<int>(c.word_length());
  std::vector<Interval> spans;
  for (const auto& s : shadows) {
    if (!spans.empty() && s.lo == spans.back().hi) {
      spans.back().hi = s.hi;
    } else if (!spans.empty() && s.lo < spans.back().hi) {
      throw Error(Errc::InternalInvariantViolation,
                  "class shadow " + to_string(s) + " overlaps " + to_string(spans.back()) + " in two positions");
    } else {
      spans.push_back(s);
    }
  }
  LinkFactorization out;
  int pos = 1;
  auto run = spans.begin();
  while (pos <= len) {
    Interval span = (run != spans.end() && run->lo == pos) ? *run++ : Interval::at(pos);
    out.factors.push_back({span, slice(c.base(), span)});
    pos = span.hi + 1;
  }
  return out;
}

LinkFactorization link_factorization(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  return link_factorization(enumerate_braid_class(g, w, cap));
}

std::vector<Word> split_by(const LinkFactorization& f, const Word& member) {
  std::vector<Word> parts;
  for (const auto& factor : f.factors) parts.push_back(slice(member, factor.span));
  return parts;
}

BoxProductReport verify_box_product(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  const BraidClass whole = enumerate_braid_class(g, w, cap);
  BoxProductReport report;
  report.factorization = link_factorization(whole);
  report.class_size = whole.size();
  report.rank = rank(whole);

  std::vector<BraidClass> parts;
  for (const auto& f : report.factorization.factors) {
    parts.push_back(enumerate_braid_class(g, f.word, cap));
    report.factor_sizes.push_back(parts.back().size());
    report.factor_ranks.push_back(rank(parts.back()));
    report.product_size *= parts.back().size();
    report.rank_sum += report.factor_ranks.back();
  }
  report.sizes_match = report.class_size == report.product_size;
  report.ranks_match = report.rank == report.rank_sum;

  // Member -> mixed-radix index of its tuple of factor positions. Vertex
  // numbering agrees with the nested box_product below.
  std::vector<std::size_t> image(whole.size());
  std::set<std::size_t> used;
  for (std::size_t v = 0; v < whole.size(); ++v) {
    auto pieces = split_by(report.factorization, whole.member(v));
    std::size_t code = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      auto idx = parts[i].index_of(pieces[i]);
      if (!idx) {
        report.failure = "piece " + format_word(pieces[i]) + " of " + format_word(whole.member(v)) +
                         " is not in the class of factor " + std::to_string(i + 1);
        return report;
      }
      code = code * parts[i].size() + *idx;
    }
    if (!used.insert(code).second) {
      report.failure = "two members share the tuple of " + format_word(whole.member(v));
      return report;
    }
    image[v] = code;
    report.witness.emplace_back(whole.member(v), std::move(pieces));
  }
  if (!report.sizes_match) {
    report.failure = "class size differs from product of factor sizes";
    return report;
  }

  SimpleGraph product = braid_graph(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) product = box_product(product, braid_graph(parts[i]));
  std::set<Edge> mapped;
  for (const auto& e : whole.edges()) {
    auto a = image[e.a], b = image[e.b];
    mapped.emplace(std::min(a, b), std::max(a, b));
  }
  report.isomorphic = mapped == product.edge_set();
  if (!report.isomorphic) report.failure = "edge sets differ under the tuple map";
  return report;
}

bool is_fibonacci_link(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  const BraidClass c = enumerate_braid_class(g, w, cap);
  return is_link_class(c) && class_shadows(c) == braid_shadows(g, w);
}

FibonacciForm fibonacci_form(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  if (!is_fibonacci_link(g, w, cap)) throw Error(Errc::NotFibonacci, format_word(w));
  FibonacciForm form{w.front(), {}};
  auto broken = [&](const std::string& what) {
    return Error(Errc::InternalInvariantViolation, format_word(w) + ": " + what);
  };
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i % 2 == 0) {
      if (w[i] != form.s) throw broken("odd positions are not constant");
    } else {
      if (!g.bonded(form.s, w[i])) throw broken("even letter not bonded to the odd letter");
      form.ts.push_back(w[i]);
    }
  }
  for (std::size_t i = 0; i < form.ts.size(); ++i) {
    for (std::size_t j = i + 1; j < form.ts.size(); ++j) {
      if (form.ts[i] != form.ts[j] && g.bonded(form.ts[i], form.ts[j])) throw broken("two even letters are bonded");
    }
  }
  return form;
}

bool star_criterion(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  if (!is_link(g, w, cap)) throw Error(Errc::NotALink, format_word(w));
  if (!is_triangle_free(g)) throw Error(Errc::NotTriangleFree, describe(g));
  return is_star(induced_support_subgraph(g, {w.begin(), w.end()}).graph);
}

char sign_char(Sign s) noexcept {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
  }
  return '?';
}

std::optional<Sign> parse_sign(std::string_view text) {
  if (text == "+" || text == "plus") return Sign::Plus;
  if (text == "-" || text == "minus") return Sign::Minus;
  if (text == "0" || text == "zero") return Sign::Zero;
  return std::nullopt;
}

std::string to_string(const StringSpec& spec) {
  return "sigma(" + std::to_string(spec.l) + "," + std::to_string(spec.k) + "," + std::to_string(spec.m) + "," +
         sign_char(spec.eps) + ")";
}

Word type_a_string(const StringSpec& spec, int n) {
  const auto [l, k, m, eps] = spec;
  if (l < 1 || k < 0 || k > l - 1 || m < 1) throw Error(Errc::SpecInvalid, to_string(spec));
  if ((eps == Sign::Zero) != (l <= 2)) {
    throw Error(Errc::SpecInvalid, to_string(spec) + ": sign 0 is used exactly when l <= 2");
  }
  if (n > 0 && spec.top() > n) {
    throw Error(Errc::RankTooSmall, to_string(spec) + " needs A_" + std::to_string(spec.top()));
  }
  if (eps == Sign::Minus) {
    Word w = type_a_string({l, l - 1 - k, m, Sign::Plus}, n);
    std::reverse(w.begin(), w.end());
    return w;
  }
  // (m+1 m)(m+2 m+1)...(m+k m+k-1) [m+k] (m+k+1 m+k)...(m+l-1 m+l-2); the zero-sign
  // base cases are the l <= 2 instances of the same pattern.
  Word w;
  for (int j = 0; j < k; ++j) w.insert(w.end(), {m + j + 1, m + j});
  w.push_back(m + k);
  for (int j = k; j <= l - 2; ++j) w.insert(w.end(), {m + j + 1, m + j});
  return w;
}

std::vector<StringSpec> all_string_specs(int n) {
  std::vector<StringSpec> out;
  for (int l = 1; l <= n; ++l) {
    for (int m = 1; m + l - 1 <= n; ++m) {
      for (int k = 0; k < l; ++k) {
        if (l <= 2) {
          out.push_back({l, k, m, Sign::Zero});
        } else {
          out.push_back({l, k, m, Sign::Plus});
          out.push_back({l, k, m, Sign::Minus});
        }
      }
    }
  }
  return out;
}

Word choose_sigma(const BraidClass& c, int i) {
  require_link_class(c);
  const int r = static_cast<int>(rank(c));
  if (r < 2 || i < 1 || i > r - 1) {
    throw Error(Errc::OutOfRange, "overlap index " + std::to_string(i) + " for a link of rank " + std::to_string(r));
  }
  for (const auto& m : c.members()) {
    if (detail::shadow_at(c.graph(), m, 2 * i - 1) && detail::shadow_at(c.graph(), m, 2 * i + 1)) return m;
  }
  throw Error(Errc::NoSuchMember, "no member of [" + format_word(c.base()) + "] has shadows at " +
                                      std::to_string(2 * i - 1) + " and " + std::to_string(2 * i + 1));
}

XYPartition partition_xy(const BraidClass& c, const Word& sigma) {
  require_link_class(c);
  if (!c.contains(sigma)) throw Error(Errc::NotInClass, format_word(sigma));
  const auto pos = 2 * rank(c) - 1;  // 0-based index of position 2r
  XYPartition out;
  for (const auto& m : c.members()) (m[pos] == sigma[pos] ? out.x : out.y).push_back(m);
  return out;
}

YProbeReport probe_y_sigma(const BraidClass& c, const Word& sigma) {
  YProbeReport report;
  const auto xy = partition_xy(c, sigma);
  const int r = static_cast<int>(rank(c));
  if (r < 2 || xy.y.empty()) return report;

  std::map<Word, Word> image;
  for (const auto& b : xy.y) {
    if (!detail::shadow_at(c.graph(), b, 2 * r - 1)) return report;
    Word moved = apply_braid_move(c.graph(), b, 2 * r - 1);
    moved.resize(moved.size() - 4);
    image.emplace(b, std::move(moved));
  }
  report.moves_defined = true;

  std::set<Word> targets;
  for (const auto& [b, t] : image) targets.insert(t);
  report.injective = targets.size() == image.size();
  report.candidate = *targets.begin();

  const BraidClass target = enumerate_braid_class(c.graph(), *report.candidate);
  report.image_is_class = std::set<Word>(target.members().begin(), target.members().end()) == targets;
  if (!report.injective || !report.image_is_class) return report;

  std::set<std::pair<Word, Word>> induced, expected;
  for (const auto& e : c.edges()) {
    auto ia = image.find(c.member(e.a)), ib = image.find(c.member(e.b));
    if (ia != image.end() && ib != image.end()) induced.emplace(std::minmax(ia->second, ib->second));
  }
  for (const auto& e : target.edges()) expected.emplace(target.member(e.a), target.member(e.b));
  report.edges_preserved = induced == expected;
  return report;
}

}  // namespace braidcube
