#include "braidcube/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "braidcube/error.hpp"

namespace braidcube {

namespace {

void check_interval(const Word& w, Interval iv) {
  if (iv.lo < 1 || iv.hi < iv.lo || iv.hi > static_cast<int>(w.size())) {
    throw Error(Errc::IntervalOutOfRange,
                to_string(iv) + " for a word of length " + std::to_string(w.size()));
  }
}

void require_reduced(const CoxeterGraph& g, const Word& w) {
  if (!is_reduced(g, w)) throw Error(Errc::NotReduced, format_word(w) + " is not reduced");
}

}  // namespace

std::string to_string(const Interval& iv) {
  if (iv.lo == iv.hi) return "[" + std::to_string(iv.lo) + "]";
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

Word parse_word(std::string_view text) {
  Word w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw Error(Errc::Parse, "bad generator '" + token + "'");
    }
    try {
      w.push_back(std::stoi(token));
    } catch (const std::out_of_range&) {
      throw Error(Errc::Parse, "generator '" + token + "' is too large");
    }
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return w;
}

Word parse_word(std::string_view text, const CoxeterGraph& g) {
  const bool run_together = text.find_first_of(" \t\r\n,") == std::string_view::npos;
  if (!run_together || g.size() > 9) return parse_word(text);
  Word w;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(Errc::Parse, std::string("bad generator '") + c + "'");
    w.push_back(c - '0');
  }
  return w;
}

std::string format_word(const Word& w) {
  const bool compact = std::all_of(w.begin(), w.end(), [](Generator s) { return s >= 0 && s <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letters.
  std::size_t h = 1469598103934665603ull;
  for (Generator s : w) {
    h ^= static_cast<std::size_t>(s);
    h *= 1099511628211ull;
  }
  return h;
}

void validate_word(const CoxeterGraph& g, const Word& w) {
  for (Generator s : w) {
    if (!g.contains(s)) {
      throw Error(Errc::OutOfRange,
                  "letter " + std::to_string(s) + " not in 1.." + std::to_string(g.size()));
    }
  }
}

std::set<Generator> local_support(const Word& w, Interval iv) {
  check_interval(w, iv);
  return {w.begin() + (iv.lo - 1), w.begin() + iv.hi};
}

RootCoordinates simple_root(const CoxeterGraph& g, Generator s) {
  if (!g.contains(s)) throw Error(Errc::OutOfRange, "generator " + std::to_string(s));
  RootCoordinates v(static_cast<std::size_t>(g.size()), 0);
  v[static_cast<std::size_t>(s - 1)] = 1;
  return v;
}

bool is_positive_root(const RootCoordinates& v) {
  bool nonzero = false;
  for (long long c : v) {
    if (c < 0) return false;
    if (c != 0) nonzero = true;
  }
  return nonzero;
}

RootCoordinates reflect(const CoxeterGraph& g, Generator s, RootCoordinates v) {
  if (!g.contains(s)) throw Error(Errc::OutOfRange, "generator " + std::to_string(s));
  // <v, alpha_s^vee> = sum_t A[s][t] v_t with A the Cartan matrix.
  long long pairing = 2 * v[static_cast<std::size_t>(s - 1)];
  for (Generator t : g.neighbors(s)) pairing -= v[static_cast<std::size_t>(t - 1)];
  v[static_cast<std::size_t>(s - 1)] -= pairing;
  return v;
}

bool is_reduced(const CoxeterGraph& g, const Word& w) {
  validate_word(g, w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    RootCoordinates v = simple_root(g, w[i]);
    for (std::size_t j = i; j-- > 0;) v = reflect(g, w[j], std::move(v));
    if (!is_positive_root(v)) return false;
  }
  return true;
}

bool Fingerprint::is_identity() const {
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (at(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

Fingerprint group_element_fingerprint(const CoxeterGraph& g, const Word& w) {
  validate_word(g, w);
  const int n = g.size();
  Fingerprint fp{n, std::vector<long long>(static_cast<std::size_t>(n) * n, 0)};
  // Column t is w(alpha_t) = s_{x1}(...s_{xm}(alpha_t)).
  for (Generator t = 1; t <= n; ++t) {
    RootCoordinates v = simple_root(g, t);
    for (std::size_t j = w.size(); j-- > 0;) v = reflect(g, w[j], std::move(v));
    for (int r = 0; r < n; ++r) fp.entries[static_cast<std::size_t>(r * n + (t - 1))] = v[r];
  }
  return fp;
}

std::vector<int> detail::shadow_starts(const CoxeterGraph& g, const Word& w) {
  std::vector<int> starts;
  for (int lo = 1; lo + 2 <= static_cast<int>(w.size()); ++lo) {
    if (shadow_at(g, w, lo)) starts.push_back(lo);
  }
  return starts;
}

std::vector<Interval> braid_shadows(const CoxeterGraph& g, const Word& w) {
  require_reduced(g, w);
  std::vector<Interval> out;
  for (int lo : detail::shadow_starts(g, w)) out.push_back(Interval::shadow(lo));
  return out;
}

Word apply_braid_move(const CoxeterGraph& g, const Word& w, int lo) {
  validate_word(g, w);
  if (lo < 1 || !detail::shadow_at(g, w, lo)) {
    throw Error(Errc::NotAShadow, to_string(Interval::shadow(lo)) + " in " + format_word(w));
  }
  Word out = w;
  const auto i = static_cast<std::size_t>(lo - 1);
  std::swap(out[i], out[i + 1]);
  out[i + 2] = out[i];
  return out;
}

Word apply_commutation_move(const CoxeterGraph& g, const Word& w, int lo) {
  validate_word(g, w);
  if (lo < 1 || !detail::commutation_at(g, w, lo)) {
    throw Error(Errc::NotACommutation, "positions " + std::to_string(lo) + "," +
                                           std::to_string(lo + 1) + " in " + format_word(w));
  }
  Word out = w;
  std::swap(out[static_cast<std::size_t>(lo - 1)], out[static_cast<std::size_t>(lo)]);
  return out;
}

}  // namespace braidcube
