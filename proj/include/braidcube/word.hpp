#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "braidcube/coxeter.hpp"

namespace braidcube {

using Word = std::vector<Generator>;

// Closed interval [lo, hi] of 1-based positions; lo == hi is the degenerate [[lo]].
struct Interval {
  int lo = 1;
  int hi = 1;

  static Interval at(int position) { return {position, position}; }
  static Interval shadow(int lo) { return {lo, lo + 2}; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

// Accepts whitespace or comma separated indices ("2 3 2 1", "2,3,2,1").
Word parse_word(std::string_view text);
// Same, but when g has at most 9 generators a separator-free string such as
// "2321434" is read one digit per letter.
Word parse_word(std::string_view text, const CoxeterGraph& g);

// Letters run together when every letter is a single digit ("2321434"),
// otherwise they are separated by spaces.
std::string format_word(const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Throws OutOfRange if a letter is outside 1..n.
void validate_word(const CoxeterGraph& g, const Word& w);

std::set<Generator> local_support(const Word& w, Interval iv);

// Coordinates in the simple-root basis; index i holds the coefficient of alpha_{i+1}.
using RootCoordinates = std::vector<long long>;

RootCoordinates simple_root(const CoxeterGraph& g, Generator s);
bool is_positive_root(const RootCoordinates& v);

// s(v) = v - <v, alpha_s^vee> alpha_s in the integral geometric representation.
RootCoordinates reflect(const CoxeterGraph& g, Generator s, RootCoordinates v);

// Exchange-condition test: every prefix must send the next simple root to a positive root.
bool is_reduced(const CoxeterGraph& g, const Word& w);

// Matrix of the element in the geometric representation (columns are images
// of the simple roots). Faithful, so equal fingerprints mean equal elements.
struct Fingerprint {
  int n = 0;
  std::vector<long long> entries;  // row-major n x n

  long long at(int row, int col) const { return entries[static_cast<std::size_t>(row * n + col)]; }
  bool is_identity() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint group_element_fingerprint(const CoxeterGraph& g, const Word& w);

// All [i, i+2] with w[i] = w[i+2] bonded to w[i+1], ascending. Requires reduced input.
std::vector<Interval> braid_shadows(const CoxeterGraph& g, const Word& w);

// sts -> tst at positions lo..lo+2. Requires that interval to be a braid shadow.
Word apply_braid_move(const CoxeterGraph& g, const Word& w, int lo);

// Swaps positions lo and lo+1 when m(w[lo], w[lo+1]) = 2.
Word apply_commutation_move(const CoxeterGraph& g, const Word& w, int lo);

namespace detail {

// Unchecked predicates on 1-based positions; used by the enumeration kernels.
inline bool shadow_at(const CoxeterGraph& g, const Word& w, int lo) {
  const auto i = static_cast<std::size_t>(lo - 1);
  return i + 2 < w.size() && w[i] == w[i + 2] && g.bonded(w[i], w[i + 1]);
}

inline bool commutation_at(const CoxeterGraph& g, const Word& w, int lo) {
  const auto i = static_cast<std::size_t>(lo - 1);
  return i + 1 < w.size() && w[i] != w[i + 1] && !g.bonded(w[i], w[i + 1]);
}

std::vector<int> shadow_starts(const CoxeterGraph& g, const Word& w);

}  // namespace detail

}  // namespace braidcube
