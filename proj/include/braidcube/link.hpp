#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidcube/braid_class.hpp"

namespace braidcube {

struct LinkFactor {
  Interval span;
  Word word;
};

struct LinkFactorization {
  std::vector<LinkFactor> factors;

  // "3231343 | 5 | 6"
  std::string to_string() const;
  std::vector<std::size_t> factor_lengths() const;
};

// True for a single letter, or odd length with class shadows [1,3],[3,5],...,[len-2,len].
bool is_link(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCap);
bool is_link_class(const BraidClass& c);

LinkFactorization link_factorization(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCap);
LinkFactorization link_factorization(const BraidClass& c);

// Splits a member of a class into the pieces dictated by the factor spans.
std::vector<Word> split_by(const LinkFactorization& f, const Word& member);

struct BoxProductReport {
  LinkFactorization factorization;
  std::size_t class_size = 0;
  std::size_t product_size = 1;
  std::size_t rank = 0;
  std::size_t rank_sum = 0;
  std::vector<std::size_t> factor_sizes;
  std::vector<std::size_t> factor_ranks;
  bool sizes_match = false;
  bool ranks_match = false;
  bool isomorphic = false;
  // member -> its factor pieces; an explicit isomorphism onto the box product
  // when `isomorphic` holds.
  std::vector<std::pair<Word, std::vector<Word>>> witness;
  std::string failure;

  bool passed() const { return sizes_match && ranks_match && isomorphic; }
};

BoxProductReport verify_box_product(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCap);

bool is_fibonacci_link(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCap);

// phi = s t_1 s t_2 ... s t_r s
struct FibonacciForm {
  Generator s = 0;
  std::vector<Generator> ts;
};

// Throws NotFibonacci, or InternalInvariantViolation if a Fibonacci link fails
// to have the expected shape.
FibonacciForm fibonacci_form(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCap);

// Whether the support of the link induces a star. Throws NotALink, NotTriangleFree.
bool star_criterion(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCap);

enum class Sign { Plus, Minus, Zero };
char sign_char(Sign s) noexcept;
std::optional<Sign> parse_sign(std::string_view text);

struct StringSpec {
  int l = 1;
  int k = 0;
  int m = 1;
  Sign eps = Sign::Zero;

  // Highest generator the string uses.
  int top() const { return m + l - 1; }
  friend bool operator==(const StringSpec&, const StringSpec&) = default;
};

std::string to_string(const StringSpec& spec);

// Throws SpecInvalid for a bad quadruple (zero sign exactly when l <= 2), and
// RankTooSmall when n > 0 and A_n does not contain the letters.
Word type_a_string(const StringSpec& spec, int n = 0);

// Every valid quadruple whose string lives in A_n.
std::vector<StringSpec> all_string_specs(int n);

// Lexicographically least member with both [2i-1,2i+1] and [2i+1,2i+3] as
// braid shadows. Throws NotALink, OutOfRange for bad i, NoSuchMember.
Word choose_sigma(const BraidClass& c, int i);

struct XYPartition {
  std::vector<Word> x;  // agree with sigma at position 2r
  std::vector<Word> y;
};

XYPartition partition_xy(const BraidClass& c, const Word& sigma);

// Experimental: does B[Y_sigma] look like the braid graph of a link? Each
// member of Y is sent to its braid move at [2r-1,2r+1] with the last four
// letters dropped; the probe reports whether that map is a graph isomorphism
// onto a single braid class.
struct YProbeReport {
  bool moves_defined = false;
  bool injective = false;
  bool image_is_class = false;
  bool edges_preserved = false;
  std::optional<Word> candidate;

  bool matches() const { return moves_defined && injective && image_is_class && edges_preserved; }
};

YProbeReport probe_y_sigma(const BraidClass& c, const Word& sigma);

}  // namespace braidcube
