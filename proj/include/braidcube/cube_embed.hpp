#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidcube/braid_class.hpp"
#include "braidcube/graph.hpp"
#include "braidcube/link.hpp"

namespace braidcube {

// Fixed-length 0/1 string; position k-1 holds bit k.
class BitLabel {
 public:
  BitLabel() = default;
  explicit BitLabel(std::string bits);
  static BitLabel zeros(std::size_t r) { return BitLabel(std::string(r, '0')); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool bit(std::size_t k) const { return bits_.at(k) == '1'; }
  const std::string& str() const noexcept { return bits_; }
  bool all_zero() const noexcept { return bits_.find('1') == std::string::npos; }

  BitLabel operator^(const BitLabel& other) const;
  BitLabel operator+(const BitLabel& other) const { return BitLabel(bits_ + other.bits_); }

  friend auto operator<=>(const BitLabel&, const BitLabel&) = default;

 private:
  std::string bits_;
};

std::size_t hamming(const BitLabel& a, const BitLabel& b);

// Bit k is 0 iff member and base agree at position 2k. Throws NotALink, NotInClass.
BitLabel phi(const BraidClass& c, const Word& base, const Word& member);

// Phi_beta(alpha); Phi_beta = Phi_alpha xor this constant.
BitLabel automorphism_shift(const BraidClass& c, const Word& alpha, const Word& beta);

struct EmbedOptions {
  bool unchecked = false;
  std::size_t cap = kDefaultCap;
};

struct Embedding {
  BraidClass cls;
  LinkFactorization factorization;
  std::vector<BitLabel> labels;  // indexed like cls.members()
  bool triangle_free = true;

  const BitLabel& label_of(const Word& member) const;
};

// Labels every member of [w] relative to w itself, concatenating Phi over the
// link factors. Refuses graphs with triangles unless `unchecked`.
Embedding embed_word(const CoxeterGraph& g, const Word& w, const EmbedOptions& options = {});

inline constexpr std::size_t kAllPairsCap = 4096;
inline constexpr std::size_t kMedianCap = 512;

struct IsometryViolation {
  Vertex u = 0;
  Vertex v = 0;
  int distance = 0;  // kUnreachable when no path
  std::size_t hamming = 0;
};

struct IsometryReport {
  bool isometric = true;
  std::size_t pairs_checked = 0;
  std::optional<IsometryViolation> violation;
};

// All-pairs comparison of graph distance and Hamming distance. Throws
// LabelCollision when two vertices share a label.
IsometryReport verify_isometric(const SimpleGraph& g, const std::vector<BitLabel>& labels);

// Vertex labels are the bit strings themselves. Throws DimensionTooLarge above 24.
SimpleGraph hypercube(int r);
SimpleGraph fibonacci_cube(int r);

std::vector<BitLabel> labels_of(const SimpleGraph& cube);

// Base must be a Fibonacci link (NotFibonacci otherwise).
bool image_is_fibonacci(const BraidClass& c, const Word& base);

// Djokovic-Winkler classes as lists of indices into g.edges(), each ascending,
// ordered by first edge. Throws Disconnected.
std::vector<std::vector<std::size_t>> theta_classes(const SimpleGraph& g);

// Number of Theta classes, after confirming Theta is transitive and the cut
// labeling is isometric. Throws NotPartialCube.
std::size_t isometric_dimension(const SimpleGraph& g);

bool is_median_graph(const SimpleGraph& g, std::size_t cap = kMedianCap);

// Probe: do the Theta classes of B(c) coincide with the edge groups sharing a shadow?
bool theta_matches_shadows(const BraidClass& c);

}  // namespace braidcube
