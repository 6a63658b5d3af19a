#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "braidcube/braid_class.hpp"
#include "braidcube/error.hpp"
#include "braidcube/coxeter.hpp"
#include "braidcube/word.hpp"

namespace testing {

using namespace braidcube;

// "2321434" -> {2,3,2,1,4,3,4}
inline Word W(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(c - '0');
  return w;
}

inline std::vector<Word> Ws(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.push_back(W(s));
  return out;
}

inline std::set<Word> set_of(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

inline std::pair<Word, Word> ordered(const Word& a, const Word& b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

inline CoxeterGraph A(int n) { return standard_family(Family::A, n); }
inline CoxeterGraph D(int n) { return standard_family(Family::D, n); }
inline CoxeterGraph At(int n) { return standard_family(Family::AffineA, n); }
inline CoxeterGraph Dt(int n) { return standard_family(Family::AffineD, n); }

// Grows a word one letter at a time, keeping only reduced extensions.
inline Word random_reduced_word(const CoxeterGraph& g, std::size_t length, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, g.size());
  Word w;
  int stalls = 0;
  while (w.size() < length && stalls < 64) {
    w.push_back(pick(rng));
    if (is_reduced(g, w)) {
      stalls = 0;
    } else {
      w.pop_back();
      ++stalls;
    }
  }
  return w;
}

// Error code raised by f, failing the test when nothing is thrown.
template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::Parse;
}

inline std::size_t fib(std::size_t n) {
  std::size_t a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    a += b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace testing
