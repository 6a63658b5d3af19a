#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "braidcube/braid_class.hpp"
#include "braidcube/cli/export.hpp"

namespace braidcube::cli {

enum class Format { Text, Json, Dot };

struct RunConfig {
  std::string command;
  std::string graph;
  std::string word;
  std::size_t cap = kDefaultCap;
  Format format = Format::Text;
  bool unchecked = false;
  SeedOrder seed_order = SeedOrder::Lex;
  // string command
  int l = 1;
  int k = 0;
  int m = 1;
  std::string eps;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotReduced = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitNotTriangleFree = 4;
inline constexpr int kExitOther = 5;

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and dispatches to run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidcube::cli
