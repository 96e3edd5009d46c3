#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "satake/satake.hpp"

namespace satake::cli {

enum class OutputMode { Text, Json };

struct CliConfig {
  OutputMode output_mode = OutputMode::Text;
  int rank_bound = kDefaultRankBound;
  bool color = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnknownName = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSelfTest = 3;

/// Runs one command line. argv[0] is the program name. Data goes to `out`,
/// diagnostics to `err`. Colour is suppressed when NO_COLOR is set.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace satake::cli
