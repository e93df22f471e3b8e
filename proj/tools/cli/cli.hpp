#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "shapecone/exactnum.hpp"

namespace shapecone::cli {

/// Exit codes of the `shapecone` tool.
enum ExitStatus : int {
  kSuccess = 0,   // success, in cone, or all checks passed
  kNegative = 1,  // out of cone, or a verification check failed
  kUsage = 2,     // usage or parse error
};

/// Comma-separated entries, each an integer, "p/q" or a finite decimal.
/// Throws MalformedEntry / ZeroDenominator carrying the 1-based position of
/// the offending entry.
ShapeVector parse_vector(std::string_view text);

/// Runs one command line. `args` excludes the program name. `in` feeds
/// `--vector -`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace shapecone::cli
