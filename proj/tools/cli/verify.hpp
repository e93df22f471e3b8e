#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace shapecone::cli {

struct CheckOutcome {
  std::string name;
  bool passed;
  std::string detail;
};

/// Structural, decomposition and extreme-ray checks for dimension n.
/// Extreme rays are certified only when n ≤ max_extreme_n. For n = 5 the
/// four closed-form matrices are also compared entry by entry with their
/// reference values.
std::vector<CheckOutcome> run_verification(std::size_t n, std::size_t max_extreme_n);

}  // namespace shapecone::cli
