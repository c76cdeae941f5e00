#pragma once

// Named verification suites, shared by the command line tool, the acceptance
// runner and the Python module.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hvff/report.hpp"
#include "hvff/scalar.hpp"

namespace hvff {

inline constexpr int kFockGradeCeiling = 8;
inline constexpr int kVermaGradeCeiling = 12;

class UnknownCommand : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  // Flag name (cL, cLI, h, hI, F, a, b) to a scalar literal: "3", "-1/2" or a parameter name.
  std::map<std::string, std::string> bindings;
  std::optional<int> p;
  std::optional<int> q;
  std::optional<int> N;
  std::pair<long, long> p_range{-3, 3};
  std::pair<long, long> q_range{-3, 3};
  bool numeric = false;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();

// Throws UnknownCommand, or PreconditionViolated for out-of-range grades.
Report run_suite(const RunConfig& cfg);

// "a..b" with optional signs.
std::pair<long, long> parse_range(const std::string& text);

}  // namespace hvff
