#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperlag::tools {

struct CheckResult {
  std::string id;
  std::string name;
  std::string expected;
  std::string measured;
  std::string tolerance;
  bool passed = false;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 1;
  std::string version;
  std::optional<double> wall_time_s;

  bool passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  int k_max = 5;
  std::uint64_t seed = 1;
  long precision_bits = 256;
  int threads = 1;
  int property_instances = 200;
};

// Runs the verification checks scaled by k_max: Lagrangians of P_k against
// the nested radicals, closed-form optimal vectors, the integer tower and its
// certificates, P+s, minimality, named patterns, blowup densities and the
// randomized property checks.
RunReport run_verify_all(const VerifyOptions& options);

std::string format_table(const RunReport& report);
std::string to_json(const RunReport& report);

const char* tool_version();

}  // namespace hyperlag::tools
