#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace powham::cli {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct CheckInfo {
  int id;
  std::string_view name;
};

/// Acceptance properties, by id 1..10.
const std::vector<CheckInfo>& check_catalog();
/// Accepts an id ("3") or a name ("extremal-total"); nullopt if unknown.
std::optional<int> resolve_check(std::string_view key);
CheckResult run_check(int id, int jobs);

}  // namespace powham::cli
