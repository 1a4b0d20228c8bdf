// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: powham_acceptance [--jobs N] [ID ...]

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "powham_cli/checks.hpp"

int main(int argc, char** argv) {
  using namespace powham::cli;
  int jobs = 1;
  if (const char* env = std::getenv("POWHAM_JOBS")) jobs = std::max(1, std::atoi(env));
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--jobs" && i + 1 < argc) {
      jobs = std::max(1, std::atoi(argv[++i]));
      continue;
    }
    const auto id = resolve_check(arg);
    if (!id) {
      std::cerr << "unknown criterion '" << arg << "'\n";
      return 2;
    }
    ids.push_back(*id);
  }
  if (ids.empty())
    for (const auto& c : check_catalog()) ids.push_back(c.id);

  int failures = 0;
  for (int id : ids) {
    CheckResult r;
    try {
      r = run_check(id, jobs);
    } catch (const std::exception& e) {
      r.id = id;
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
      for (const auto& c : check_catalog())
        if (c.id == id) r.name = c.name;
    }
    std::cout << fmt::format("{} {} {} ({:.1f}s) {}\n", r.pass ? "PASS" : "FAIL", r.id, r.name,
                             r.seconds, r.detail)
              << std::flush;
    if (!r.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
