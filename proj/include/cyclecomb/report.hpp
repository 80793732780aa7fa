#pragma once

#include <string>
#include <vector>

namespace cyclecomb {

struct Check {
  std::string name;
  bool passed = false;
  std::string details;
};

/// Result of a verification suite: one named line per assertion, machine
/// renderable as {name, passed, details[]}.
struct Report {
  std::string name;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void add(std::string check_name, bool ok, std::string details = "") {
    checks.push_back({std::move(check_name), ok, std::move(details)});
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
};

}  // namespace cyclecomb
