#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace qalg {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const CheckReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

}  // namespace qalg
