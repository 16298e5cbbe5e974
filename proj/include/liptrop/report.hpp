#pragma once

#include <cstdint>
#include <deque>
#include <string>

namespace liptrop {

/// One verified property. `witness` is empty on pass and carries the first
/// failing instance otherwise.
struct CheckResult {
  std::string check;
  bool pass = true;
  std::int64_t samples = 0;
  std::string witness;
};

struct Report {
  // Deque, not vector: suites hold references to their checks while adding
  // more, and deque keeps element references valid across push_back.
  std::deque<CheckResult> checks;

  CheckResult& add(std::string name) {
    checks.push_back(CheckResult{std::move(name), true, 0, ""});
    return checks.back();
  }

  void merge(const Report& other, const std::string& prefix = "") {
    for (const CheckResult& c : other.checks) {
      checks.push_back(c);
      if (!prefix.empty()) checks.back().check = prefix + c.check;
    }
  }

  bool all_pass() const {
    for (const CheckResult& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Records a failure witness the first time a check goes wrong.
inline void fail_check(CheckResult& check, const std::string& witness) {
  if (check.pass) {
    check.pass = false;
    check.witness = witness;
  }
}

}  // namespace liptrop
