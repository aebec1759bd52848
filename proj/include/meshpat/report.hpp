#pragma once

#include <optional>
#include <string>
#include <vector>

namespace meshpat {

/// Outcome of one numeric check. Soft checks record conjectured or
/// misprint-suspect identities: a failing soft check is a "mismatch" and
/// never fails a run.
struct Check {
  std::string suite;
  std::string name;
  std::optional<int> n;
  bool passed = false;
  bool soft = false;
  std::string expected;
  std::string actual;
  std::string note;

  std::string status() const { return passed ? "pass" : (soft ? "mismatch" : "fail"); }
};

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void append(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  const std::vector<Check>& checks() const { return checks_; }
  bool hard_failed() const {
    for (const auto& c : checks_) {
      if (!c.passed && !c.soft) return true;
    }
    return false;
  }
  std::size_t count(bool passed, bool soft) const {
    std::size_t k = 0;
    for (const auto& c : checks_) k += (c.passed == passed && c.soft == soft);
    return k;
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace meshpat
