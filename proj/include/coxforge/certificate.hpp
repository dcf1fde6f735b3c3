#pragma once

#include <string>
#include <vector>

#include "coxforge/errors.hpp"

namespace coxforge {

/// One named exact fact: what was computed and whether it holds.
struct CertStep {
  std::string name;
  std::string value;
  bool passed = false;
};

struct Certificate {
  std::string subject;
  std::vector<std::string> notes;
  std::vector<CertStep> steps;
  std::string conclusion;
  bool all_values_exact = true;

  void add(std::string name, std::string value, bool passed) {
    steps.push_back(CertStep{std::move(name), std::move(value), passed});
  }
  bool passed() const {
    for (const auto& s : steps)
      if (!s.passed) return false;
    return true;
  }
  /// Throws RelationFailed naming the first failing step.
  void require() const {
    for (const auto& s : steps)
      if (!s.passed) throw RelationFailed(subject + ": " + s.name + " (" + s.value + ")");
  }
  std::string to_text() const {
    std::string out = subject + "\n";
    for (const auto& n : notes) out += "  note: " + n + "\n";
    for (const auto& s : steps) out += std::string(s.passed ? "  [pass] " : "  [FAIL] ") + s.name + ": " + s.value + "\n";
    if (!conclusion.empty()) out += "  conclusion: " + conclusion + "\n";
    return out;
  }
};

}  // namespace coxforge
