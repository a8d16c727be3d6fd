#pragma once

#include <string>
#include <vector>

namespace qalg {

struct Clause {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Clause-by-clause outcome of a verification.
struct Report {
  std::vector<Clause> clauses;

  void add(std::string name, bool passed, std::string detail = {}) {
    clauses.push_back({std::move(name), passed, std::move(detail)});
  }
  bool passed() const {
    for (const auto& c : clauses)
      if (!c.passed) return false;
    return true;
  }
  const Clause* first_failure() const {
    for (const auto& c : clauses)
      if (!c.passed) return &c;
    return nullptr;
  }
  const Clause* find(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace qalg
