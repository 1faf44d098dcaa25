#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modkit {

/// One named check with its worst residual.
struct Check {
  std::string name;
  bool pass = true;
  double residual = 0.0;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, double residual = 0.0, std::string detail = {}) {
    checks.push_back({std::move(name), pass, residual, std::move(detail)});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

std::ostream& operator<<(std::ostream& os, const Report& r);

}  // namespace modkit
