#pragma once

#include <string>
#include <vector>

#include "modkit/matrix.hpp"

namespace modkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic; never contains timings
  double seconds = 0;
};

/// SU(2)_16 invariants as displayed in the |chi|^2 expansions.
IMatrix su2_16_a17();
IMatrix su2_16_d10();
IMatrix su2_16_e7();

/// Criteria 1..9. Each one is self-contained and catches its own exceptions.
std::vector<CriterionResult> run_acceptance();

/// Criteria 1..9 followed by a reproducibility check that runs them twice and
/// compares the machine rendering byte for byte.
std::vector<CriterionResult> verify_all();

/// One JSON object with id, name, pass and detail per criterion; no timings.
std::string render_machine(const std::vector<CriterionResult>& results);
/// One "PASS|FAIL <id> <name>: <detail> (<seconds>s)" line per criterion.
std::string render_text(const std::vector<CriterionResult>& results);

}  // namespace modkit
