#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modkit/matrix.hpp"
#include "modkit/modular.hpp"

namespace modkit {

struct EnumOptions {
  std::int64_t budget = 1'000'000;  // DFS nodes
  double tolerance = 1e-6;          // S-commutator acceptance
  double verify_tolerance = 1e-9;   // long double re-verification
  int threads = 1;                  // 0 = hardware concurrency
};

/// Statistics of one enumeration run.
struct EnumStats {
  int cells = 0;          // T-filtered support
  int free_parameters = 0;
  std::int64_t nodes = 0;
};

/// All non-negative integer Z with Z_00 = 1 commuting with S and T, sorted
/// lexicographically on row-major entries. Throws BudgetExceeded.
std::vector<IMatrix> enumerate_invariants(const ModularData& md, const EnumOptions& opts = {},
                                          EnumStats* stats = nullptr);

/// floor(d_a d_b + 1e-9)
IMatrix entry_bounds(const std::vector<double>& d);

/// Lexicographic order on row-major entries.
bool lex_less(const IMatrix& a, const IMatrix& b);

struct InvariantFlags {
  bool symmetric = false;
  bool permutation = false;
  bool vacuum_symmetric = false;
  bool self_conjugate = false;
  IMatrix conjugate;  // Z C
};

InvariantFlags classify(const IMatrix& Z, const ModularData& md);

/// Non-negative integer b with Z = b^T b, row 0 being the vacuum row. The
/// search over Gram decompositions is exhaustive; none if Z is not of that form.
std::optional<IMatrix> type_I_factor(const IMatrix& Z);

/// Permutation theta of the rows of b with Z = sum_t b_t^T b_theta(t), if any.
std::optional<std::vector<int>> twist_factor(const IMatrix& Z, const IMatrix& b);

struct TraceCounts {
  std::int64_t trace = 0;           // #M-N sectors
  std::int64_t sum_squares = 0;     // #M-M sectors
  std::optional<std::int64_t> chiral_trace_plus;
  std::optional<std::int64_t> chiral_trace_minus;
  std::optional<std::int64_t> chiral_dim_plus;   // sum b+^2
  std::optional<std::int64_t> chiral_dim_minus;  // sum b-^2
};

TraceCounts trace_counts(const IMatrix& Z, const IMatrix* b_plus = nullptr,
                         const IMatrix* b_minus = nullptr);

/// Enumerated invariant with its classification and witnesses.
struct CouplingMatrix {
  IMatrix Z;
  InvariantFlags flags;
  TraceCounts counts;
  std::optional<IMatrix> type_I;  // b
  // twist witness against a type I parent in the same list
  std::optional<int> parent;
  std::optional<std::vector<int>> theta;

  std::string type_label() const;
};

std::vector<CouplingMatrix> enumerate(const ModularData& md, const EnumOptions& opts = {},
                                      EnumStats* stats = nullptr);

}  // namespace modkit
