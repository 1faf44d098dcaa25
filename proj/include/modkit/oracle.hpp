#pragma once

#include <vector>

#include "modkit/matrix.hpp"
#include "modkit/modular.hpp"

namespace modkit {

/// Reference enumeration: every integer Z with 0 <= Z_ab <= floor(d_a d_b),
/// Z_00 = 1, commuting with T and S, by plain odometer over the cells. With
/// t_filter the odometer only visits cells with equal twists; otherwise it
/// visits all n^2 cells and tests T-commutation numerically. Sorted
/// lexicographically. Intended for n <= 7.
std::vector<IMatrix> brute_force_invariants(const ModularData& md, bool t_filter = true,
                                            double tol = 1e-6);

}  // namespace modkit
