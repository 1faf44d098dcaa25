#pragma once

namespace modkit {

struct IsingPartition {
  double brute = 0;
  double trace = 0;
  double relative_difference() const;
};

/// Nearest-neighbour Ising model H = -J sum s s' on the M x N torus. The brute
/// force sums all 2^{MN} configurations (MN <= 24); the transfer side is
/// trace T^N with T the 2^M x 2^M row-to-row matrix, horizontal bonds split
/// evenly between neighbouring rows.
IsingPartition ising_partition(int M, int N, double beta, double J = 1.0);

}  // namespace modkit
