#pragma once

#include <vector>

#include "hardydiv/grid.hpp"
#include "hardydiv/weight_catalog.hpp"

namespace hardydiv {

/// Partition of unity subordinate to the dyadic strips: piecewise-linear
/// ramps in ln x1 across the middle half of each overlap B_i, so every
/// phi_i carries a genuine plateau around the panel boundary it owns. The
/// last function absorbs the tail (phi_{n_sub-1} = 1 near x1 = 0). At every
/// x1 in (0, 1) the functions sum to one and at most two are nonzero.
class PartitionOfUnity {
 public:
  explicit PartitionOfUnity(int n_sub);
  int n_sub() const { return n_sub_; }
  double value(int i, double x1) const;

 private:
  int n_sub_;
};

PartitionOfUnity build_partition_of_unity(double gamma, int n_sub);

/// Mean-zero decomposition of f subordinate to the strips: pieces g_i
/// supported on Omega_i summing back to f, each with vanishing mean, built
/// from the cut-off f_i = f phi_i and piecewise-constant corrections h_i
/// on the overlaps.
struct Decomposition {
  int n_sub = 0;
  std::vector<GridFunction> pieces;    // g_0 .. g_{n_sub-1}, all on f's grid
  std::vector<double> h;               // h[i], i = 1..n_sub-1 (h[0] unused, h_0 never exists)
  double reconstruction_max_err = 0.0; // max node error of sum(g_i) - f
  std::vector<double> piece_means;     // integral of each g_i
};

/// Requires |integral(f)| <= 1e-10 * ||f||_L1 and a grid with exactly
/// n_sub + 1 panels (the strips Omega_0..Omega_{n_sub-1} cover it).
Decomposition decompose(const GridFunction& f, const PartitionOfUnity& pou);

/// Measured decomposition constant
///   ( sum_i int |g_i|^q omega^{-q} )^{1/q} / ( int |f|^q omega^{-q} )^{1/q},
/// to compare against 2^{2+1/q} C_omega^2 C_H.
double decomposition_constant(const GridFunction& f, const Decomposition& dec,
                              const WeightSpec& omega, double q);

}  // namespace hardydiv
