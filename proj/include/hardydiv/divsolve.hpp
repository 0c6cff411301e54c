#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "hardydiv/mac.hpp"
#include "hardydiv/weight_catalog.hpp"

namespace hardydiv {

/// Result of one constrained least-squares solve of  div v = g  on a strip
/// with zero boundary values and minimal gradient energy.
struct LocalSolveReport {
  std::int64_t subdomain = 0;
  double div_residual_rel = 0.0;  // ||div v - g||_2 / ||g||_2
  double energy = 0.0;            // int |Dv|^2
  double local_ratio = 0.0;       // ||Dv|| / ||g||
  double cd_bound = 0.0;          // 2 R_i / r_i from the star-shape certificate
  double g_l2 = 0.0;
  double mean_shift = 0.0;        // constant removed to restore compatibility
  std::int64_t outer_iterations = 0;
};

struct LocalSolution {
  StaggeredField field;
  LocalSolveReport report;
};

/// Minimizes  int |Dv|^2  subject to  div v = g  at active cell centers and
/// zero on boundary/masked faces. The dual (Schur-complement) system
/// B K^{-1} B^T lambda = g is solved by CG on the mean-zero multiplier
/// space to relative tolerance tol; K is applied exactly through a banded
/// Cholesky factorization of the per-component face Laplacians.
/// Requires |sum g| <= 1e-10 * sum |g| over active cells (compatibility).
LocalSolution local_solve(std::shared_ptr<const MacGrid> grid, std::vector<double> g,
                          double tol = 1e-10);
/// Convenience overload: samples g at active cell centers, projects out the
/// quadrature-induced mean, then solves.
LocalSolution local_solve(std::shared_ptr<const MacGrid> grid,
                          const std::function<double(double, double)>& g, double tol = 1e-10);

struct GlobalSolveReport {
  double global_ratio = 0.0;  // (int |Du|^2 x1^{2(gamma-1)} omega^{-2}) / (int |f|^2 omega^{-2})
  double main_bound = 0.0;    // gamma^2 2^{12+4 gamma} C_omega^8 C_H^2
  double c_omega = 0.0;
  double ch_upper = 0.0;      // 4 A_N for the induced Hardy sequence
  double numerator = 0.0;
  double denominator = 0.0;
  double max_div_residual_rel = 0.0;
  std::vector<LocalSolveReport> locals;
};

/// Per-strip pieces of the assembled field. Each strip carries its own
/// anisotropic MAC grid, so the global field is the sum of the zero
/// extensions of the pieces rather than data on one shared grid.
struct GlobalSolution {
  std::vector<LocalSolution> pieces;
  GlobalSolveReport report;
};

/// Full pipeline: decompose f against the partition of unity, solve
/// div v^i = g_i on every strip, extend by zero and sum. The weighted
/// gradient energy of the sum is bounded by twice the sum of the piece
/// energies (at most two pieces overlap anywhere), and that bound is what
/// global_ratio reports. f must have (near-)vanishing mean; the residual
/// quadrature mean is projected out before decomposing.
GlobalSolution global_solve(double gamma, const std::function<double(double, double)>& f,
                            const WeightSpec& omega, int n_sub, int res, double tol = 1e-10);

}  // namespace hardydiv
