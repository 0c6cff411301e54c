#pragma once

#include <string>
#include <vector>

#include "hardydiv/divsolve.hpp"

namespace hardydiv {

struct SweepRow {
  double param = 0.0;        // beta or alpha
  double bound = 0.0;        // closed-form constant bound (power) / main bound context
  double four_a_n = 0.0;     // 4 A_N for the induced Hardy sequence
  double measured = 0.0;     // measured global_ratio
  double main_bound = 0.0;
  bool finite = true;        // log-weight finiteness verdict (corollary 2)
  double quotient = 0.0;     // log-weight diagnostic (corollary 2)
  double quotient_limit = 0.0;
  bool ok = true;            // row passes every applicable bound
  std::string note;          // error text for rejected parameters
};

struct SweepReport {
  std::string name;
  double gamma = 0.0;
  std::vector<SweepRow> rows;
  bool blowup_ok = false;    // corollary 1 only
  double blowup_spread = 0.0;  // max/min of bound * (1 - r) across the approach sequence
  int fails() const;
};

/// Power-weight sweep: per beta, the closed-form constant bound, the Hardy
/// sandwich of the induced sequence, and a measured global solve on the
/// fixed test field; then the blow-up shape check along
/// beta_j = -(gamma+1)/2 + 2^-j, j = 1..8.
SweepReport reproduce_corollary1(double gamma, double p, const std::vector<double>& betas,
                                 int n_sub, int res, double tol);

/// Log-weight sweep: per alpha, the finiteness verdict with its quotient
/// diagnostic, the comparability constant, and a measured global solve.
SweepReport reproduce_corollary2(double gamma, double p, const std::vector<double>& alphas,
                                 int n_sub, int res, double tol);

}  // namespace hardydiv
