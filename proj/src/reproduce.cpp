#include "hardydiv/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardydiv/testfields.hpp"
#include "hardydiv/weight_catalog.hpp"

namespace hardydiv {

int SweepReport::fails() const {
  int n = 0;
  for (const auto& r : rows)
    if (!r.ok) ++n;
  return n;
}

namespace {

SweepRow solve_row(double param, const WeightSpec& omega, double gamma, int n_sub, int res,
                   double tol) {
  SweepRow row;
  row.param = param;
  const auto f = standard_test_field(gamma, n_sub, 0);
  const auto sol = global_solve(gamma, f, omega, n_sub, res, tol);
  row.measured = sol.report.global_ratio;
  row.main_bound = sol.report.main_bound;
  row.four_a_n = sol.report.ch_upper;
  row.ok = row.measured <= row.main_bound;
  return row;
}

}  // namespace

SweepReport reproduce_corollary1(double gamma, double p, const std::vector<double>& betas,
                                 int n_sub, int res, double tol) {
  if (p != 2.0) throw std::domain_error("global solves are implemented for p = 2 only");
  SweepReport rep;
  rep.name = "corollary1";
  rep.gamma = gamma;
  const double beta_min = -(gamma + 1.0) / 2.0;
  for (double beta : betas) {
    if (!(beta > beta_min)) {
      SweepRow row;  // error entry, not a bound violation: the run continues
      row.param = beta;
      row.note = "beta <= -(gamma+1)/2: weight inadmissible, skipped";
      rep.rows.push_back(row);
      continue;
    }
    SweepRow row = solve_row(beta, WeightSpec::power(beta), gamma, n_sub, res, tol);
    row.bound = power_ch_bound(beta, gamma, p);
    // at p = 2 the closed form equals the limit of 4 A_N exactly; allow rounding
    row.ok = row.ok && row.four_a_n <= row.bound * (1.0 + 1e-11);
    rep.rows.push_back(row);
  }
  // blow-up shape: bound(beta_j) * (1 - r_j) pinned within a factor 2
  double lo = 0.0, hi = 0.0;
  for (int j = 1; j <= 8; ++j) {
    const double beta = beta_min + std::exp2(-static_cast<double>(j));
    const double r = std::exp2(-p * beta - gamma - 1.0);
    const double val = power_ch_bound(beta, gamma, p) * (1.0 - r);
    if (j == 1) {
      lo = hi = val;
    } else {
      lo = std::min(lo, val);
      hi = std::max(hi, val);
    }
  }
  rep.blowup_spread = hi / lo;
  rep.blowup_ok = rep.blowup_spread <= 2.0;
  return rep;
}

SweepReport reproduce_corollary2(double gamma, double p, const std::vector<double>& alphas,
                                 int n_sub, int res, double tol) {
  if (p != 2.0) throw std::domain_error("global solves are implemented for p = 2 only");
  SweepReport rep;
  rep.name = "corollary2";
  rep.gamma = gamma;
  for (double alpha : alphas) {
    SweepRow row = solve_row(alpha, WeightSpec::log_power(alpha), gamma, n_sub, res, tol);
    const auto lw = log_weight_A(alpha, gamma, p, 10000);
    row.finite = lw.finite;
    row.quotient = lw.quotient;
    row.quotient_limit = lw.quotient_limit;
    row.four_a_n = 4.0 * lw.a;
    row.ok = row.ok && row.finite;
    rep.rows.push_back(row);
  }
  rep.blowup_ok = true;  // not applicable
  return rep;
}

}  // namespace hardydiv
