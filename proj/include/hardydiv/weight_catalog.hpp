#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "hardydiv/hardy.hpp"

namespace hardydiv {

/// Weight families omega(x1) on the cusp domain.
///   Power(beta):     omega(x1) = x1^beta
///   LogPower(alpha): omega(x1) = (1 - ln x1)^alpha
///   Tabulated:       monotone linear interpolation in ln x1 between samples
class WeightSpec {
 public:
  enum class Kind { Power, LogPower, Tabulated };

  static WeightSpec power(double beta);
  static WeightSpec log_power(double alpha);
  static WeightSpec tabulated(std::vector<double> x, std::vector<double> w);
  /// Two-column CSV (x1, omega) with strictly increasing x1 in (0, 1].
  static WeightSpec from_csv(const std::filesystem::path& path);

  double operator()(double x1) const;
  double log_value(double x1) const;  // ln omega(x1), exact for the closed-form kinds
  /// ln omega at x1 = e^{lx}; usable past the underflow point of x1 itself.
  double log_value_from_logx(double lx) const;

  Kind kind() const { return kind_; }
  double beta() const { return param_; }
  double alpha() const { return param_; }

 private:
  Kind kind_ = Kind::Power;
  double param_ = 0.0;
  std::vector<double> tab_logx_, tab_logw_;
};

struct AdmissibilityReport {
  double c_omega = 1.0;
  bool integrable = false;  // omega^p in L1(Omega)
  std::vector<double> per_subdomain_ratios;  // sup/inf over Omega_i, i = 0..i_max
};

/// Sup/inf comparability constant over the dyadic strips and the
/// integrability verdict for omega^p on Omega. For the closed-form kinds the
/// reported C_omega includes the analytic supremum over all i (2^{2|beta|}
/// for Power, (1 + 2 ln 2)^{|alpha|} for LogPower).
AdmissibilityReport admissibility(const WeightSpec& w, double p, double gamma,
                                  std::int64_t i_max);

/// The induced Hardy sequence u_i = |Omega_i| * omega(2^-i)^p, i = 1..n,
/// carried as a log-generated weight so deep truncations stay usable.
SequenceWeight hardy_sequence(const WeightSpec& w, double gamma, double p, std::int64_t n);

/// Closed-form bound on the optimal Hardy constant for power weights:
///   C_H < 4 (1/(r(1-r)))^{1/p} (1/(r^{1-q}-1))^{1/q},  r = 2^{-p beta - gamma - 1}.
/// Throws std::domain_error when r >= 1 (inadmissible beta).
double power_ch_bound(double beta, double gamma, double p);

struct LogWeightResult {
  double a = 0.0;          // A_N for the log-power sequence
  bool finite = false;     // A_N stabilized under doubling
  double quotient = 0.0;   // tail-vs-integral diagnostic at N
  double quotient_limit = 0.0;  // r~ / ln r~
};

/// A_N for omega = (1 - ln x1)^alpha together with the convergence
/// diagnostic of the integral quotient toward r~/ln(r~), where
/// r~ = 2^{(gamma+1)(q-1)}.
LogWeightResult log_weight_A(double alpha, double gamma, double p, std::int64_t n);

struct CounterexampleIntegrals {
  double l1 = 0.0;          // truncated L1 mass, ln(1 - ln eps); unbounded as eps -> 0
  double weighted_l2 = 0.0; // truncated weighted L2 mass, 1 - 1/(1 - ln eps); bounded by 1
};

/// Closed-form truncated integrals of f(x) = (1 - ln x1)^{-1} x1^{-gamma-1}
/// over Omega ∩ {x1 > eps}, at the borderline weight beta = -(gamma+1)/2.
CounterexampleIntegrals counterexample_integrals(double gamma, double eps);

}  // namespace hardydiv
