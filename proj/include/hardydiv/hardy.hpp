#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace hardydiv {

/// Conjugate exponent q = p/(p-1). Throws std::domain_error for p <= 1.
double conjugate_exponent(double p);

/// A pair of conjugate exponents with 1/p + 1/q = 1.
struct Exponents {
  double p;
  double q;
  static Exponents from_p(double p);
};

/// A positive sequence weight w_1, w_2, ..., either tabulated or lazily
/// generated. Generators are 1-based. A weight may additionally carry a
/// log-scale generator returning ln(w_i); this enables the scale-free
/// evaluation path of characterization_A for sequences whose raw terms
/// underflow or overflow (geometric and log-perturbed-geometric families).
class SequenceWeight {
 public:
  using Generator = std::function<double(std::int64_t)>;

  static SequenceWeight from_generator(Generator g);
  static SequenceWeight from_log_generator(Generator log_g);
  static SequenceWeight from_table(std::vector<double> terms);

  /// Term w_i, 1-based. Throws std::invalid_argument on a non-positive or
  /// non-finite term, std::out_of_range past the end of a table.
  double term(std::int64_t i) const;

  /// ln(w_i); exact for log-generated weights, ln(term(i)) otherwise.
  double log_term(std::int64_t i) const;

  bool extendable() const { return static_cast<bool>(gen_) || static_cast<bool>(log_gen_); }
  bool has_log() const { return static_cast<bool>(log_gen_); }
  std::int64_t table_size() const { return static_cast<std::int64_t>(table_.size()); }

 private:
  SequenceWeight() = default;
  Generator gen_;
  Generator log_gen_;
  std::vector<double> table_;
};

struct CharacterizationResult {
  double value = 0.0;       // A_N, or +inf on overflow
  std::int64_t k_star = 0;  // smallest maximizing k
  bool finite = true;       // false iff an intermediate overflowed
};

/// Andersen-Heinig constant at truncation N:
///   A_N = sup_{1<=k<=N} (sum_{i=k..N} u_i)^{1/p} (sum_{i=1..k} v_i^{1-q})^{1/q}
/// Tail sums are accumulated from the largest index down. When both weights
/// carry log generators the supremum is evaluated in a scale-free form, so
/// geometric families work at truncations far past the underflow point of
/// their raw terms. Non-finite intermediates promote the verdict to +inf.
CharacterizationResult characterization_A(const SequenceWeight& u, const SequenceWeight& v,
                                          double p, std::int64_t n);

struct HardyReport {
  double a = 0.0;
  double lower = 0.0;  // A_N
  double upper = 0.0;  // 4 A_N
  std::int64_t k_star = 0;
  bool divergent = false;
  double empirical_lower = std::numeric_limits<double>::quiet_NaN();
};

/// Sandwich [A_N, 4 A_N] for the optimal constant, with a divergence verdict:
/// A_N is flagged divergent if it grows by more than tol_growth under each of
/// two consecutive doublings of the truncation (requires extendable weights).
HardyReport hardy_bounds(const SequenceWeight& u, const SequenceWeight& v, double p,
                         std::int64_t n, double tol_growth = 1e-3);

/// (Ta)_j = a_1 + ... + a_j. Throws std::invalid_argument on negative terms.
std::vector<double> apply_hardy_operator(std::span<const double> a);
/// (T*b)_i = b_i + ... + b_n.
std::vector<double> apply_dual_operator(std::span<const double> b);

struct EmpiricalBestConstant {
  double ratio_p = 0.0;  // best  sum u_j (Ta)_j^p / sum v_j a_j^p  found
  double ratio = 0.0;    // its p-th root, a certified lower bound on C_H
  std::int64_t iterations = 0;
};

/// Lower-bounds the optimal constant by maximizing the Hardy ratio over
/// trial sequences, starting from a_k = k^{-1/p-0.01}. For p = 2 this is
/// power iteration on the symmetrized weighted operator; otherwise projected
/// gradient ascent. Any feasible iterate certifies its own ratio, so
/// ratio <= 4 A_N always holds at matching truncation.
EmpiricalBestConstant empirical_best_constant(const SequenceWeight& u, const SequenceWeight& v,
                                              double p, std::int64_t n, std::int64_t budget);

/// Weighted operator norm of the primal Hardy operator,
///   sup_a ||Ta||_{l^2_u} / ||a||_{l^2_v},
/// by power iteration to relative tolerance tol.
double hardy_operator_norm(std::span<const double> u, std::span<const double> v,
                           std::int64_t iters = 2000, double tol = 1e-12);
/// Weighted operator norm of the dual (suffix-sum) operator,
///   sup_b ||T*b||_{l^2_{v^{-1}}} / ||b||_{l^2_{u^{-1}}}.
double dual_operator_norm(std::span<const double> u, std::span<const double> v,
                          std::int64_t iters = 2000, double tol = 1e-12);

struct DualPair {
  SequenceWeight u;  // tabulated, length n
  SequenceWeight v;
  double exponent;   // q; the dual inequality lives at the conjugate exponent
};

/// Expresses the dual (suffix-sum) Hardy inequality as an instance of the
/// primal one by index reversal at truncation n. The characterization
/// constant of the returned pair at exponent q equals that of (u, v) at p.
DualPair dual_weights(const SequenceWeight& u, const SequenceWeight& v, double p,
                      std::int64_t n);
DualPair dual_weights(const SequenceWeight& u, double p, std::int64_t n);

}  // namespace hardydiv
