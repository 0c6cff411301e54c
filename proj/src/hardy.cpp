#include "hardydiv/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardydiv/kernels.hpp"

namespace hardydiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_truncation(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("truncation must be >= 1");
}

std::vector<double> materialize(const SequenceWeight& w, std::int64_t n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = w.term(i);
  return out;
}

// Running sum kept as s * exp(m) with s in [1, 2N]; immune to under/overflow.
struct ScaledSum {
  double m = -kInf;
  double s = 0.0;
  void add_log(double lt) {
    if (s == 0.0) {
      m = lt;
      s = 1.0;
      return;
    }
    if (lt <= m) {
      s += std::exp(lt - m);
    } else {
      s = s * std::exp(m - lt) + 1.0;
      m = lt;
    }
  }
  double log_value() const { return s == 0.0 ? -kInf : m + std::log(s); }
};

CharacterizationResult characterization_scaled(const SequenceWeight& u, const SequenceWeight& v,
                                               double p, std::int64_t n) {
  const double q = conjugate_exponent(p);
  std::vector<double> log_head(static_cast<std::size_t>(n));
  ScaledSum head;  // sum_{i<=k} v_i^{1-q}
  for (std::int64_t i = 1; i <= n; ++i) {
    head.add_log((1.0 - q) * v.log_term(i));
    log_head[static_cast<std::size_t>(i - 1)] = head.log_value();
  }
  ScaledSum tail;  // sum_{i>=k} u_i, accumulated from the top index down
  double best = -kInf;
  std::int64_t k_star = n;
  for (std::int64_t k = n; k >= 1; --k) {
    tail.add_log(u.log_term(k));
    const double lp = tail.log_value() / p + log_head[static_cast<std::size_t>(k - 1)] / q;
    if (lp >= best) {
      best = lp;
      k_star = k;
    }
  }
  return {std::exp(best), k_star, true};
}

CharacterizationResult characterization_direct(const SequenceWeight& u, const SequenceWeight& v,
                                               double p, std::int64_t n) {
  const double q = conjugate_exponent(p);
  const auto uv = materialize(u, n);
  std::vector<double> head(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i)
    head[static_cast<std::size_t>(i - 1)] = std::pow(v.term(i), 1.0 - q);
  kernels::prefix_sums(head, head);

  double tail = 0.0;
  double best = -1.0;
  std::int64_t k_star = n;
  bool finite = true;
  for (std::int64_t k = n; k >= 1; --k) {
    tail += uv[static_cast<std::size_t>(k - 1)];
    const double prod =
        std::pow(tail, 1.0 / p) * std::pow(head[static_cast<std::size_t>(k - 1)], 1.0 / q);
    if (!std::isfinite(prod)) {
      finite = false;
      continue;
    }
    if (prod >= best) {
      best = prod;
      k_star = k;
    }
  }
  if (!finite) return {kInf, k_star, false};
  return {best, k_star, true};
}

}  // namespace

double conjugate_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::domain_error("conjugate_exponent: requires finite p > 1");
  return p / (p - 1.0);
}

Exponents Exponents::from_p(double p) { return {p, conjugate_exponent(p)}; }

SequenceWeight SequenceWeight::from_generator(Generator g) {
  SequenceWeight w;
  w.gen_ = std::move(g);
  return w;
}

SequenceWeight SequenceWeight::from_log_generator(Generator log_g) {
  SequenceWeight w;
  w.log_gen_ = std::move(log_g);
  return w;
}

SequenceWeight SequenceWeight::from_table(std::vector<double> terms) {
  SequenceWeight w;
  w.table_ = std::move(terms);
  for (double t : w.table_) {
    if (!(t > 0.0) || !std::isfinite(t))
      throw std::invalid_argument("sequence weight terms must be positive and finite");
  }
  return w;
}

double SequenceWeight::term(std::int64_t i) const {
  if (i < 1) throw std::out_of_range("sequence weight index is 1-based");
  double t;
  if (log_gen_) {
    t = std::exp(log_gen_(i));
  } else if (gen_) {
    t = gen_(i);
  } else {
    if (i > table_size()) throw std::out_of_range("sequence weight table exhausted");
    t = table_[static_cast<std::size_t>(i - 1)];
  }
  if (log_gen_) return t;  // underflow of exp is handled by the scaled path
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("sequence weight terms must be positive and finite");
  return t;
}

double SequenceWeight::log_term(std::int64_t i) const {
  if (log_gen_) return log_gen_(i);
  return std::log(term(i));
}

CharacterizationResult characterization_A(const SequenceWeight& u, const SequenceWeight& v,
                                          double p, std::int64_t n) {
  check_truncation(n);
  if (u.has_log() && v.has_log()) return characterization_scaled(u, v, p, n);
  return characterization_direct(u, v, p, n);
}

HardyReport hardy_bounds(const SequenceWeight& u, const SequenceWeight& v, double p,
                         std::int64_t n, double tol_growth) {
  const auto a1 = characterization_A(u, v, p, n);
  HardyReport rep;
  rep.a = a1.value;
  rep.lower = a1.value;
  rep.upper = 4.0 * a1.value;
  rep.k_star = a1.k_star;
  if (!a1.finite) {
    rep.divergent = true;
    return rep;
  }
  const bool can_extend = (u.extendable() || u.table_size() >= 4 * n) &&
                          (v.extendable() || v.table_size() >= 4 * n);
  if (can_extend) {
    const auto a2 = characterization_A(u, v, p, 2 * n);
    const auto a4 = characterization_A(u, v, p, 4 * n);
    if (!a2.finite || !a4.finite) {
      rep.divergent = true;
    } else {
      rep.divergent = (a2.value > (1.0 + tol_growth) * a1.value) &&
                      (a4.value > (1.0 + tol_growth) * a2.value);
    }
  }
  return rep;
}

std::vector<double> apply_hardy_operator(std::span<const double> a) {
  for (double t : a)
    if (t < 0.0 || !std::isfinite(t)) throw std::invalid_argument("hardy operator: terms must be >= 0");
  std::vector<double> out(a.size());
  kernels::prefix_sums(a, out);
  return out;
}

std::vector<double> apply_dual_operator(std::span<const double> b) {
  for (double t : b)
    if (t < 0.0 || !std::isfinite(t)) throw std::invalid_argument("dual operator: terms must be >= 0");
  std::vector<double> out(b.size());
  kernels::suffix_sums(b, out);
  return out;
}

namespace {

// ratio_p(a) = sum_j u_j (Ta)_j^p / sum_j v_j a_j^p
double hardy_ratio_p(std::span<const double> u, std::span<const double> v,
                     std::span<const double> a, double p, std::vector<double>& scratch) {
  kernels::prefix_sums(a, scratch);
  double num = 0.0, den = 0.0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      num += u[i] * scratch[i] * scratch[i];
      den += v[i] * a[i] * a[i];
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      num += u[i] * std::pow(scratch[i], p);
      den += v[i] * std::pow(a[i], p);
    }
  }
  return num / den;
}

EmpiricalBestConstant empirical_p2(std::span<const double> u, std::span<const double> v,
                                   std::span<const double> a0, std::int64_t budget) {
  const std::size_t n = a0.size();
  std::vector<double> a(a0.begin(), a0.end());
  std::vector<double> scratch(n), w(n);
  EmpiricalBestConstant out;
  out.ratio_p = hardy_ratio_p(u, v, a, 2.0, scratch);
  for (std::int64_t it = 0; it < budget; ++it) {
    // a <- D_v^{-1} T* D_u T a, the power step in the a-coordinates
    kernels::prefix_sums(a, scratch);
    for (std::size_t i = 0; i < n; ++i) w[i] = u[i] * scratch[i];
    kernels::suffix_sums(w, scratch);
    double amax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = scratch[i] / v[i];
      amax = std::max(amax, a[i]);
    }
    if (!(amax > 0.0) || !std::isfinite(amax)) break;
    for (double& x : a) x /= amax;
    out.ratio_p = std::max(out.ratio_p, hardy_ratio_p(u, v, a, 2.0, scratch));
    ++out.iterations;
  }
  out.ratio = std::sqrt(out.ratio_p);
  return out;
}

EmpiricalBestConstant empirical_gradient(std::span<const double> u, std::span<const double> v,
                                         std::span<const double> a0, double p,
                                         std::int64_t budget) {
  const std::size_t n = a0.size();
  std::vector<double> a(a0.begin(), a0.end());
  std::vector<double> scratch(n), grad(n), w(n), trial(n);
  EmpiricalBestConstant out;
  double ratio = hardy_ratio_p(u, v, a, p, scratch);
  out.ratio_p = ratio;
  double eta = 0.5;
  for (std::int64_t it = 0; it < budget; ++it) {
    kernels::prefix_sums(a, scratch);  // Ta
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += u[i] * std::pow(scratch[i], p);
      den += v[i] * std::pow(a[i], p);
    }
    for (std::size_t i = 0; i < n; ++i) w[i] = u[i] * std::pow(scratch[i], p - 1.0);
    kernels::suffix_sums(w, grad);  // d num / d a_i (up to factor p)
    double gnorm = 0.0, anorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      grad[i] = grad[i] / num - v[i] * std::pow(a[i], p - 1.0) / den;
      gnorm += grad[i] * grad[i];
      anorm += a[i] * a[i];
    }
    gnorm = std::sqrt(gnorm);
    if (!(gnorm > 0.0)) break;
    const double step = eta * std::sqrt(anorm) / gnorm;
    for (std::size_t i = 0; i < n; ++i) trial[i] = std::max(0.0, a[i] + step * grad[i]);
    const double trial_ratio = hardy_ratio_p(u, v, trial, p, scratch);
    if (trial_ratio > ratio) {
      a.swap(trial);
      ratio = trial_ratio;
      out.ratio_p = std::max(out.ratio_p, ratio);
    } else {
      eta *= 0.5;
      if (eta < 1e-12) break;
    }
    ++out.iterations;
  }
  out.ratio = std::pow(out.ratio_p, 1.0 / p);
  return out;
}

}  // namespace

EmpiricalBestConstant empirical_best_constant(const SequenceWeight& u, const SequenceWeight& v,
                                              double p, std::int64_t n, std::int64_t budget) {
  check_truncation(n);
  conjugate_exponent(p);
  const auto uv = materialize(u, n);
  const auto vv = materialize(v, n);
  std::vector<double> a0(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k)
    a0[static_cast<std::size_t>(k - 1)] = std::pow(static_cast<double>(k), -1.0 / p - 0.01);
  if (p == 2.0) return empirical_p2(uv, vv, a0, budget);
  return empirical_gradient(uv, vv, a0, p, budget);
}

namespace {

// Power iteration for the top eigenvalue of the SPD operator x -> op(x).
template <typename Op>
double top_eigenvalue(std::size_t n, Op&& op, std::int64_t iters, double tol) {
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = std::pow(static_cast<double>(i + 1), -0.51);
  double lambda = 0.0;
  for (std::int64_t it = 0; it < iters; ++it) {
    op(x, y);
    const double xy = kernels::dot(x, y);
    const double xx = kernels::dot(x, x);
    const double next = xy / xx;
    const double ynorm = std::sqrt(kernels::dot(y, y));
    if (!(ynorm > 0.0)) return 0.0;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ynorm;
    if (it > 0 && std::abs(next - lambda) <= tol * std::abs(next)) return next;
    lambda = next;
  }
  return lambda;
}

}  // namespace

double hardy_operator_norm(std::span<const double> u, std::span<const double> v,
                           std::int64_t iters, double tol) {
  const std::size_t n = u.size();
  std::vector<double> sv(n);
  for (std::size_t i = 0; i < n; ++i) sv[i] = std::sqrt(v[i]);
  std::vector<double> t(n);
  auto op = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < n; ++i) t[i] = x[i] / sv[i];
    kernels::prefix_sums(t, t);
    for (std::size_t i = 0; i < n; ++i) t[i] *= u[i];
    kernels::suffix_sums(t, t);
    for (std::size_t i = 0; i < n; ++i) y[i] = t[i] / sv[i];
  };
  return std::sqrt(top_eigenvalue(n, op, iters, tol));
}

double dual_operator_norm(std::span<const double> u, std::span<const double> v,
                          std::int64_t iters, double tol) {
  const std::size_t n = u.size();
  std::vector<double> su(n);
  for (std::size_t i = 0; i < n; ++i) su[i] = std::sqrt(u[i]);
  std::vector<double> t(n);
  auto op = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < n; ++i) t[i] = x[i] * su[i];
    kernels::suffix_sums(t, t);
    for (std::size_t i = 0; i < n; ++i) t[i] /= v[i];
    kernels::prefix_sums(t, t);
    for (std::size_t i = 0; i < n; ++i) y[i] = t[i] * su[i];
  };
  return std::sqrt(top_eigenvalue(n, op, iters, tol));
}

DualPair dual_weights(const SequenceWeight& u, const SequenceWeight& v, double p,
                      std::int64_t n) {
  check_truncation(n);
  const double q = conjugate_exponent(p);
  std::vector<double> du(static_cast<std::size_t>(n)), dv(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    // dual weights are the (1-q)-powers, reversed at the truncation
    du[static_cast<std::size_t>(n - i)] = std::pow(v.term(i), 1.0 - q);
    dv[static_cast<std::size_t>(n - i)] = std::pow(u.term(i), 1.0 - q);
  }
  return {SequenceWeight::from_table(std::move(du)), SequenceWeight::from_table(std::move(dv)), q};
}

DualPair dual_weights(const SequenceWeight& u, double p, std::int64_t n) {
  return dual_weights(u, u, p, n);
}

}  // namespace hardydiv
