#pragma once

// Independent oracles for the test suite: generic adaptive quadrature and a
// brute-force evaluation of the characterization constant. Deliberately
// naive implementations that share no code with the library.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b) {
  const double m = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson(f, a, m);
  const double right = simpson(f, m, b);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson_rec(f, a, m, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-13, int depth = 48) {
  return adaptive_simpson_rec(f, a, b, simpson(f, a, b), tol, depth);
}

struct BruteA {
  double value;
  std::int64_t k_star;
};

/// Direct double-loop evaluation of
///   sup_k (sum_{i=k..N} u_i)^{1/p} (sum_{i=1..k} v_i^{1-q})^{1/q}
/// in long double, smallest maximizing k.
inline BruteA brute_force_A(const std::vector<double>& u, const std::vector<double>& v,
                            double p) {
  const std::int64_t n = static_cast<std::int64_t>(u.size());
  const long double q = p / (p - 1.0);
  long double best = -1.0L;
  std::int64_t best_k = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    long double tail = 0.0L;
    for (std::int64_t i = n; i >= k; --i) tail += u[static_cast<std::size_t>(i - 1)];
    long double head = 0.0L;
    for (std::int64_t i = 1; i <= k; ++i)
      head += std::pow(static_cast<long double>(v[static_cast<std::size_t>(i - 1)]),
                       1.0L - q);
    const long double val =
        std::pow(tail, 1.0L / static_cast<long double>(p)) * std::pow(head, 1.0L / q);
    if (val > best) {
      best = val;
      best_k = k;
    }
  }
  return {static_cast<double>(best), best_k};
}

}  // namespace oracle
