#include "hardydiv/testfields.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hardydiv {

double bump01(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double t = 2.0 * s - 1.0;  // map to (-1, 1)
  return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

std::function<double(double, double)> standard_test_field(double gamma, int n_sub, int index) {
  if (n_sub < 2) throw std::domain_error("standard_test_field: n_sub >= 2 required");
  const double span = n_sub + 0.6;  // support in u = -log2(x1) within (0.2, n_sub + 0.8)
  switch (index) {
    case 0:
      return [gamma, span](double x1, double x2) {
        const double u = -std::log2(x1);
        const double s = x2 / std::pow(x1, gamma);
        return bump01((u - 0.2) / span) * (1.0 - 2.0 * s);
      };
    case 1:
      return [gamma, span](double x1, double x2) {
        const double u = -std::log2(x1);
        const double s = x2 / std::pow(x1, gamma);
        return bump01((u - 0.2) / span) * std::cos(3.0 * u) * (1.0 - 2.0 * s) * (2.0 + s);
      };
    default:
      throw std::invalid_argument("standard_test_field: unknown index");
  }
}

GridFunction random_zero_mean_field(std::shared_ptr<const PanelGrid> grid, std::uint64_t seed) {
  GridFunction f(std::move(grid));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (double& v : f.values()) v = uni(rng);
  f.remove_mean();
  return f;
}

}  // namespace hardydiv
