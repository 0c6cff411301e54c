#include "hardydiv/cusp_geometry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hardydiv {

namespace {
constexpr double kClosureTol = 1e-12;
constexpr int kSegmentPoints = 256;
}  // namespace

CuspDomain::CuspDomain(double g) : gamma(g) {
  if (!(g >= 1.0) || !std::isfinite(g)) throw std::domain_error("cusp domain requires gamma >= 1");
}

bool CuspDomain::contains(double x1, double x2) const {
  if (!std::isfinite(x1) || !std::isfinite(x2)) return false;
  return x1 > 0.0 && x1 < 1.0 && x2 > 0.0 && x2 < std::pow(x1, gamma);
}

double measure_prefactor(double gamma) {
  return (1.0 - std::exp2(-2.0 * (gamma + 1.0))) / (gamma + 1.0);
}

double subdomain_measure(double gamma, std::int64_t i) {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma >= 1 required");
  if (i < 0) throw std::domain_error("subdomain index must be >= 0");
  return measure_prefactor(gamma) * std::exp2(-(gamma + 1.0) * static_cast<double>(i));
}

double overlap_measure(double gamma, std::int64_t i) {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma >= 1 required");
  if (i < 1) throw std::domain_error("overlap B_i requires i >= 1");
  const double pre = (1.0 - std::exp2(-(gamma + 1.0))) / (gamma + 1.0);
  return pre * std::exp2(-(gamma + 1.0) * static_cast<double>(i));
}

StarShapeCert star_shape_cert(double gamma, std::int64_t i) {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma >= 1 required");
  if (i < 0) throw std::domain_error("subdomain index must be >= 0");
  StarShapeCert cert;
  const double fi = static_cast<double>(i);
  cert.outer_radius = std::exp2(-fi + 1.0);
  cert.rho = std::exp2(-gamma * (fi + 2.0));
  cert.inner_radius = cert.rho / (2.0 * gamma);
  cert.center_x = std::exp2(-fi) - cert.inner_radius;
  cert.center_y = cert.inner_radius;
  return cert;
}

namespace {

// closure of Omega_i with floating-point tolerance
bool in_strip_closure(double gamma, std::int64_t i, double x1, double x2) {
  const double lo = std::exp2(-static_cast<double>(i + 2));
  const double hi = std::exp2(-static_cast<double>(i));
  if (x1 < lo - kClosureTol || x1 > hi + kClosureTol) return false;
  if (x2 < -kClosureTol) return false;
  return x2 <= std::pow(x1, gamma) + kClosureTol;
}

}  // namespace

StarShapeReport verify_star_shaped(double gamma, std::int64_t i, std::int64_t n_samples,
                                   std::uint64_t seed) {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma >= 1 required");
  StarShapeReport rep;
  if (n_samples <= 0) return rep;
  const auto cert = star_shape_cert(gamma, i);
  const double lo = std::exp2(-static_cast<double>(i + 2));
  const double hi = std::exp2(-static_cast<double>(i));
  const double top = std::pow(hi, gamma);
  const double crit_x = hi - 2.0 * cert.inner_radius;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  rep.min_slope_margin = std::numeric_limits<double>::infinity();

  for (std::int64_t s = 0; s < n_samples; ++s) {
    // y uniform in Omega_i by rejection from the bounding rectangle
    double y1, y2;
    do {
      y1 = lo + (hi - lo) * unit(rng);
      y2 = top * unit(rng);
    } while (!(y2 < std::pow(y1, gamma)));

    const double r = std::sqrt(y1 * y1 + y2 * y2);
    if (!(y1 <= r + kClosureTol && r <= std::sqrt(2.0) * y1 + kClosureTol))
      rep.distance_comparable = false;

    // x uniform in the certificate ball
    const double rad = cert.inner_radius * std::sqrt(unit(rng));
    const double ang = 2.0 * M_PI * unit(rng);
    const double x1 = cert.center_x + rad * std::cos(ang);
    const double x2 = cert.center_y + rad * std::sin(ang);

    bool ok = true;
    for (int k = 0; k < kSegmentPoints; ++k) {
      const double t = static_cast<double>(k) / (kSegmentPoints - 1);
      const double p1 = x1 + t * (y1 - x1);
      const double p2 = x2 + t * (y2 - x2);
      if (!in_strip_closure(gamma, i, p1, p2)) {
        ok = false;
        break;
      }
    }
    if (!ok) ++rep.violations;

    if (y1 > crit_x && y2 >= std::pow(crit_x, gamma)) {
      ++rep.critical_samples;
      const double dx = std::abs(y1 - x1);
      if (dx > 0.0) rep.min_slope_margin = std::min(rep.min_slope_margin, std::abs(y2 - x2) / dx);
    }
    ++rep.samples;
  }
  if (rep.critical_samples == 0) rep.min_slope_margin = 0.0;
  return rep;
}

}  // namespace hardydiv
