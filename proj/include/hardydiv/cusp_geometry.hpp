#pragma once

#include <cstdint>

namespace hardydiv {

/// The planar cusp domain { 0 < x1 < 1, 0 < x2 < x1^gamma }, gamma >= 1.
/// gamma = 1 is the convex case; gamma > 1 has an external cusp at the
/// origin. The dyadic subdomains Omega_i are the strips
/// 2^-(i+2) < x1 < 2^-i.
struct CuspDomain {
  double gamma;

  explicit CuspDomain(double g);
  bool contains(double x1, double x2) const;
};

/// |Omega_i| = C_gamma 2^{-(gamma+1) i} with
/// C_gamma = (1 - 2^{-2(gamma+1)}) / (gamma+1).
double measure_prefactor(double gamma);
double subdomain_measure(double gamma, std::int64_t i);

/// |B_i| with B_i = Omega_i ∩ Omega_{i-1}; requires i >= 1 (B_0 does not
/// exist). Satisfies |Omega_i| = (1 + 2^{-(gamma+1)}) |B_i| < 2 |B_i|.
double overlap_measure(double gamma, std::int64_t i);

/// Star-shape certificate for Omega_i: the strip is contained in a ball of
/// radius R and star-shaped with respect to the ball of radius r centered
/// at (2^-i - r, r).
struct StarShapeCert {
  double outer_radius;  // R = 2^{-i+1}
  double inner_radius;  // r = 2^{-gamma(i+2)-1} / gamma
  double rho;           // 2^{-gamma(i+2)}
  double center_x;
  double center_y;
};

StarShapeCert star_shape_cert(double gamma, std::int64_t i);

struct StarShapeReport {
  std::int64_t samples = 0;
  std::int64_t violations = 0;      // segments leaving the closure of Omega_i
  double min_slope_margin = 0.0;    // |y2-x2|/|y1-x1| over critical-region samples
  std::int64_t critical_samples = 0;
  bool distance_comparable = true;  // x1 <= |x| <= sqrt(2) x1 at every sample
};

/// Samples n_samples segment pairs (y uniform in Omega_i by rejection,
/// x uniform in the certificate ball), checks 256 points per segment against
/// the closure of Omega_i (tolerance 1e-12), and records the minimal slope
/// observed for samples in the critical region near the right edge of the
/// strip. Deterministic per seed.
StarShapeReport verify_star_shaped(double gamma, std::int64_t i, std::int64_t n_samples,
                                   std::uint64_t seed);

}  // namespace hardydiv
