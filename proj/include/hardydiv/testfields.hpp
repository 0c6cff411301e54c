#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "hardydiv/grid.hpp"

namespace hardydiv {

/// Versioned library of analytic test data used by the sweep drivers and
/// the test suite (version 1); fixed here so sweep tables are reproducible.

/// C^infinity bump supported on (0, 1), peak value 1 at s = 1/2.
double bump01(double s);

/// Zero-mean polynomial-times-bump field on the cusp domain, supported in
/// the union of the first n_sub strips (away from the tail). The vertical
/// factor (1 - 2 x2 / x1^gamma) has zero column average, so the mean
/// vanishes up to quadrature. index selects the member:
///   0 - single smooth lobe spanning all strips
///   1 - oscillatory lobe (sign change across strips)
std::function<double(double, double)> standard_test_field(double gamma, int n_sub,
                                                          int index = 0);

/// Uniform(-1,1) cell values from a seeded generator, mean removed.
GridFunction random_zero_mean_field(std::shared_ptr<const PanelGrid> grid, std::uint64_t seed);

}  // namespace hardydiv
