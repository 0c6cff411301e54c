#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hardydiv/decomposition.hpp"
#include "hardydiv/hardy.hpp"
#include "hardydiv/testfields.hpp"
#include "hardydiv/weight_catalog.hpp"

using namespace hardydiv;

TEST_CASE("partition of unity identities") {
  CHECK_THROWS_AS(PartitionOfUnity(1), std::domain_error);
  const auto pou = build_partition_of_unity(2.0, 6);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(1e-4, 1.0);
  for (int s = 0; s < 2000; ++s) {
    const double x = uni(rng);
    double total = 0.0;
    int nonzero = 0;
    for (int i = 0; i < 6; ++i) {
      const double v = pou.value(i, x);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      if (v > 0.0) ++nonzero;
      total += v;
      // support(phi_i) within [2^-(i+2), 2^-i] (the last absorbs the tail)
      if (v > 0.0 && i < 5) {
        CHECK(x <= std::exp2(-static_cast<double>(i)) * (1.0 + 1e-14));
        CHECK(x >= std::exp2(-static_cast<double>(i + 2)) * (1.0 - 1e-14));
      }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(nonzero <= 2);
  }
  // ramps are linear in ln x1: half weight at the geometric midpoint of the
  // overlap (2^-(i+1), 2^-i)
  for (int i = 1; i < 5; ++i) {
    const double mid = std::exp2(-static_cast<double>(i) - 0.5);
    CHECK(pou.value(i, mid) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(pou.value(i - 1, mid) == doctest::Approx(0.5).epsilon(1e-13));
  }
}

TEST_CASE("single-strip input decomposes to itself") {
  const int n_sub = 5;
  auto grid = PanelGrid::create(2.0, n_sub + 1, 48, 48);
  const int j = 2;
  // +1/-1 on two equal-area cells inside the plateau phi_j = 1 (around
  // u = j + 1): the integral and every correction integral vanish exactly
  GridFunction f(grid);
  std::size_t c_plus = 0, c_minus = 0;
  for (std::size_t c = grid->panel_begin(j + 1); c < grid->panel_end(j + 1); ++c) {
    const auto& cell = grid->cells()[c];
    const double u = -std::log2(cell.cx);
    if (u <= 2.8 || u >= 3.2 || cell.cy > 0.2 * std::pow(cell.cx, 2.0)) continue;
    if (!c_plus)
      c_plus = c;
    else if (!c_minus && grid->cells()[c].area == grid->cells()[c_plus].area) {
      c_minus = c;
      break;
    }
  }
  REQUIRE(c_plus != 0);
  REQUIRE(c_minus != 0);
  f.values()[c_plus] = 1.0;
  f.values()[c_minus] = -1.0;
  const auto dec = decompose(f, build_partition_of_unity(2.0, n_sub));
  for (int i = 0; i < n_sub; ++i) {
    for (std::size_t c = 0; c < f.values().size(); ++c) {
      if (i == j)
        CHECK(dec.pieces[static_cast<std::size_t>(i)].values()[c] == f.values()[c]);
      else
        CHECK(dec.pieces[static_cast<std::size_t>(i)].values()[c] == 0.0);
    }
  }
}

TEST_CASE("decomposition properties on random data") {
  const int n_sub = 8;
  auto grid = PanelGrid::create(2.0, n_sub + 1, 32, 32);
  const auto pou = build_partition_of_unity(2.0, n_sub);
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const auto f = random_zero_mean_field(grid, seed);
    const auto dec = decompose(f, pou);
    CHECK(dec.reconstruction_max_err <= 1e-12 * f.max_abs());
    for (int i = 0; i < n_sub; ++i) {
      CHECK(std::abs(dec.piece_means[static_cast<std::size_t>(i)]) <= 1e-10 * f.l1_norm());
      // exact support: zero outside panels i and i+1
      const auto& g = dec.pieces[static_cast<std::size_t>(i)];
      for (std::size_t c = 0; c < g.values().size(); ++c) {
        const int panel = grid->cells()[c].panel;
        if (panel != i && panel != i + 1) CHECK(g.values()[c] == 0.0);
      }
    }
  }
}

TEST_CASE("corrections match a direct evaluation of their definition") {
  const int n_sub = 4;
  auto grid = PanelGrid::create(2.0, n_sub + 1, 40, 40);
  const auto pou = build_partition_of_unity(2.0, n_sub);
  const auto f = random_zero_mean_field(grid, 99);
  const auto dec = decompose(f, pou);
  // h_i = (1/|B_i|) int_{W_i} f * sum_{k>=i} phi_k, with W_i = union of
  // panels >= i and B_i carrying the grid measure of panel i
  for (int i = 1; i < n_sub; ++i) {
    double integral = 0.0;
    for (std::size_t c = 0; c < f.values().size(); ++c) {
      const auto& cell = grid->cells()[c];
      if (cell.panel < i) continue;
      double tail_phi = 0.0;
      for (int k = i; k < n_sub; ++k) tail_phi += pou.value(k, cell.cx);
      integral += f.values()[c] * tail_phi * cell.area;
    }
    const double want = integral / grid->panel_area(i);
    CHECK(dec.h[static_cast<std::size_t>(i)] == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("linearity") {
  const int n_sub = 5;
  auto grid = PanelGrid::create(1.5, n_sub + 1, 24, 24);
  const auto pou = build_partition_of_unity(1.5, n_sub);
  const auto f = random_zero_mean_field(grid, 7);
  const auto g = random_zero_mean_field(grid, 8);
  GridFunction combo(grid);
  for (std::size_t c = 0; c < combo.values().size(); ++c)
    combo.values()[c] = 2.0 * f.values()[c] - 3.0 * g.values()[c];
  const auto df = decompose(f, pou);
  const auto dg = decompose(g, pou);
  const auto dc = decompose(combo, pou);
  for (int i = 0; i < n_sub; ++i)
    for (std::size_t c = 0; c < combo.values().size(); ++c) {
      const double want = 2.0 * df.pieces[static_cast<std::size_t>(i)].values()[c] -
                          3.0 * dg.pieces[static_cast<std::size_t>(i)].values()[c];
      const double got = dc.pieces[static_cast<std::size_t>(i)].values()[c];
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("precondition errors") {
  auto grid = PanelGrid::create(2.0, 6, 16, 16);
  const auto pou = build_partition_of_unity(2.0, 5);
  GridFunction f = GridFunction::sample(grid, [](double, double) { return 1.0; });
  CHECK_THROWS_AS(decompose(f, pou), std::invalid_argument);  // nonzero mean
  const auto pou_bad = build_partition_of_unity(2.0, 4);      // panel count mismatch
  f.remove_mean();
  CHECK_THROWS_AS(decompose(f, pou_bad), std::invalid_argument);
}

TEST_CASE("measured decomposition constant sits under the bound") {
  const int n_sub = 8;
  const double gamma = 2.0, p = 2.0;
  const double q = conjugate_exponent(p);
  auto grid = PanelGrid::create(gamma, n_sub + 1, 32, 32);
  const auto pou = build_partition_of_unity(gamma, n_sub);
  for (double beta : {0.0, 0.5, -0.4}) {
    const auto omega = WeightSpec::power(beta);
    const auto adm = admissibility(omega, p, gamma, 30);
    const auto seq = hardy_sequence(omega, gamma, p, 2000);
    const double four_a = 4.0 * characterization_A(seq, seq, p, 2000).value;
    const double bound = std::exp2(2.0 + 1.0 / q) * adm.c_omega * adm.c_omega * four_a;
    for (std::uint64_t seed : {11u, 12u, 13u}) {
      const auto f = random_zero_mean_field(grid, seed);
      const auto dec = decompose(f, pou);
      CHECK(decomposition_constant(f, dec, omega, q) <= bound);
    }
    // degenerate input
    GridFunction zero(grid);
    const auto dz = decompose(zero, pou);
    CHECK_THROWS_AS(decomposition_constant(zero, dz, omega, q), std::invalid_argument);
  }
}
