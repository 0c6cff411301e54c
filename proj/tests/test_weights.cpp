#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "hardydiv/cusp_geometry.hpp"
#include "hardydiv/hardy.hpp"
#include "hardydiv/weight_catalog.hpp"
#include "oracles.hpp"

using namespace hardydiv;

TEST_CASE("weight evaluation against closed forms") {
  const auto pw = WeightSpec::power(-0.7);
  CHECK(pw(0.3) == doctest::Approx(std::pow(0.3, -0.7)).epsilon(1e-15));
  CHECK(pw.log_value(0.3) == doctest::Approx(-0.7 * std::log(0.3)).epsilon(1e-15));
  CHECK(pw.log_value_from_logx(-800.0) == doctest::Approx(560.0).epsilon(1e-15));

  const auto lw = WeightSpec::log_power(1.5);
  CHECK(lw(0.1) == doctest::Approx(std::pow(1.0 - std::log(0.1), 1.5)).epsilon(1e-15));
  CHECK(lw.log_value_from_logx(-50.0) ==
        doctest::Approx(1.5 * std::log(51.0)).epsilon(1e-15));
}

TEST_CASE("tabulated weights: interpolation in ln x1 and input validation") {
  const auto tab = WeightSpec::tabulated({0.25, 0.5, 1.0}, {4.0, 2.0, 1.0});  // x^-1 samples
  CHECK(tab(0.5) == doctest::Approx(2.0).epsilon(1e-14));
  // log-linear interpolation reproduces the power law between samples
  CHECK(tab(std::sqrt(0.5) * 0.5) == doctest::Approx(1.0 / (std::sqrt(0.5) * 0.5)).epsilon(1e-13));
  // clamped outside the sampled range
  CHECK(tab(0.01) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(WeightSpec::tabulated({0.5, 0.25}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpec::tabulated({0.25, 0.5}, {1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("csv round trip") {
  const auto path = std::filesystem::temp_directory_path() / "hardydiv_weight_test.csv";
  {
    std::ofstream out(path);
    out << "0.125,8\n0.25,4\n0.5,2\n1.0,1\n";
  }
  const auto w = WeightSpec::from_csv(path);
  CHECK(w(0.25) == doctest::Approx(4.0).epsilon(1e-14));
  std::filesystem::remove(path);
}

TEST_CASE("admissibility: power weights") {
  for (double beta : {0.0, 0.5, -0.4, -1.0}) {
    const auto rep = admissibility(WeightSpec::power(beta), 2.0, 2.0, 20);
    CHECK(rep.c_omega == doctest::Approx(std::exp2(2.0 * std::abs(beta))).epsilon(1e-13));
    for (double r : rep.per_subdomain_ratios) {
      CHECK(r == doctest::Approx(rep.c_omega).epsilon(1e-12));  // scale invariance
      CHECK(r <= rep.c_omega * (1.0 + 1e-12));
    }
  }
  // integrability: omega^p in L1(Omega) iff beta p + gamma > -1
  CHECK(admissibility(WeightSpec::power(-1.4), 2.0, 2.0, 10).integrable);
  CHECK_FALSE(admissibility(WeightSpec::power(-1.6), 2.0, 2.0, 10).integrable);
}

TEST_CASE("admissibility: log weights and the strip-ratio formula") {
  for (double alpha : {1.0, 2.0}) {
    const auto rep = admissibility(WeightSpec::log_power(alpha), 2.0, 1.0, 15);
    CHECK(rep.c_omega ==
          doctest::Approx(std::pow(1.0 + 2.0 * std::log(2.0), std::abs(alpha))).epsilon(1e-13));
    CHECK(rep.integrable);
    const double ln2 = std::log(2.0);
    for (std::size_t i = 0; i < rep.per_subdomain_ratios.size(); ++i) {
      const double expected =
          std::pow(1.0 + 2.0 * ln2 / (1.0 + static_cast<double>(i) * ln2), std::abs(alpha));
      CHECK(rep.per_subdomain_ratios[i] == doctest::Approx(expected).epsilon(1e-12));
      if (i > 0) CHECK(rep.per_subdomain_ratios[i] <= rep.per_subdomain_ratios[i - 1]);
    }
  }
}

TEST_CASE("hardy_sequence matches its definition termwise") {
  for (double gamma : {1.0, 2.0}) {
    for (double beta : {0.0, -0.5}) {
      const auto w = WeightSpec::power(beta);
      const auto seq = hardy_sequence(w, gamma, 2.0, 100);
      for (std::int64_t i : {1, 2, 5, 20}) {
        const double x = std::exp2(-static_cast<double>(i));
        const double want = subdomain_measure(gamma, i) * std::pow(w(x), 2.0);
        CHECK(seq.term(i) == doctest::Approx(want).epsilon(1e-13));
      }
      CHECK(seq.has_log());
      CHECK(std::isfinite(seq.log_term(100000)));  // usable far past raw underflow
    }
  }
}

TEST_CASE("power closed-form bound") {
  CHECK(power_ch_bound(0.0, 2.0, 2.0) == doctest::Approx(32.0 / 7.0).epsilon(1e-13));
  CHECK_THROWS_AS(power_ch_bound(-1.5, 2.0, 2.0), std::domain_error);  // r = 1
  CHECK_THROWS_AS(power_ch_bound(-2.0, 2.0, 2.0), std::domain_error);
  // blow-up identity at p = 2: bound * (1 - r) = 4 for every admissible beta
  for (double beta : {0.0, -0.5, -1.0, -1.4, 1.0}) {
    const double r = std::exp2(-2.0 * beta - 3.0);
    CHECK(power_ch_bound(beta, 2.0, 2.0) * (1.0 - r) == doctest::Approx(4.0).epsilon(1e-12));
  }
}

TEST_CASE("sandwich sits under the closed form, and matches the geometric oracle") {
  // closed form at p=2 equals the N->inf limit of 4 A_N exactly, hence the
  // tiny relative slack on the comparison
  const double gamma = 2.0, beta = 0.0;
  const double bound = power_ch_bound(beta, gamma, 2.0);
  const auto seq = hardy_sequence(WeightSpec::power(beta), gamma, 2.0, 10000);
  const double r = std::exp2(-2.0 * beta - gamma - 1.0);
  for (std::int64_t n : {100, 1000, 10000}) {
    const auto a = characterization_A(seq, seq, 2.0, n);
    CHECK(4.0 * a.value <= bound * (1.0 + 1e-11));
    // closed-form truncated constant: max_k (1-r^{N+1-k})(1-r^k) / (1-r)^2
    double best = 0.0;
    for (std::int64_t k = 1; k <= n; ++k)
      best = std::max(best, (1.0 - std::pow(r, static_cast<double>(n + 1 - k))) *
                                (1.0 - std::pow(r, static_cast<double>(k))));
    const double a_exact = std::sqrt(best) / (1.0 - r);
    CHECK(a.value == doctest::Approx(a_exact).epsilon(1e-10));
  }
}

TEST_CASE("log-weight verdicts and quotient diagnostic") {
  const auto res = log_weight_A(1.0, 2.0, 2.0, 10000);
  CHECK(res.finite);
  CHECK(res.quotient_limit == doctest::Approx(8.0 / std::log(8.0)).epsilon(1e-13));
  CHECK(std::abs(res.quotient - res.quotient_limit) <= 0.01 * res.quotient_limit);
  const auto neg = log_weight_A(-1.0, 2.0, 2.0, 10000);
  CHECK(neg.finite);
}

TEST_CASE("counterexample integrals match quadrature") {
  const double gamma = 2.0;
  for (double eps : {1e-3, 1e-6}) {
    const auto got = counterexample_integrals(gamma, eps);
    // with the area density x1^gamma, the x1-profile integrands collapse to
    // 1/(x(1-ln x)) and 1/(x(1-ln x)^2); integrate in t = ln x
    const double want_l1 = oracle::adaptive_simpson(
        [](double t) { return 1.0 / (1.0 - t); }, std::log(eps), 0.0);
    const double want_l2 = oracle::adaptive_simpson(
        [](double t) { return 1.0 / ((1.0 - t) * (1.0 - t)); }, std::log(eps), 0.0);
    CHECK(got.l1 == doctest::Approx(want_l1).epsilon(1e-10));
    CHECK(got.weighted_l2 == doctest::Approx(want_l2).epsilon(1e-10));
    CHECK(got.weighted_l2 < 1.0);
  }
  CHECK_THROWS_AS(counterexample_integrals(2.0, 0.0), std::domain_error);
}
