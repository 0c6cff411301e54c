#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hardydiv/hardy.hpp"
#include "oracles.hpp"

using namespace hardydiv;

namespace {

std::vector<double> random_weights(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.1, 3.0);
  std::vector<double> w(n);
  for (double& v : w) v = uni(rng);
  return w;
}

}  // namespace

TEST_CASE("conjugate exponents") {
  CHECK(conjugate_exponent(2.0) == doctest::Approx(2.0));
  CHECK(conjugate_exponent(4.0) == doctest::Approx(4.0 / 3.0));
  CHECK(conjugate_exponent(1.5) == doctest::Approx(3.0));
  CHECK_THROWS_AS(conjugate_exponent(1.0), std::domain_error);
  CHECK_THROWS_AS(conjugate_exponent(0.5), std::domain_error);
  const auto e = Exponents::from_p(3.0);
  CHECK(1.0 / e.p + 1.0 / e.q == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("characterization agrees with the brute-force oracle") {
  for (double p : {1.5, 2.0, 3.0}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto u = random_weights(60, seed);
      const auto v = random_weights(60, seed + 100);
      const auto got = characterization_A(SequenceWeight::from_table(u),
                                          SequenceWeight::from_table(v), p, 60);
      const auto want = oracle::brute_force_A(u, v, p);
      CHECK(got.value == doctest::Approx(want.value).epsilon(1e-12));
      CHECK(got.k_star == want.k_star);
    }
  }
}

TEST_CASE("A_N is nondecreasing in N and scale invariant") {
  const auto u = SequenceWeight::from_generator([](std::int64_t i) { return 1.0 / (i * i); });
  const auto v = SequenceWeight::from_generator([](std::int64_t) { return 1.0; });
  double prev = 0.0;
  for (std::int64_t n : {10, 100, 1000}) {
    const auto r = characterization_A(u, v, 2.0, n);
    CHECK(r.value >= prev);
    prev = r.value;
  }
  for (double p : {1.5, 2.0, 4.0}) {
    const double lam = 37.5;
    const auto base = random_weights(40, 9);
    std::vector<double> su = base, sv = random_weights(40, 10), lu = su, lv = sv;
    for (double& x : lu) x *= lam;
    for (double& x : lv) x *= lam;
    const auto a = characterization_A(SequenceWeight::from_table(su),
                                      SequenceWeight::from_table(sv), p, 40);
    const auto b = characterization_A(SequenceWeight::from_table(lu),
                                      SequenceWeight::from_table(lv), p, 40);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
  }
}

TEST_CASE("divergence verdict for the unweighted pair") {
  const auto one = SequenceWeight::from_generator([](std::int64_t) { return 1.0; });
  const auto rep = hardy_bounds(one, one, 2.0, 1000);
  CHECK(rep.divergent);
  // geometric pair is convergent
  const auto geo =
      SequenceWeight::from_log_generator([](std::int64_t i) { return -2.0 * i * 0.6931471805599453; });
  const auto rep2 = hardy_bounds(geo, geo, 2.0, 1000);
  CHECK_FALSE(rep2.divergent);
  CHECK(rep2.upper == doctest::Approx(4.0 * rep2.lower).epsilon(1e-15));
}

TEST_CASE("operator adjoint identity") {
  const auto a = random_weights(500, 21);
  const auto b = random_weights(500, 22);
  const auto ta = apply_hardy_operator(a);
  const auto tb = apply_dual_operator(b);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    lhs += ta[i] * b[i];
    rhs += a[i] * tb[i];
  }
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  CHECK_THROWS_AS(apply_hardy_operator(std::vector<double>{1.0, -2.0}),
                  std::invalid_argument);
}

TEST_CASE("duality: reversed conjugate weights reproduce the constant") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto u = random_weights(200, 1000 + seed);
    const auto v = random_weights(200, 2000 + seed);
    const double p = 2.5;
    const auto primal = characterization_A(SequenceWeight::from_table(u),
                                           SequenceWeight::from_table(v), p, 200);
    const auto dual = dual_weights(SequenceWeight::from_table(u),
                                   SequenceWeight::from_table(v), p, 200);
    const auto mirror = characterization_A(dual.u, dual.v, dual.exponent, 200);
    CHECK(primal.value == doctest::Approx(mirror.value).epsilon(1e-10));
  }
}

TEST_CASE("primal and dual operator norms agree") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto u = random_weights(100, 300 + seed);
    const auto v = random_weights(100, 400 + seed);
    const double np = hardy_operator_norm(u, v);
    const double nd = dual_operator_norm(u, v);
    CHECK(np == doctest::Approx(nd).epsilon(1e-6));
  }
}

TEST_CASE("empirical best constant basics") {
  // single active index: (Ta)_1 = a_1, ratio exactly 1
  const auto one = SequenceWeight::from_table({1.0});
  const auto e1 = empirical_best_constant(one, one, 2.0, 1, 50);
  CHECK(e1.ratio_p == doctest::Approx(1.0).epsilon(1e-12));
  // any feasible iterate is a certified lower bound: ratio <= 4 A_N
  const auto u = SequenceWeight::from_generator([](std::int64_t i) { return 1.0 / (i * i); });
  const auto v = SequenceWeight::from_generator([](std::int64_t) { return 1.0; });
  for (double p : {2.0, 3.0}) {
    const auto rep = characterization_A(u, v, p, 2000);
    const auto emp = empirical_best_constant(u, v, p, 2000, 100);
    CHECK(emp.ratio <= 4.0 * rep.value + 1e-9);
    CHECK(emp.ratio > 0.0);
    // budget 0 still returns the ratio of the initial trial sequence
    const auto emp0 = empirical_best_constant(u, v, p, 2000, 0);
    CHECK(emp0.ratio > 0.0);
    CHECK(emp0.ratio <= emp.ratio + 1e-15);
  }
}
