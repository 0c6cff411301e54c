#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hardydiv/kernels.hpp"

using namespace hardydiv;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = uni(rng);
  return x;
}

const std::vector<std::size_t> kSizes = {0,    1,    7,     kernels::kBlockSize - 1,
                                         kernels::kBlockSize, 3 * kernels::kBlockSize + 17,
                                         100000};

}  // namespace

TEST_CASE("blocked reductions agree with the serial reference") {
  // bitwise below one block (identical accumulation order), within rounding
  // above it (the block tree associates differently, by design)
  for (std::size_t n : kSizes) {
    const auto x = random_vector(n, 11 + n);
    const auto y = random_vector(n, 29 + n);
    const bool exact = n <= kernels::kBlockSize;
    if (exact) {
      CHECK(kernels::sum(x) == kernels::sum_serial(x));
      CHECK(kernels::dot(x, y) == kernels::dot_serial(x, y));
    } else {
      CHECK(kernels::sum(x) == doctest::Approx(kernels::sum_serial(x)).epsilon(1e-11));
      CHECK(kernels::dot(x, y) == doctest::Approx(kernels::dot_serial(x, y)).epsilon(1e-11));
    }
    std::vector<double> a(n), b(n);
    kernels::prefix_sums(x, a);
    kernels::prefix_sums_serial(x, b);
    std::vector<double> c(n), d(n);
    kernels::suffix_sums(x, c);
    kernels::suffix_sums_serial(x, d);
    if (exact) {
      CHECK(a == b);
      CHECK(c == d);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-11));
        CHECK(c[i] == doctest::Approx(d[i]).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("prefix and suffix sums match a naive loop") {
  const auto x = random_vector(4321, 5);
  std::vector<double> pre(x.size()), suf(x.size());
  kernels::prefix_sums(x, pre);
  kernels::suffix_sums(x, suf);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += x[i];
    CHECK(pre[i] == doctest::Approx(acc).epsilon(1e-13));
  }
  acc = 0.0;
  for (std::size_t i = x.size(); i-- > 0;) {
    acc += x[i];
    CHECK(suf[i] == doctest::Approx(acc).epsilon(1e-13));
  }
  // the suffix accumulation is the exact mirror of the prefix one
  std::vector<double> rev(x.rbegin(), x.rend()), pre_rev(x.size());
  kernels::prefix_sums(rev, pre_rev);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(suf[i] == pre_rev[x.size() - 1 - i]);
}

TEST_CASE("results are independent of the thread count") {
#ifdef _OPENMP
  const auto x = random_vector(10 * kernels::kBlockSize + 123, 77);
  const auto y = random_vector(x.size(), 78);
  omp_set_num_threads(1);
  const double s1 = kernels::sum(x);
  const double d1 = kernels::dot(x, y);
  std::vector<double> p1(x.size()), q1(x.size());
  kernels::prefix_sums(x, p1);
  kernels::suffix_sums(x, q1);
  for (int threads : {2, 3, 5, 8}) {
    omp_set_num_threads(threads);
    CHECK(kernels::sum(x) == s1);
    CHECK(kernels::dot(x, y) == d1);
    std::vector<double> p(x.size()), q(x.size());
    kernels::prefix_sums(x, p);
    kernels::suffix_sums(x, q);
    CHECK(p == p1);
    CHECK(q == q1);
  }
  omp_set_num_threads(omp_get_num_procs());
#endif
}
