// Timing comparison of the serial reference kernels against the parallel
// blocked-tree versions. Not a correctness test; see tests/test_kernels.cpp
// for the bitwise-equality checks.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "hardydiv/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    f();
    const auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  volatile double sink = 0.0;

  for (std::size_t n : {std::size_t{1} << 16, std::size_t{1} << 20, std::size_t{1} << 24}) {
    std::vector<double> a(n), b(n), out(n);
    for (double& x : a) x = uni(rng);
    for (double& x : b) x = uni(rng);

    const double ts_sum = time_best_of(5, [&] { sink = hardydiv::kernels::sum_serial(a); });
    const double tp_sum = time_best_of(5, [&] { sink = hardydiv::kernels::sum(a); });
    const double ts_dot = time_best_of(5, [&] { sink = hardydiv::kernels::dot_serial(a, b); });
    const double tp_dot = time_best_of(5, [&] { sink = hardydiv::kernels::dot(a, b); });
    const double ts_pre =
        time_best_of(5, [&] { hardydiv::kernels::prefix_sums_serial(a, out); });
    const double tp_pre = time_best_of(5, [&] { hardydiv::kernels::prefix_sums(a, out); });
    const double ts_suf =
        time_best_of(5, [&] { hardydiv::kernels::suffix_sums_serial(a, out); });
    const double tp_suf = time_best_of(5, [&] { hardydiv::kernels::suffix_sums(a, out); });

    std::printf("n = %zu\n", n);
    std::printf("  sum     serial %.3e s  parallel %.3e s  speedup %.2fx\n", ts_sum, tp_sum,
                ts_sum / tp_sum);
    std::printf("  dot     serial %.3e s  parallel %.3e s  speedup %.2fx\n", ts_dot, tp_dot,
                ts_dot / tp_dot);
    std::printf("  prefix  serial %.3e s  parallel %.3e s  speedup %.2fx\n", ts_pre, tp_pre,
                ts_pre / tp_pre);
    std::printf("  suffix  serial %.3e s  parallel %.3e s  speedup %.2fx\n", ts_suf, tp_suf,
                ts_suf / tp_suf);
  }
  (void)sink;
  return 0;
}
