#include "hardydiv/kernels.hpp"

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hardydiv::kernels {

namespace {

inline std::size_t num_blocks(std::size_t n) {
  return (n + kBlockSize - 1) / kBlockSize;
}

}  // namespace

double sum_serial(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v;
  return acc;
}

double sum(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n <= kBlockSize) return sum_serial(x);
  const std::size_t nb = num_blocks(n);
  std::vector<double> partial(nb);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(lo + kBlockSize, n);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += x[i];
    partial[static_cast<std::size_t>(b)] = acc;
  }
  return sum_serial(partial);
}

double dot_serial(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n <= kBlockSize) return dot_serial(x, y);
  const std::size_t nb = num_blocks(n);
  std::vector<double> partial(nb);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(lo + kBlockSize, n);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += x[i] * y[i];
    partial[static_cast<std::size_t>(b)] = acc;
  }
  return sum_serial(partial);
}

void prefix_sums_serial(std::span<const double> x, std::span<double> out) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += x[i];
    out[i] = acc;
  }
}

void prefix_sums(std::span<const double> x, std::span<double> out) {
  const std::size_t n = x.size();
  if (n <= kBlockSize) {
    prefix_sums_serial(x, out);
    return;
  }
  const std::size_t nb = num_blocks(n);
  std::vector<double> totals(nb);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(lo + kBlockSize, n);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += x[i];
    totals[static_cast<std::size_t>(b)] = acc;
  }
  // exclusive scan of block totals, in block order
  std::vector<double> offset(nb);
  double acc = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    offset[b] = acc;
    acc += totals[b];
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(lo + kBlockSize, n);
    double local = offset[static_cast<std::size_t>(b)];
    for (std::size_t i = lo; i < hi; ++i) {
      local += x[i];
      out[i] = local;
    }
  }
}

void suffix_sums_serial(std::span<const double> x, std::span<double> out) {
  double acc = 0.0;
  for (std::size_t i = x.size(); i-- > 0;) {
    acc += x[i];
    out[i] = acc;
  }
}

void suffix_sums(std::span<const double> x, std::span<double> out) {
  const std::size_t n = x.size();
  if (n <= kBlockSize) {
    suffix_sums_serial(x, out);
    return;
  }
  const std::size_t nb = num_blocks(n);
  std::vector<double> totals(nb);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(lo + kBlockSize, n);
    double acc = 0.0;
    for (std::size_t i = hi; i-- > lo;) acc += x[i];
    totals[static_cast<std::size_t>(b)] = acc;
  }
  std::vector<double> offset(nb);
  double acc = 0.0;
  for (std::size_t b = nb; b-- > 0;) {
    offset[b] = acc;
    acc += totals[b];
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(lo + kBlockSize, n);
    double local = offset[static_cast<std::size_t>(b)];
    for (std::size_t i = hi; i-- > lo;) {
      local += x[i];
      out[i] = local;
    }
  }
}

}  // namespace hardydiv::kernels
