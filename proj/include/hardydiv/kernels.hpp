#pragma once

#include <cstddef>
#include <span>

namespace hardydiv::kernels {

// Reduction tree used by the parallel variants: the input is split into
// fixed-size blocks of kBlockSize elements, each block is accumulated
// serially in index order, and the block partials are combined serially in
// block order. The result is therefore independent of the number of
// threads. The *_serial functions are the plain single-accumulator
// reference implementations kept for testing and benchmarking.
inline constexpr std::size_t kBlockSize = 8192;

double sum_serial(std::span<const double> x);
double sum(std::span<const double> x);

double dot_serial(std::span<const double> x, std::span<const double> y);
double dot(std::span<const double> x, std::span<const double> y);

// out[j] = x[0] + ... + x[j]
void prefix_sums_serial(std::span<const double> x, std::span<double> out);
void prefix_sums(std::span<const double> x, std::span<double> out);

// out[j] = x[j] + ... + x[n-1], accumulated from the largest index down
void suffix_sums_serial(std::span<const double> x, std::span<double> out);
void suffix_sums(std::span<const double> x, std::span<double> out);

}  // namespace hardydiv::kernels
