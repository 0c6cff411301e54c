#include "hardydiv/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardydiv {

PartitionOfUnity::PartitionOfUnity(int n_sub) : n_sub_(n_sub) {
  if (n_sub < 2) throw std::domain_error("partition of unity requires n_sub >= 2");
}

double PartitionOfUnity::value(int i, double x1) const {
  if (i < 0 || i >= n_sub_) return 0.0;
  const double t = -std::log2(x1);  // panel coordinate: P_k is t in (k, k+1)
  // ramp of the k-th cut, linear in ln x1 across the middle half of panel
  // P_k (the overlap B_k); phi_i = ramp(i) - ramp(i+1) telescopes to a
  // partition of unity, and each phi_i owns a plateau around t = i + 1
  const auto ramp = [&](int k) {
    return std::clamp(2.0 * (t - static_cast<double>(k)) - 0.5, 0.0, 1.0);
  };
  if (i == 0) return 1.0 - ramp(1);
  if (i == n_sub_ - 1) return ramp(i);  // absorbs the tail
  return ramp(i) - ramp(i + 1);
}

PartitionOfUnity build_partition_of_unity(double gamma, int n_sub) {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma >= 1 required");
  return PartitionOfUnity(n_sub);
}

Decomposition decompose(const GridFunction& f, const PartitionOfUnity& pou) {
  const auto& grid = f.grid();
  const int n_sub = pou.n_sub();
  if (grid.n_panels() != n_sub + 1)
    throw std::invalid_argument(
        "decompose: grid must carry exactly n_sub + 1 panels so the strips cover it");
  const double mean = f.integral();
  const double l1 = f.l1_norm();
  if (l1 > 0.0 && std::abs(mean) > 1e-10 * l1)
    throw std::invalid_argument("decompose: input must have vanishing mean, integral = " +
                                std::to_string(mean));

  const auto& cells = grid.cells();

  // per-panel plain integrals and cut-off integrals int_{P_i} f phi_i
  std::vector<double> panel_int(static_cast<std::size_t>(n_sub) + 1, 0.0);
  std::vector<double> panel_phi_int(static_cast<std::size_t>(n_sub), 0.0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const double fa = f.values()[c] * cells[c].area;
    const int k = cells[c].panel;
    panel_int[static_cast<std::size_t>(k)] += fa;
    if (k < n_sub) panel_phi_int[static_cast<std::size_t>(k)] += fa * pou.value(k, cells[c].cx);
  }

  // tail[k] = sum_{j >= k} int_{P_j} f  (sequential suffix pass)
  std::vector<double> tail(static_cast<std::size_t>(n_sub) + 2, 0.0);
  for (int k = n_sub; k >= 0; --k)
    tail[static_cast<std::size_t>(k)] =
        tail[static_cast<std::size_t>(k) + 1] + panel_int[static_cast<std::size_t>(k)];

  Decomposition dec;
  dec.n_sub = n_sub;
  dec.h.assign(static_cast<std::size_t>(n_sub) + 1, 0.0);
  // h_i = (1/|B_i|) int_{W_i} sum_{k>=i} f_k, constant on B_i = P_i; h_{n_sub} = 0
  for (int i = 1; i < n_sub; ++i)
    dec.h[static_cast<std::size_t>(i)] =
        (tail[static_cast<std::size_t>(i) + 1] + panel_phi_int[static_cast<std::size_t>(i)]) /
        grid.panel_area(i);

  dec.pieces.reserve(static_cast<std::size_t>(n_sub));
  for (int i = 0; i < n_sub; ++i) {
    GridFunction g(f.grid_ptr());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const int k = cells[c].panel;
      if (k != i && k != i + 1) continue;  // supp(g_i) ⊂ Omega_i, exact zeros elsewhere
      double v = f.values()[c] * pou.value(i, cells[c].cx);
      if (k == i + 1 && i + 1 < n_sub) v += dec.h[static_cast<std::size_t>(i) + 1];
      if (k == i && i >= 1) v -= dec.h[static_cast<std::size_t>(i)];
      g.values()[c] = v;
    }
    dec.piece_means.push_back(g.integral());
    dec.pieces.push_back(std::move(g));
  }

  double max_err = 0.0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    double s = 0.0;
    for (const auto& g : dec.pieces) s += g.values()[c];
    max_err = std::max(max_err, std::abs(s - f.values()[c]));
  }
  dec.reconstruction_max_err = max_err;
  return dec;
}

double decomposition_constant(const GridFunction& f, const Decomposition& dec,
                              const WeightSpec& omega, double q) {
  const auto& cells = f.grid().cells();
  double den = 0.0;
  for (std::size_t c = 0; c < cells.size(); ++c)
    den += std::pow(std::abs(f.values()[c]), q) * std::exp(-q * omega.log_value(cells[c].cx)) *
           cells[c].area;
  if (!(den > 0.0)) throw std::invalid_argument("decomposition_constant: degenerate input f = 0");
  double num = 0.0;
  for (const auto& g : dec.pieces)
    for (std::size_t c = 0; c < cells.size(); ++c)
      num += std::pow(std::abs(g.values()[c]), q) * std::exp(-q * omega.log_value(cells[c].cx)) *
             cells[c].area;
  return std::pow(num / den, 1.0 / q);
}

}  // namespace hardydiv
