#include "hardydiv/divsolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardydiv/cusp_geometry.hpp"
#include "hardydiv/decomposition.hpp"
#include "hardydiv/grid.hpp"
#include "hardydiv/kernels.hpp"

namespace hardydiv {

namespace {

/// In-place Cholesky of a banded SPD matrix, lower band stored row-major
/// with band(i, j) at i*(b+1) + (j - i + b) for j in [i-b, i].
class BandedCholesky {
 public:
  BandedCholesky(std::int64_t n, std::int64_t bandwidth)
      : n_(n), b_(bandwidth), band_(static_cast<std::size_t>(n) * (bandwidth + 1), 0.0) {}

  double& at(std::int64_t i, std::int64_t j) {
    return band_[static_cast<std::size_t>(i) * (b_ + 1) + (j - i + b_)];
  }
  double get(std::int64_t i, std::int64_t j) const {
    return band_[static_cast<std::size_t>(i) * (b_ + 1) + (j - i + b_)];
  }

  void factor() {
    for (std::int64_t i = 0; i < n_; ++i) {
      const std::int64_t lo = std::max<std::int64_t>(0, i - b_);
      for (std::int64_t j = lo; j <= i; ++j) {
        double s = get(i, j);
        const std::int64_t klo = std::max<std::int64_t>(lo, j - b_);
        for (std::int64_t k = klo; k < j; ++k) s -= get(i, k) * get(j, k);
        if (j < i) {
          at(i, j) = s / get(j, j);
        } else {
          if (!(s > 0.0)) throw std::runtime_error("face Laplacian lost positive definiteness");
          at(i, i) = std::sqrt(s);
        }
      }
    }
  }

  void solve(std::vector<double>& x) const {
    for (std::int64_t i = 0; i < n_; ++i) {
      double s = x[static_cast<std::size_t>(i)];
      const std::int64_t lo = std::max<std::int64_t>(0, i - b_);
      for (std::int64_t k = lo; k < i; ++k) s -= get(i, k) * x[static_cast<std::size_t>(k)];
      x[static_cast<std::size_t>(i)] = s / get(i, i);
    }
    for (std::int64_t i = n_ - 1; i >= 0; --i) {
      double s = x[static_cast<std::size_t>(i)];
      const std::int64_t hi = std::min<std::int64_t>(n_ - 1, i + b_);
      for (std::int64_t k = i + 1; k <= hi; ++k) s -= get(k, i) * x[static_cast<std::size_t>(k)];
      x[static_cast<std::size_t>(i)] = s / get(i, i);
    }
  }

 private:
  std::int64_t n_, b_;
  std::vector<double> band_;
};

/// The two face Laplacians of apply_energy_operator as factored banded
/// matrices; inactive faces carry identity rows so full arrays pass through.
struct EnergyFactor {
  BandedCholesky u;
  BandedCholesky v;

  explicit EnergyFactor(const MacGrid& g)
      : u(static_cast<std::int64_t>(g.n_ufaces()), g.ny()),
        v(static_cast<std::int64_t>(g.n_vfaces()), g.ny() + 1) {
    const double cellw = g.hx() * g.hy();
    const double cx = 2.0 * cellw / (g.hx() * g.hx());
    const double cy = 2.0 * cellw / (g.hy() * g.hy());
    for (int ix = 0; ix <= g.nx(); ++ix)
      for (int iy = 0; iy < g.ny(); ++iy) {
        const auto row = static_cast<std::int64_t>(g.uface_index(ix, iy));
        if (!g.uface_active(ix, iy)) {
          u.at(row, row) = 1.0;
          continue;
        }
        u.at(row, row) = 2.0 * (cx + cy);
        if (g.uface_active(ix - 1, iy))
          u.at(row, static_cast<std::int64_t>(g.uface_index(ix - 1, iy))) = -cx;
        if (g.uface_active(ix, iy - 1))
          u.at(row, static_cast<std::int64_t>(g.uface_index(ix, iy - 1))) = -cy;
      }
    u.factor();
    for (int ix = 0; ix < g.nx(); ++ix)
      for (int iy = 0; iy <= g.ny(); ++iy) {
        const auto row = static_cast<std::int64_t>(g.vface_index(ix, iy));
        if (!g.vface_active(ix, iy)) {
          v.at(row, row) = 1.0;
          continue;
        }
        v.at(row, row) = 2.0 * (cx + cy);
        if (g.vface_active(ix - 1, iy))
          v.at(row, static_cast<std::int64_t>(g.vface_index(ix - 1, iy))) = -cx;
        if (g.vface_active(ix, iy - 1))
          v.at(row, static_cast<std::int64_t>(g.vface_index(ix, iy - 1))) = -cy;
      }
    v.factor();
  }

  void apply_inverse(StaggeredField& f) const {
    u.solve(f.u);
    v.solve(f.v);
  }
};

void project_active_mean(const MacGrid& g, std::vector<double>& cells) {
  double sum = 0.0;
  for (int ix = 0; ix < g.nx(); ++ix)
    for (int iy = 0; iy < g.ny(); ++iy)
      if (g.cell_active(ix, iy)) sum += cells[g.cell_index(ix, iy)];
  const double mean = sum / static_cast<double>(g.n_active_cells());
  for (int ix = 0; ix < g.nx(); ++ix)
    for (int iy = 0; iy < g.ny(); ++iy)
      if (g.cell_active(ix, iy)) cells[g.cell_index(ix, iy)] -= mean;
}

}  // namespace

LocalSolution local_solve(std::shared_ptr<const MacGrid> grid, std::vector<double> g,
                          double tol) {
  const MacGrid& mg = *grid;
  if (g.size() != mg.n_cells()) throw std::invalid_argument("local_solve: cell data size mismatch");
  for (int ix = 0; ix < mg.nx(); ++ix)
    for (int iy = 0; iy < mg.ny(); ++iy)
      if (!mg.cell_active(ix, iy)) g[mg.cell_index(ix, iy)] = 0.0;

  const double cellw = mg.hx() * mg.hy();
  double l1 = 0.0, mean_int = 0.0;
  for (double x : g) {
    l1 += std::abs(x) * cellw;
    mean_int += x * cellw;
  }
  if (l1 > 0.0 && std::abs(mean_int) > 1e-10 * l1)
    throw std::invalid_argument("local_solve: incompatible data, integral = " +
                                std::to_string(mean_int));

  LocalSolution sol{StaggeredField(grid), {}};
  auto& rep = sol.report;
  rep.subdomain = mg.subdomain();
  const auto cert = star_shape_cert(mg.gamma(), mg.subdomain());
  rep.cd_bound = 2.0 * cert.outer_radius / cert.inner_radius;
  rep.mean_shift = mean_int / (static_cast<double>(mg.n_active_cells()) * cellw);
  project_active_mean(mg, g);

  const double g_sq = kernels::dot(g, g);
  rep.g_l2 = std::sqrt(g_sq * cellw);
  if (g_sq == 0.0) return sol;

  const EnergyFactor kf(mg);
  const auto apply_schur = [&](const std::vector<double>& lam) {
    StaggeredField w = apply_divergence_transpose(grid, lam);
    kf.apply_inverse(w);
    auto cells = apply_divergence(w);
    project_active_mean(mg, cells);
    return cells;
  };

  // CG on B K^{-1} B^T lambda = g over mean-zero multipliers
  std::vector<double> lam(g.size(), 0.0), r = g, p = r;
  double rs = g_sq;
  const double target = tol * std::sqrt(g_sq);
  for (std::int64_t it = 0; it < 20000; ++it) {
    const auto sp = apply_schur(p);
    const double alpha = rs / kernels::dot(p, sp);
    for (std::size_t c = 0; c < lam.size(); ++c) {
      lam[c] += alpha * p[c];
      r[c] -= alpha * sp[c];
    }
    project_active_mean(mg, r);
    const double rs_new = kernels::dot(r, r);
    rep.outer_iterations = it + 1;
    if (std::sqrt(rs_new) <= target) break;
    const double beta = rs_new / rs;
    for (std::size_t c = 0; c < p.size(); ++c) p[c] = r[c] + beta * p[c];
    rs = rs_new;
  }

  sol.field = apply_divergence_transpose(grid, lam);
  kf.apply_inverse(sol.field);
  sol.field.enforce_mask();

  const auto div = apply_divergence(sol.field);
  double res_sq = 0.0;
  for (std::size_t c = 0; c < div.size(); ++c) {
    const double d = div[c] - g[c];
    res_sq += d * d;
  }
  rep.div_residual_rel = std::sqrt(res_sq / g_sq);
  rep.energy = gradient_energy(sol.field);
  rep.local_ratio = std::sqrt(rep.energy) / rep.g_l2;
  return sol;
}

LocalSolution local_solve(std::shared_ptr<const MacGrid> grid,
                          const std::function<double(double, double)>& g, double tol) {
  const MacGrid& mg = *grid;
  std::vector<double> cells(mg.n_cells(), 0.0);
  for (int ix = 0; ix < mg.nx(); ++ix)
    for (int iy = 0; iy < mg.ny(); ++iy)
      if (mg.cell_active(ix, iy)) cells[mg.cell_index(ix, iy)] = g(mg.cell_x(ix), mg.cell_y(iy));
  project_active_mean(mg, cells);
  return local_solve(std::move(grid), std::move(cells), tol);
}

GlobalSolution global_solve(double gamma, const std::function<double(double, double)>& f,
                            const WeightSpec& omega, int n_sub, int res, double tol) {
  auto pgrid = PanelGrid::create(gamma, n_sub + 1, res, res);
  GridFunction fg = GridFunction::sample(pgrid, f);
  double area = 0.0;
  for (const auto& c : pgrid->cells()) area += c.area;
  const double shift = fg.integral() / area;  // quadrature mean of the sampled data
  for (double& v : fg.values()) v -= shift;

  const auto pou = build_partition_of_unity(gamma, n_sub);
  const auto dec = decompose(fg, pou);

  GlobalSolution out;
  auto& rep = out.report;
  double den = 0.0;
  for (std::size_t c = 0; c < fg.values().size(); ++c) {
    const auto& cell = pgrid->cells()[c];
    den += fg.values()[c] * fg.values()[c] * std::exp(-2.0 * omega.log_value(cell.cx)) *
           cell.area;
  }
  rep.denominator = den;

  const auto nu1 = [&](double x1) {
    return std::exp(2.0 * (gamma - 1.0) * std::log(x1) - 2.0 * omega.log_value(x1));
  };

  for (int i = 0; i < n_sub; ++i) {
    auto mac = MacGrid::create(gamma, i, res, res);
    const double left_edge = std::exp2(-static_cast<double>(i + 1));  // splits P_i from P_{i+1}
    std::vector<double> cells(mac->n_cells(), 0.0);
    for (int ix = 0; ix < mac->nx(); ++ix)
      for (int iy = 0; iy < mac->ny(); ++iy) {
        if (!mac->cell_active(ix, iy)) continue;
        const double x = mac->cell_x(ix), y = mac->cell_y(iy);
        double val = (f(x, y) - shift) * pou.value(i, x);
        if (x < left_edge) {
          if (i + 1 < n_sub) val += dec.h[static_cast<std::size_t>(i) + 1];
        } else if (i >= 1) {
          val -= dec.h[static_cast<std::size_t>(i)];
        }
        cells[mac->cell_index(ix, iy)] = val;
      }
    project_active_mean(*mac, cells);
    auto sol = local_solve(mac, std::move(cells), tol);
    rep.max_div_residual_rel = std::max(rep.max_div_residual_rel, sol.report.div_residual_rel);
    rep.numerator += 2.0 * gradient_energy_weighted(sol.field, nu1);
    rep.locals.push_back(sol.report);
    out.pieces.push_back(std::move(sol));
  }
  rep.global_ratio = den > 0.0 ? rep.numerator / den : 0.0;

  rep.c_omega = admissibility(omega, 2.0, gamma, 30).c_omega;
  const auto seq = hardy_sequence(omega, gamma, 2.0, 2000);
  rep.ch_upper = hardy_bounds(seq, seq, 2.0, 2000).upper;
  rep.main_bound = gamma * gamma * std::exp2(12.0 + 4.0 * gamma) *
                   std::pow(rep.c_omega, 8.0) * rep.ch_upper * rep.ch_upper;
  return out;
}

}  // namespace hardydiv
