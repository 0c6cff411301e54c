#include "hardydiv/mac.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace hardydiv {

std::shared_ptr<const MacGrid> MacGrid::create(double gamma, std::int64_t subdomain, int nx,
                                               int ny) {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma >= 1 required");
  if (subdomain < 0) throw std::domain_error("subdomain index must be nonnegative");
  if (nx < 2 || ny < 2) throw std::invalid_argument("MAC grid needs at least 2x2 cells");
  auto grid = std::make_shared<MacGrid>();
  grid->gamma_ = gamma;
  grid->subdomain_ = subdomain;
  grid->nx_ = nx;
  grid->ny_ = ny;
  grid->x_lo_ = std::exp2(-static_cast<double>(subdomain + 2));
  grid->x_hi_ = std::exp2(-static_cast<double>(subdomain));
  const double y_hi = std::pow(grid->x_hi_, gamma);  // strip height 2^{-gamma i}
  grid->hx_ = (grid->x_hi_ - grid->x_lo_) / nx;
  grid->hy_ = y_hi / ny;

  grid->cell_.assign(grid->n_cells(), 0);
  for (int ix = 0; ix < nx; ++ix) {
    const double cx = grid->cell_x(ix);
    const double ytop = std::pow(cx, gamma);
    for (int iy = 0; iy < ny; ++iy) {
      if (grid->cell_y(iy) < ytop) {
        grid->cell_[grid->cell_index(ix, iy)] = 1;
        ++grid->n_active_cells_;
      }
    }
  }
  if (grid->n_active_cells_ == 0) throw std::runtime_error("MAC grid has no active cells");

  grid->uface_.assign(grid->n_ufaces(), 0);
  for (int ix = 1; ix < nx; ++ix)
    for (int iy = 0; iy < ny; ++iy)
      if (grid->cell_active(ix - 1, iy) && grid->cell_active(ix, iy))
        grid->uface_[grid->uface_index(ix, iy)] = 1;
  grid->vface_.assign(grid->n_vfaces(), 0);
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 1; iy < ny; ++iy)
      if (grid->cell_active(ix, iy - 1) && grid->cell_active(ix, iy))
        grid->vface_[grid->vface_index(ix, iy)] = 1;
  return grid;
}

bool MacGrid::cell_active(int ix, int iy) const {
  if (ix < 0 || ix >= nx_ || iy < 0 || iy >= ny_) return false;
  return cell_[cell_index(ix, iy)] != 0;
}

bool MacGrid::uface_active(int ix, int iy) const {
  if (ix < 0 || ix > nx_ || iy < 0 || iy >= ny_) return false;
  return uface_[uface_index(ix, iy)] != 0;
}

bool MacGrid::vface_active(int ix, int iy) const {
  if (ix < 0 || ix >= nx_ || iy < 0 || iy > ny_) return false;
  return vface_[vface_index(ix, iy)] != 0;
}

StaggeredField::StaggeredField(std::shared_ptr<const MacGrid> g)
    : grid(std::move(g)), u(grid->n_ufaces(), 0.0), v(grid->n_vfaces(), 0.0) {}

void StaggeredField::clear() {
  std::fill(u.begin(), u.end(), 0.0);
  std::fill(v.begin(), v.end(), 0.0);
}

void StaggeredField::enforce_mask() {
  const MacGrid& g = *grid;
  for (int ix = 0; ix <= g.nx(); ++ix)
    for (int iy = 0; iy < g.ny(); ++iy)
      if (!g.uface_active(ix, iy)) u[g.uface_index(ix, iy)] = 0.0;
  for (int ix = 0; ix < g.nx(); ++ix)
    for (int iy = 0; iy <= g.ny(); ++iy)
      if (!g.vface_active(ix, iy)) v[g.vface_index(ix, iy)] = 0.0;
}

bool StaggeredField::mask_clean() const {
  const MacGrid& g = *grid;
  for (int ix = 0; ix <= g.nx(); ++ix)
    for (int iy = 0; iy < g.ny(); ++iy)
      if (!g.uface_active(ix, iy) && u[g.uface_index(ix, iy)] != 0.0) return false;
  for (int ix = 0; ix < g.nx(); ++ix)
    for (int iy = 0; iy <= g.ny(); ++iy)
      if (!g.vface_active(ix, iy) && v[g.vface_index(ix, iy)] != 0.0) return false;
  return true;
}

std::vector<double> apply_divergence(const StaggeredField& f) {
  const MacGrid& g = *f.grid;
  std::vector<double> out(g.n_cells(), 0.0);
  const double ihx = 1.0 / g.hx(), ihy = 1.0 / g.hy();
  for (int ix = 0; ix < g.nx(); ++ix)
    for (int iy = 0; iy < g.ny(); ++iy) {
      if (!g.cell_active(ix, iy)) continue;
      const double du = f.u[g.uface_index(ix + 1, iy)] - f.u[g.uface_index(ix, iy)];
      const double dv = f.v[g.vface_index(ix, iy + 1)] - f.v[g.vface_index(ix, iy)];
      out[g.cell_index(ix, iy)] = du * ihx + dv * ihy;
    }
  return out;
}

StaggeredField apply_divergence_transpose(std::shared_ptr<const MacGrid> grid,
                                          const std::vector<double>& lam) {
  const MacGrid& g = *grid;
  if (lam.size() != g.n_cells()) throw std::invalid_argument("multiplier size does not match grid");
  StaggeredField out(std::move(grid));
  const double ihx = 1.0 / g.hx(), ihy = 1.0 / g.hy();
  auto lval = [&](int ix, int iy) {
    return g.cell_active(ix, iy) ? lam[g.cell_index(ix, iy)] : 0.0;
  };
  for (int ix = 1; ix < g.nx(); ++ix)
    for (int iy = 0; iy < g.ny(); ++iy)
      if (g.uface_active(ix, iy))
        out.u[g.uface_index(ix, iy)] = (lval(ix - 1, iy) - lval(ix, iy)) * ihx;
  for (int ix = 0; ix < g.nx(); ++ix)
    for (int iy = 1; iy < g.ny(); ++iy)
      if (g.vface_active(ix, iy))
        out.v[g.vface_index(ix, iy)] = (lval(ix, iy - 1) - lval(ix, iy)) * ihy;
  return out;
}

void apply_energy_operator(const StaggeredField& in, StaggeredField& out) {
  const MacGrid& g = *in.grid;
  const int nx = g.nx(), ny = g.ny();
  const double cellw = g.hx() * g.hy();
  const double cx = cellw / (g.hx() * g.hx()), cy = cellw / (g.hy() * g.hy());
  out.clear();
  auto uval = [&](int ix, int iy) {
    return g.uface_active(ix, iy) ? in.u[g.uface_index(ix, iy)] : 0.0;
  };
  auto vval = [&](int ix, int iy) {
    return g.vface_active(ix, iy) ? in.v[g.vface_index(ix, iy)] : 0.0;
  };
#pragma omp parallel for schedule(static)
  for (int ix = 0; ix <= nx; ++ix)
    for (int iy = 0; iy < ny; ++iy) {
      if (!g.uface_active(ix, iy)) continue;
      const double c = uval(ix, iy);
      out.u[g.uface_index(ix, iy)] =
          2.0 * cx * (2.0 * c - uval(ix - 1, iy) - uval(ix + 1, iy)) +
          2.0 * cy * (2.0 * c - uval(ix, iy - 1) - uval(ix, iy + 1));
    }
#pragma omp parallel for schedule(static)
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy <= ny; ++iy) {
      if (!g.vface_active(ix, iy)) continue;
      const double c = vval(ix, iy);
      out.v[g.vface_index(ix, iy)] =
          2.0 * cx * (2.0 * c - vval(ix - 1, iy) - vval(ix + 1, iy)) +
          2.0 * cy * (2.0 * c - vval(ix, iy - 1) - vval(ix, iy + 1));
    }
}

double gradient_energy(const StaggeredField& f) {
  return gradient_energy_weighted(f, [](double) { return 1.0; });
}

void export_face_csv(const StaggeredField& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  const MacGrid& g = *f.grid;
  out.precision(17);
  out << "# hardydiv-field gamma=" << g.gamma() << " subdomain=" << g.subdomain()
      << " nx=" << g.nx() << " ny=" << g.ny() << "\n";
  out << "component,x,y,value\n";
  for (int ix = 0; ix <= g.nx(); ++ix)
    for (int iy = 0; iy < g.ny(); ++iy)
      if (g.uface_active(ix, iy))
        out << "u," << g.x_lo() + ix * g.hx() << ',' << g.cell_y(iy) << ','
            << f.u[g.uface_index(ix, iy)] << "\n";
  for (int ix = 0; ix < g.nx(); ++ix)
    for (int iy = 0; iy <= g.ny(); ++iy)
      if (g.vface_active(ix, iy))
        out << "v," << g.cell_x(ix) << ',' << iy * g.hy() << ',' << f.v[g.vface_index(ix, iy)]
            << "\n";
}

}  // namespace hardydiv
