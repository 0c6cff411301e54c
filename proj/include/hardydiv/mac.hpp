#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <vector>

namespace hardydiv {

/// MAC staggered grid over one dyadic strip Omega_i: scalar data at cell
/// centers, first vector component on vertical faces, second component on
/// horizontal faces. Cells whose center lies outside Omega_i are excluded;
/// a face is active only when both adjacent cells are active, so every
/// boundary or masked face is pinned to zero (discrete H^1_0).
/// hy scales with the strip height 2^{-gamma i}.
class MacGrid {
 public:
  static std::shared_ptr<const MacGrid> create(double gamma, std::int64_t subdomain, int nx,
                                               int ny);

  double gamma() const { return gamma_; }
  std::int64_t subdomain() const { return subdomain_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double x_lo() const { return x_lo_; }
  double x_hi() const { return x_hi_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }

  // index helpers (column-major in ix, then iy)
  std::size_t cell_index(int ix, int iy) const { return static_cast<std::size_t>(ix) * ny_ + iy; }
  std::size_t uface_index(int ix, int iy) const { return static_cast<std::size_t>(ix) * ny_ + iy; }
  std::size_t vface_index(int ix, int iy) const {
    return static_cast<std::size_t>(ix) * (ny_ + 1) + iy;
  }

  bool cell_active(int ix, int iy) const;
  bool uface_active(int ix, int iy) const;  // ix in 0..nx, iy in 0..ny-1
  bool vface_active(int ix, int iy) const;  // ix in 0..nx-1, iy in 0..ny

  double cell_x(int ix) const { return x_lo_ + (ix + 0.5) * hx_; }
  double cell_y(int iy) const { return (iy + 0.5) * hy_; }

  std::size_t n_cells() const { return static_cast<std::size_t>(nx_) * ny_; }
  std::size_t n_ufaces() const { return static_cast<std::size_t>(nx_ + 1) * ny_; }
  std::size_t n_vfaces() const { return static_cast<std::size_t>(nx_) * (ny_ + 1); }
  std::int64_t n_active_cells() const { return n_active_cells_; }

 private:
  double gamma_ = 1.0;
  std::int64_t subdomain_ = 0;
  int nx_ = 0, ny_ = 0;
  double x_lo_ = 0.0, x_hi_ = 0.0, hx_ = 0.0, hy_ = 0.0;
  std::int64_t n_active_cells_ = 0;
  std::vector<std::uint8_t> cell_, uface_, vface_;
};

/// Face data over a MacGrid; inactive faces always hold exact zeros.
struct StaggeredField {
  std::shared_ptr<const MacGrid> grid;
  std::vector<double> u;  // (nx+1) * ny
  std::vector<double> v;  // nx * (ny+1)

  explicit StaggeredField(std::shared_ptr<const MacGrid> g);
  void clear();
  void enforce_mask();  // zero every inactive face
  bool mask_clean() const;
};

/// Discrete divergence at cell centers (zero at inactive cells).
std::vector<double> apply_divergence(const StaggeredField& f);
/// Adjoint scatter of cell multipliers onto active faces.
StaggeredField apply_divergence_transpose(std::shared_ptr<const MacGrid> grid,
                                          const std::vector<double>& lam);
/// Dirichlet face Laplacian: the Hessian of the gradient energy.
void apply_energy_operator(const StaggeredField& in, StaggeredField& out);
/// Gradient energy  int |Df|^2  with all differences taken against zero
/// outside the active set.
double gradient_energy(const StaggeredField& f);
/// Same, with each squared difference weighted by nu(x1) at its location.
template <typename Weight>
double gradient_energy_weighted(const StaggeredField& f, Weight&& nu);

void export_face_csv(const StaggeredField& f, const std::filesystem::path& path);

// --- template definition ---
template <typename Weight>
double gradient_energy_weighted(const StaggeredField& f, Weight&& nu) {
  const MacGrid& g = *f.grid;
  const int nx = g.nx(), ny = g.ny();
  const double hx = g.hx(), hy = g.hy(), cellw = hx * hy;
  double e = 0.0;
  auto uval = [&](int ix, int iy) {
    return (ix < 0 || ix > nx || iy < 0 || iy >= ny || !g.uface_active(ix, iy))
               ? 0.0
               : f.u[g.uface_index(ix, iy)];
  };
  auto vval = [&](int ix, int iy) {
    return (ix < 0 || ix >= nx || iy < 0 || iy > ny || !g.vface_active(ix, iy))
               ? 0.0
               : f.v[g.vface_index(ix, iy)];
  };
  // u-component: x-differences live at cell centers, y-differences at corners
  for (int ix = 0; ix <= nx + 1; ++ix)
    for (int iy = 0; iy < ny; ++iy) {
      const double d = uval(ix, iy) - uval(ix - 1, iy);
      if (d != 0.0) e += d * d / (hx * hx) * cellw * nu(g.x_lo() + (ix - 0.5) * hx);
    }
  for (int ix = 0; ix <= nx; ++ix)
    for (int iy = 0; iy <= ny; ++iy) {
      const double d = uval(ix, iy) - uval(ix, iy - 1);
      if (d != 0.0) e += d * d / (hy * hy) * cellw * nu(g.x_lo() + ix * hx);
    }
  // v-component: x-differences at corners, y-differences at cell centers
  for (int ix = 0; ix <= nx; ++ix)
    for (int iy = 0; iy <= ny; ++iy) {
      const double d = vval(ix, iy) - vval(ix - 1, iy);
      if (d != 0.0) e += d * d / (hx * hx) * cellw * nu(g.x_lo() + ix * hx);
    }
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy <= ny + 1; ++iy) {
      const double d = vval(ix, iy) - vval(ix, iy - 1);
      if (d != 0.0) e += d * d / (hy * hy) * cellw * nu(g.cell_x(ix));
    }
  return e;
}

}  // namespace hardydiv
