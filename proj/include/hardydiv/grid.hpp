#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <vector>

namespace hardydiv {

/// Cell-averaged quadrature grid over the cusp domain, organized by dyadic
/// panels P_k = (2^-(k+1), 2^-k) x (0, x1^gamma). Each panel carries
/// nx uniform columns and ny uniform rows over [0, 2^{-gamma k}]; cells are
/// clipped against the curve x2 = x1^gamma with closed-form areas and cells
/// of zero clipped area are dropped. The dyadic strip Omega_i is the panel
/// pair (P_i, P_{i+1}) and the overlap B_i is P_i.
class PanelGrid {
 public:
  struct Cell {
    double x0, x1, y0, y1;  // bounding rectangle
    double cx, cy;          // rectangle center
    double area;            // |cell ∩ Omega|, exact
    int panel;
  };

  static std::shared_ptr<const PanelGrid> create(double gamma, int n_panels, int nx, int ny);

  double gamma() const { return gamma_; }
  int n_panels() const { return n_panels_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t panel_begin(int k) const { return panel_begin_[static_cast<std::size_t>(k)]; }
  std::size_t panel_end(int k) const { return panel_begin_[static_cast<std::size_t>(k) + 1]; }
  /// Grid measure of panel k (sum of its clipped cell areas).
  double panel_area(int k) const { return panel_area_[static_cast<std::size_t>(k)]; }

 private:
  double gamma_ = 1.0;
  int n_panels_ = 0, nx_ = 0, ny_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::size_t> panel_begin_;
  std::vector<double> panel_area_;
};

/// Scalar cell data over a PanelGrid.
class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(std::shared_ptr<const PanelGrid> grid);
  GridFunction(std::shared_ptr<const PanelGrid> grid, std::vector<double> values);

  static GridFunction sample(std::shared_ptr<const PanelGrid> grid,
                             const std::function<double(double, double)>& f);

  const PanelGrid& grid() const { return *grid_; }
  std::shared_ptr<const PanelGrid> grid_ptr() const { return grid_; }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  double integral() const;       // sum value * area
  double l1_norm() const;        // sum |value| * area
  double max_abs() const;
  /// Subtracts the area-weighted mean so the function integrates to zero.
  void remove_mean();

 private:
  std::shared_ptr<const PanelGrid> grid_;
  std::vector<double> values_;
};

/// CSV layout: a header comment carrying the grid parameters, then one row
/// (panel, cell_x, cell_y, value, area) per cell.
void export_csv(const GridFunction& f, const std::filesystem::path& path);
GridFunction import_csv(const std::filesystem::path& path);

/// Compact binary layout (magic "HDGF", version byte, grid parameters,
/// raw little-endian doubles). Round-trips bit-exactly.
void export_binary(const GridFunction& f, const std::filesystem::path& path);
GridFunction import_binary(const std::filesystem::path& path);

}  // namespace hardydiv
