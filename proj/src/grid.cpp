#include "hardydiv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hardydiv/kernels.hpp"

namespace hardydiv {

namespace {

// |[x0,x1] x [y0,y1] ∩ {x2 < x1^gamma}| in closed form
double clipped_area(double gamma, double x0, double x1, double y0, double y1) {
  const auto anti = [gamma](double x) { return std::pow(x, gamma + 1.0) / (gamma + 1.0); };
  const double xa = y0 > 0.0 ? std::pow(y0, 1.0 / gamma) : 0.0;
  const double xb = std::pow(y1, 1.0 / gamma);
  const double lo = std::clamp(xa, x0, x1);
  const double hi = std::clamp(xb, x0, x1);
  double area = anti(hi) - anti(lo) - y0 * (hi - lo) + (y1 - y0) * (x1 - hi);
  return std::max(area, 0.0);
}

}  // namespace

std::shared_ptr<const PanelGrid> PanelGrid::create(double gamma, int n_panels, int nx, int ny) {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma >= 1 required");
  if (n_panels < 1 || nx < 1 || ny < 1) throw std::invalid_argument("bad grid shape");
  auto grid = std::make_shared<PanelGrid>();
  grid->gamma_ = gamma;
  grid->n_panels_ = n_panels;
  grid->nx_ = nx;
  grid->ny_ = ny;
  grid->panel_begin_.push_back(0);
  for (int k = 0; k < n_panels; ++k) {
    const double xl = std::exp2(-static_cast<double>(k + 1));
    const double xr = std::exp2(-static_cast<double>(k));
    const double ytop = std::pow(xr, gamma);
    const double hx = (xr - xl) / nx;
    const double hy = ytop / ny;
    double parea = 0.0;
    for (int cx = 0; cx < nx; ++cx) {
      const double x0 = xl + cx * hx;
      const double x1 = (cx == nx - 1) ? xr : xl + (cx + 1) * hx;
      for (int cy = 0; cy < ny; ++cy) {
        const double y0 = cy * hy;
        const double y1 = (cy + 1) * hy;
        const double a = clipped_area(gamma, x0, x1, y0, y1);
        if (a <= 0.0) continue;
        Cell c;
        c.x0 = x0;
        c.x1 = x1;
        c.y0 = y0;
        c.y1 = y1;
        c.cx = 0.5 * (x0 + x1);
        c.cy = 0.5 * (y0 + y1);
        c.area = a;
        c.panel = k;
        grid->cells_.push_back(c);
        parea += a;
      }
    }
    grid->panel_begin_.push_back(grid->cells_.size());
    grid->panel_area_.push_back(parea);
  }
  return grid;
}

GridFunction::GridFunction(std::shared_ptr<const PanelGrid> grid)
    : grid_(std::move(grid)), values_(grid_->cells().size(), 0.0) {}

GridFunction::GridFunction(std::shared_ptr<const PanelGrid> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_->cells().size())
    throw std::invalid_argument("grid/value size mismatch");
}

GridFunction GridFunction::sample(std::shared_ptr<const PanelGrid> grid,
                                  const std::function<double(double, double)>& f) {
  GridFunction out(grid);
  const auto& cells = out.grid().cells();
  for (std::size_t i = 0; i < cells.size(); ++i) out.values_[i] = f(cells[i].cx, cells[i].cy);
  return out;
}

double GridFunction::integral() const {
  std::vector<double> areas(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) areas[i] = grid_->cells()[i].area;
  return kernels::dot(values_, areas);
}

double GridFunction::l1_norm() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    acc += std::abs(values_[i]) * grid_->cells()[i].area;
  return acc;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

void GridFunction::remove_mean() {
  double total = 0.0;
  for (const auto& c : grid_->cells()) total += c.area;
  const double mean = integral() / total;
  for (double& v : values_) v -= mean;
}

void export_csv(const GridFunction& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  const auto& g = f.grid();
  out.precision(17);
  out << "# hardydiv-grid gamma=" << g.gamma() << " n_panels=" << g.n_panels()
      << " nx=" << g.nx() << " ny=" << g.ny() << "\n";
  out << "panel,cell_x,cell_y,value,area\n";
  for (std::size_t i = 0; i < g.cells().size(); ++i) {
    const auto& c = g.cells()[i];
    out << c.panel << ',' << c.cx << ',' << c.cy << ',' << f.values()[i] << ',' << c.area
        << "\n";
  }
}

GridFunction import_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string header;
  std::getline(in, header);
  double gamma = 0.0;
  int n_panels = 0, nx = 0, ny = 0;
  if (std::sscanf(header.c_str(), "# hardydiv-grid gamma=%lf n_panels=%d nx=%d ny=%d", &gamma,
                  &n_panels, &nx, &ny) != 4)
    throw std::runtime_error("not a hardydiv grid CSV: " + path.string());
  auto grid = PanelGrid::create(gamma, n_panels, nx, ny);
  std::vector<double> values;
  values.reserve(grid->cells().size());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'p') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    int panel;
    double cx, cy, value, area;
    if (ss >> panel >> cx >> cy >> value >> area) values.push_back(value);
  }
  return GridFunction(std::move(grid), std::move(values));
}

namespace {
constexpr char kMagic[4] = {'H', 'D', 'G', 'F'};
constexpr std::uint8_t kVersion = 1;
}  // namespace

void export_binary(const GridFunction& f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  const auto& g = f.grid();
  out.write(kMagic, 4);
  out.put(static_cast<char>(kVersion));
  const double gamma = g.gamma();
  const std::int32_t dims[3] = {g.n_panels(), g.nx(), g.ny()};
  const std::uint64_t count = f.values().size();
  out.write(reinterpret_cast<const char*>(&gamma), sizeof(gamma));
  out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  out.write(reinterpret_cast<const char*>(&count), sizeof(count));
  out.write(reinterpret_cast<const char*>(f.values().data()),
            static_cast<std::streamsize>(count * sizeof(double)));
}

GridFunction import_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) throw std::runtime_error("bad grid file magic");
  if (in.get() != kVersion) throw std::runtime_error("unsupported grid file version");
  double gamma;
  std::int32_t dims[3];
  std::uint64_t count;
  in.read(reinterpret_cast<char*>(&gamma), sizeof(gamma));
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  in.read(reinterpret_cast<char*>(&count), sizeof(count));
  auto grid = PanelGrid::create(gamma, dims[0], dims[1], dims[2]);
  if (count != grid->cells().size()) throw std::runtime_error("grid file cell count mismatch");
  std::vector<double> values(count);
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(count * sizeof(double)));
  if (!in) throw std::runtime_error("truncated grid file");
  return GridFunction(std::move(grid), std::move(values));
}

}  // namespace hardydiv
