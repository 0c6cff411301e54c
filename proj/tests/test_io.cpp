#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "hardydiv/grid.hpp"
#include "hardydiv/mac.hpp"
#include "hardydiv/testfields.hpp"

using namespace hardydiv;

namespace {
const auto tmp = std::filesystem::temp_directory_path();
}

TEST_CASE("binary grid round trip is bit-exact") {
  auto grid = PanelGrid::create(2.0, 5, 20, 20);
  const auto f = random_zero_mean_field(grid, 1234);
  const auto path = tmp / "hardydiv_io_test.bin";
  export_binary(f, path);
  const auto g = import_binary(path);
  REQUIRE(g.values().size() == f.values().size());
  for (std::size_t i = 0; i < f.values().size(); ++i) CHECK(g.values()[i] == f.values()[i]);
  CHECK(g.grid().gamma() == f.grid().gamma());
  CHECK(g.grid().n_panels() == f.grid().n_panels());
  std::filesystem::remove(path);
}

TEST_CASE("csv grid round trip") {
  auto grid = PanelGrid::create(1.5, 4, 12, 12);
  const auto f = random_zero_mean_field(grid, 777);
  const auto path = tmp / "hardydiv_io_test.csv";
  export_csv(f, path);
  const auto g = import_csv(path);
  REQUIRE(g.values().size() == f.values().size());
  // 17 significant digits round-trip doubles exactly
  for (std::size_t i = 0; i < f.values().size(); ++i) CHECK(g.values()[i] == f.values()[i]);
  std::filesystem::remove(path);
}

TEST_CASE("corrupt inputs are rejected") {
  const auto path = tmp / "hardydiv_io_bad.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out << "not a grid file at all";
  }
  CHECK_THROWS(import_binary(path));
  const auto cpath = tmp / "hardydiv_io_bad.csv";
  {
    std::ofstream out(cpath);
    out << "x,y\n1,2\n";
  }
  CHECK_THROWS(import_csv(cpath));
  CHECK_THROWS(import_binary(tmp / "hardydiv_does_not_exist.bin"));
  std::filesystem::remove(path);
  std::filesystem::remove(cpath);
}

TEST_CASE("face export writes every active face") {
  auto mac = MacGrid::create(2.0, 2, 16, 16);
  StaggeredField f(mac);
  for (double& v : f.u) v = 1.0;
  for (double& v : f.v) v = 2.0;
  f.enforce_mask();
  const auto path = tmp / "hardydiv_faces.csv";
  export_face_csv(f, path);
  std::ifstream in(path);
  std::string line;
  std::size_t rows = 0;
  std::getline(in, line);  // header comment
  std::getline(in, line);  // column names
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  std::size_t active = 0;
  for (int ix = 0; ix <= mac->nx(); ++ix)
    for (int iy = 0; iy < mac->ny(); ++iy)
      if (mac->uface_active(ix, iy)) ++active;
  for (int ix = 0; ix < mac->nx(); ++ix)
    for (int iy = 0; iy <= mac->ny(); ++iy)
      if (mac->vface_active(ix, iy)) ++active;
  CHECK(rows == active);
  std::filesystem::remove(path);
}
