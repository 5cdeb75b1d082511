#include "doctest.h"

#include "swekit/cases.hpp"
#include "swekit/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace swekit;
using doctest::Approx;

namespace {

std::vector<std::string> data_lines(const std::string& text)
{
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

bool mentions(const ConfigError& e, const std::string& key, const std::string& word = "")
{
  for (const auto& is : e.issues()) {
    if (is.key == key && is.reason.find(word) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("minimal parameter file gets the defaults")
{
  const auto cfg = parse_parameters("nx = 10\nlength_x = 5\nfinal_time = 1\n");
  CHECK(cfg.model.grid.nx == 10);
  CHECK(cfg.model.grid.dx == Approx(0.5));
  CHECK(cfg.model.scheme.order == 2);
  CHECK(cfg.model.scheme.flux == FluxKind::hll);
  CHECK(cfg.model.scheme.cfl == 0.5);
  CHECK(cfg.model.friction.law == FrictionLaw::none);
  CHECK(cfg.model.boundaries.left.kind == BoundaryKind::wall);
  CHECK(cfg.final_time == 1.0);
}

TEST_CASE("full parameter file")
{
  const auto cfg = parse_parameters(R"(
# channel
nx = 4
ny = 2
length_x = 4
length_y = 2
initial_surface = 0.5
friction = manning
friction_coefficient = 0.03
boundary_left = imposed_both 0.5 1.2
boundary_right = neumann
rain = 0:1e-5, 60:0
soil_conductivity = 1e-6
suction_head = 0.1
moisture_deficit = 0.2
order = 1
final_time = 120
output_times = 30, 60
)");
  CHECK(!cfg.model.grid.is_1d());
  CHECK(cfg.model.scheme.cfl == 0.5);
  CHECK(cfg.model.friction.law == FrictionLaw::manning);
  CHECK(cfg.model.boundaries.left.kind == BoundaryKind::imposed_both);
  CHECK(cfg.model.boundaries.left.discharge == 1.2);
  CHECK(cfg.model.rain.rate(10.0) == 1e-5);
  CHECK(cfg.model.rain.rate(70.0) == 0.0);
  REQUIRE(cfg.model.soil.size() == 1);
  CHECK(cfg.model.soil[0].suction_head == 0.1);
  CHECK((cfg.initial.h == 0.5).all());
  CHECK(cfg.output_times == std::vector<double>{30.0, 60.0});
}

TEST_CASE("configuration errors name the key")
{
  try {
    parse_parameters("nx = 10\nlength_x = -5\nfinal_time = 1\n");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "length_x"));
    CHECK(std::string(e.what()).find("length_x") != std::string::npos);
  }
  try {
    parse_parameters("nx = 10\nlength_x = 5\nfinal_time = 1\nfriction = glass\nfriction_coefficient = 1\n");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "friction", "manning"));
    CHECK(mentions(e, "friction", "darcy_weisbach"));
  }
  try {
    parse_parameters("nx = 10\nlength_x = 5\nfinal_time = 1\ncolour = red\nnx = 3\n");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "colour", "unknown"));
    CHECK(mentions(e, "nx", "duplicate"));
    CHECK(e.issues().front().line == 4);
  }
  CHECK_THROWS_AS(parse_parameters("nx = 10\nlength_x = 5\nfinal_time = 1\ncfl = 0.9\n"), ConfigError);
  CHECK_THROWS_AS(load_parameters("/nonexistent/file.params"), ConfigError);
}

TEST_CASE("parameter hash ignores comments and spacing")
{
  CHECK(parameter_hash("nx = 10\n# note\n\n  final_time = 1  \n") ==
        parameter_hash("nx = 10\nfinal_time = 1\n"));
  CHECK(parameter_hash("nx = 10\n") != parameter_hash("nx = 11\n"));
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hex(0xabcULL) == "0000000000000abc");
}

TEST_CASE("DEM round trip")
{
  const Grid g = Grid::rectangle(3, 2, 3.0, 2.0, 10.0, 20.0);
  Field<double> v(2, 3);
  v << 0.1, 0.2, 1.0 / 3.0, -4.5, 5e-17, 6.0;
  std::stringstream s;
  write_dem(s, DemGrid::from_field(v, g));
  const auto dem = read_dem(s);
  CHECK(dem.ncols == 3);
  CHECK(dem.nrows == 2);
  CHECK(dem.x0 == 10.0);
  CHECK(dem.y0 == 20.0);
  CHECK((dem.values == v).all());

  std::istringstream bad("ncols 2\nnrows 1\ncellsize 1\norigin 0 0\n1.0\n");
  CHECK_THROWS(read_dem(bad));
}

TEST_CASE("output columns")
{
  const Grid g = Grid::line(2, 2.0);
  auto w = ConservedFields<double>::zeros(g);
  w.h << 1.0, 0.5;
  w.qx << 2.0, -0.1;
  std::ostringstream out;
  write_output(out, w, g, Topography::flat(g), 1.5, 42);
  const auto lines = data_lines(out.str());
  REQUIRE(lines.size() == 2);
  for (Index i = 0; i < 2; ++i) {
    std::istringstream row(lines[i]);
    double x, z, h, u, q, fr;
    row >> x >> z >> h >> u >> q >> fr;
    CHECK(x == g.x(i));
    CHECK(h == w.h(0, i));
    CHECK(q == w.qx(0, i));
    CHECK(fr == Approx(froude_number(w.cell1(i))).epsilon(1e-15));
  }
  CHECK(out.str().find(hex(42)) != std::string::npos);

  const Grid sq = Grid::rectangle(2, 3, 2.0, 3.0);
  std::ostringstream out2;
  write_output(out2, ConservedFields<double>::zeros(sq), sq, Topography::flat(sq), 0.0, 1);
  CHECK(data_lines(out2.str()).size() == 6);
}

TEST_CASE("generated case files parse back to the same setup")
{
  const auto dir = std::filesystem::temp_directory_path() / "swekit_io_roundtrip";
  std::filesystem::create_directories(dir);
  for (const char* name : {"lake_at_rest_emerged", "thacker_paraboloid", "macdonald_rain"}) {
    const auto c = make_case(name);
    const Grid& g = c.model.grid;
    auto dem = [&](const std::string& suffix, const Field<double>& f) {
      const std::string file = std::string(name) + suffix;
      std::ofstream(dir / file) << [&] {
        std::ostringstream s;
        write_dem(s, DemGrid::from_field(f, g));
        return s.str();
      }();
      return file;
    };
    CaseFiles files;
    files.topography = dem("_topography.dem", c.model.topography.z);
    files.depth = dem("_depth.dem", c.initial.h);
    files.discharge_x = dem("_discharge_x.dem", c.initial.qx);
    if (!g.is_1d()) files.discharge_y = dem("_discharge_y.dem", c.initial.qy);
    const auto text = format_parameters(c.model, c.final_time, c.output_times, files, name);
    const auto cfg = parse_parameters(text, dir);
    CHECK(cfg.model.grid.nx == g.nx);
    CHECK(cfg.model.grid.ny == g.ny);
    CHECK(cfg.model.grid.dx == Approx(g.dx).epsilon(1e-15));
    CHECK((cfg.model.topography.z == c.model.topography.z).all());
    CHECK((cfg.initial.h == c.initial.h).all());
    CHECK(cfg.model.scheme.order == c.model.scheme.order);
    CHECK(cfg.model.scheme.cfl == c.model.scheme.cfl);
    CHECK(cfg.model.friction.law == c.model.friction.law);
    CHECK(cfg.model.friction.coefficient == c.model.friction.coefficient);
    CHECK(cfg.model.boundaries.left.kind == c.model.boundaries.left.kind);
    CHECK(cfg.model.boundaries.left.depth == c.model.boundaries.left.depth);
    CHECK(cfg.model.rain.entries().size() == c.model.rain.entries().size());
    CHECK(cfg.final_time == c.final_time);
    CHECK(cfg.output_times == c.output_times);
  }
  std::filesystem::remove_all(dir);
}
