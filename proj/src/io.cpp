#include "swekit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace swekit {

namespace {

std::string join_issues(const std::vector<ConfigError::Issue>& issues)
{
  std::ostringstream os;
  for (std::size_t k = 0; k < issues.size(); ++k) {
    const auto& is = issues[k];
    if (k > 0) os << '\n';
    if (is.line > 0) os << "line " << is.line << ": ";
    if (!is.key.empty()) os << is.key << ": ";
    os << is.reason;
  }
  return os.str();
}

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, std::string_view separators)
{
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto next = s.find_first_of(separators, pos);
    const auto piece = trim(s.substr(pos, next == std::string_view::npos ? s.npos : next - pos));
    if (!piece.empty()) out.push_back(piece);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::optional<double> to_number(std::string_view s)
{
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string number_text(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

const std::vector<std::string_view> kKnownKeys{
    "nx", "ny", "length_x", "length_y", "x0", "y0", "topography", "initial_depth",
    "initial_surface", "initial_discharge_x", "initial_discharge_y", "final_time",
    "output_times", "order", "flux", "cfl", "fixed_dt", "gravity", "threads", "friction",
    "friction_coefficient", "boundary_left", "boundary_right", "boundary_bottom", "boundary_top",
    "rain", "soil_conductivity", "crust_conductivity", "crust_thickness", "suction_head",
    "moisture_deficit", "infiltration_max_rate", "output_directory", "output_prefix"};

enum class Range { any, positive, nonnegative };

struct Entry {
  int line;
  std::string value;
};

class Entries {
 public:
  std::vector<ConfigError::Issue> issues;

  void add(int line, std::string key, std::string value)
  {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      issues.push_back({line, key, "unknown key"});
      return;
    }
    if (auto it = map_.find(key); it != map_.end()) {
      issues.push_back({line, key, "duplicate key (first set on line " +
                                       std::to_string(it->second.line) + ")"});
      return;
    }
    map_.emplace(std::move(key), Entry{line, std::move(value)});
  }

  bool has(const std::string& key) const { return map_.count(key) != 0; }
  const Entry* find(const std::string& key) const
  {
    const auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }
  int line(const std::string& key) const
  {
    const Entry* e = find(key);
    return e ? e->line : 0;
  }

  void fail(const std::string& key, std::string reason) { issues.push_back({line(key), key, std::move(reason)}); }

  std::optional<double> number(const std::string& key, Range range)
  {
    const Entry* e = find(key);
    if (!e) return std::nullopt;
    const auto v = to_number(e->value);
    if (!v) {
      fail(key, "expected a number, got '" + e->value + "'");
      return std::nullopt;
    }
    if (range == Range::positive && !(*v > 0.0)) {
      fail(key, "must be > 0, got " + e->value);
      return std::nullopt;
    }
    if (range == Range::nonnegative && !(*v >= 0.0)) {
      fail(key, "must be >= 0, got " + e->value);
      return std::nullopt;
    }
    return v;
  }

  std::optional<Index> count(const std::string& key)
  {
    const auto v = number(key, Range::positive);
    if (!v) return std::nullopt;
    if (*v != std::floor(*v)) {
      fail(key, "must be a whole number");
      return std::nullopt;
    }
    return static_cast<Index>(*v);
  }

  const std::string* text(const std::string& key) const
  {
    const Entry* e = find(key);
    return e ? &e->value : nullptr;
  }

 private:
  std::map<std::string, Entry, std::less<>> map_;
};

// A number, or a path to a DEM file with the grid's shape.
std::optional<Field<double>> field_value(Entries& e, const std::string& key, const Grid& grid,
                                         const std::filesystem::path& base)
{
  const std::string* v = e.text(key);
  if (!v) return std::nullopt;
  if (const auto num = to_number(*v)) return Field<double>::Constant(grid.ny, grid.nx, *num);
  try {
    const DemGrid dem = read_dem(base / *v);
    if (dem.ncols != grid.nx || dem.nrows != grid.ny) {
      e.fail(key, "raster is " + std::to_string(dem.ncols) + "x" + std::to_string(dem.nrows) +
                      ", grid is " + std::to_string(grid.nx) + "x" + std::to_string(grid.ny));
      return std::nullopt;
    }
    return dem.values;
  } catch (const std::exception& ex) {
    e.fail(key, ex.what());
    return std::nullopt;
  }
}

std::optional<BoundaryCondition> boundary_value(Entries& e, const std::string& key)
{
  const std::string* v = e.text(key);
  if (!v) return BoundaryCondition::wall();
  const auto parts = split(*v, " \t");
  const std::string kind = parts.empty() ? std::string() : std::string(parts[0]);
  const auto want = [&](std::size_t n) {
    if (parts.size() != n + 1) {
      e.fail(key, kind + " takes " + std::to_string(n) + " value(s)");
      return false;
    }
    return true;
  };
  const auto value = [&](std::size_t k, bool depth) -> std::optional<double> {
    const auto x = to_number(parts[k]);
    if (!x || (depth && *x < 0.0)) {
      e.fail(key, std::string("invalid ") + (depth ? "depth" : "discharge") + " '" +
                      std::string(parts[k]) + "'");
      return std::nullopt;
    }
    return x;
  };
  if (kind == "wall" && want(0)) return BoundaryCondition::wall();
  if (kind == "neumann" && want(0)) return BoundaryCondition::neumann();
  if (kind == "periodic" && want(0)) return BoundaryCondition::periodic();
  if (kind == "imposed_depth" && want(1)) {
    if (const auto h = value(1, true)) return BoundaryCondition::imposed_depth(*h);
    return std::nullopt;
  }
  if (kind == "imposed_discharge" && want(1)) {
    if (const auto q = value(1, false)) return BoundaryCondition::imposed_discharge(*q);
    return std::nullopt;
  }
  if (kind == "imposed_both" && want(2)) {
    const auto h = value(1, true);
    const auto q = value(2, false);
    if (h && q) return BoundaryCondition::imposed_both(*h, *q);
    return std::nullopt;
  }
  if (kind != "wall" && kind != "neumann" && kind != "periodic" && kind != "imposed_depth" &&
      kind != "imposed_discharge" && kind != "imposed_both") {
    e.fail(key, "unknown boundary '" + kind +
                    "' (valid: wall, neumann, periodic, imposed_depth, imposed_discharge, "
                    "imposed_both)");
  }
  return std::nullopt;
}

}  // namespace

ConfigError::ConfigError(std::vector<Issue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues))
{
}

std::uint64_t fnv1a64(std::string_view bytes)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t parameter_hash(std::string_view text)
{
  std::string canonical;
  for (auto line : split(text, "\n")) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    canonical.append(line);
    canonical.push_back('\n');
  }
  return fnv1a64(canonical);
}

std::string hex(std::uint64_t value)
{
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << value;
  return os.str();
}

SimulationConfig parse_parameters(std::string_view text, const std::filesystem::path& base_dir)
{
  Entries e;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (!line.empty()) {
      const auto eq = line.find('=');
      const auto key = trim(line.substr(0, eq));
      if (eq == std::string_view::npos || key.empty()) {
        e.issues.push_back({line_no, std::string(key), "expected 'key = value'"});
      } else {
        e.add(line_no, std::string(key), std::string(trim(line.substr(eq + 1))));
      }
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }

  SimulationConfig cfg;
  cfg.hash = parameter_hash(text);

  // Grid, from the keys or from the topography raster.
  std::optional<DemGrid> topo_dem;
  if (const std::string* t = e.text("topography"); t && *t != "flat") {
    try {
      topo_dem = read_dem(base_dir / *t);
    } catch (const std::exception& ex) {
      e.fail("topography", ex.what());
    }
  }
  const auto nx = e.count("nx");
  const auto ny = e.has("ny") ? e.count("ny") : std::optional<Index>(1);
  const auto lx = e.number("length_x", Range::positive);
  const auto ly = e.number("length_y", Range::positive);
  const double x0 = e.number("x0", Range::any).value_or(0.0);
  const double y0 = e.number("y0", Range::any).value_or(0.0);
  std::optional<Grid> grid;
  if (nx && ny && lx) {
    if (*ny > 1 && !ly) {
      e.fail("length_y", "required when ny > 1");
    } else {
      grid = *ny == 1 ? Grid::line(*nx, *lx, x0) : Grid::rectangle(*nx, *ny, *lx, *ly, x0, y0);
    }
  } else if (topo_dem && !e.has("nx") && !e.has("length_x")) {
    grid = topo_dem->grid();
  } else if (!e.has("nx") || !e.has("length_x")) {
    e.issues.push_back({0, e.has("nx") ? "length_x" : "nx", "required (or give a topography raster)"});
  }

  if (grid) {
    cfg.model.grid = *grid;
    if (topo_dem) {
      if (topo_dem->ncols != grid->nx || topo_dem->nrows != grid->ny) {
        e.fail("topography", "raster shape does not match nx/ny");
      } else if (std::abs(topo_dem->cellsize - grid->dx) > 1e-12 * grid->dx ||
                 (!grid->is_1d() && std::abs(topo_dem->cellsize - grid->dy) > 1e-12 * grid->dy)) {
        e.fail("topography", "raster cellsize does not match the grid spacing");
      } else {
        cfg.model.topography = Topography(topo_dem->values);
      }
    } else {
      cfg.model.topography = Topography::flat(*grid);
    }
  }

  // Scheme.
  const bool one_d = !grid || grid->is_1d();
  SchemeConfig& sc = cfg.model.scheme;
  sc = SchemeConfig::defaults(one_d);
  if (const auto o = e.count("order")) {
    if (*o != 1 && *o != 2) e.fail("order", "must be 1 or 2");
    else sc.order = static_cast<int>(*o);
  }
  sc.cfl = SchemeConfig::max_cfl(sc.order, one_d);
  if (const std::string* f = e.text("flux")) {
    if (*f == "hll") sc.flux = FluxKind::hll;
    else if (*f == "rusanov") sc.flux = FluxKind::rusanov;
    else e.fail("flux", "unknown flux '" + *f + "' (valid: hll, rusanov)");
  }
  if (const auto c = e.number("cfl", Range::positive)) {
    const double cmax = SchemeConfig::max_cfl(sc.order, one_d);
    if (*c > cmax) e.fail("cfl", "must be <= " + std::to_string(cmax) + " for this order and dimension");
    else sc.cfl = *c;
  }
  if (const auto dt = e.number("fixed_dt", Range::positive)) sc.fixed_dt = *dt;
  if (const auto g = e.number("gravity", Range::positive)) sc.gravity = *g;
  if (const auto th = e.count("threads")) sc.threads = static_cast<int>(*th);

  // Friction.
  const auto coefficient = e.number("friction_coefficient", Range::nonnegative);
  if (const std::string* law = e.text("friction")) {
    const bool known = *law == "none" || *law == "manning" || *law == "darcy_weisbach" ||
                       *law == "strickler" || *law == "chezy";
    const bool needs = *law != "none";
    if (!known) {
      e.fail("friction", "unknown friction law '" + *law +
                             "' (valid: none, manning, darcy_weisbach, strickler, chezy)");
    } else if (needs && !coefficient) {
      if (!e.has("friction_coefficient")) e.fail("friction", "friction_coefficient is required");
    } else if (*law == "none") {
      cfg.model.friction = FrictionParams::none();
    } else if (*law == "manning") {
      cfg.model.friction = FrictionParams::manning(*coefficient);
    } else if (*law == "darcy_weisbach") {
      cfg.model.friction = FrictionParams::darcy_weisbach(*coefficient);
    } else if (*law == "strickler" || *law == "chezy") {
      if (!(*coefficient > 0.0)) {
        e.fail("friction_coefficient", "must be > 0 for " + *law);
      } else {
        cfg.model.friction = *law == "strickler" ? FrictionParams::strickler(*coefficient)
                                                 : FrictionParams::chezy(*coefficient, sc.gravity);
      }
    }
  } else if (e.has("friction_coefficient")) {
    e.fail("friction_coefficient", "given without a friction law");
  }

  // Boundaries.
  const std::pair<const char*, Side> sides[] = {{"boundary_left", Side::left},
                                                {"boundary_right", Side::right},
                                                {"boundary_bottom", Side::bottom},
                                                {"boundary_top", Side::top}};
  for (const auto& [key, side] : sides) {
    if (const auto bc = boundary_value(e, key)) cfg.model.boundaries[side] = *bc;
  }

  // Rain.
  if (const std::string* r = e.text("rain")) {
    std::vector<Hyetograph::Entry> entries;
    bool ok = true;
    for (auto item : split(*r, ",")) {
      const auto colon = item.find(':');
      const auto t = colon == item.npos ? std::nullopt : to_number(item.substr(0, colon));
      const auto i = colon == item.npos ? std::nullopt : to_number(item.substr(colon + 1));
      if (!t || !i) {
        e.fail("rain", "expected start:intensity pairs, got '" + std::string(item) + "'");
        ok = false;
        break;
      }
      entries.push_back({*t, *i});
    }
    if (ok) {
      try {
        cfg.model.rain = Hyetograph(std::move(entries));
      } catch (const std::exception& ex) {
        e.fail("rain", ex.what());
      }
    }
  }

  // Soil.
  if (e.has("soil_conductivity")) {
    SoilParams soil;
    soil.soil_conductivity = e.number("soil_conductivity", Range::nonnegative).value_or(0.0);
    soil.crust_conductivity = e.number("crust_conductivity", Range::nonnegative).value_or(0.0);
    soil.crust_thickness = e.number("crust_thickness", Range::nonnegative).value_or(0.0);
    soil.suction_head = e.number("suction_head", Range::nonnegative).value_or(0.0);
    soil.moisture_deficit = e.number("moisture_deficit", Range::positive).value_or(1.0);
    if (const auto m = e.number("infiltration_max_rate", Range::nonnegative)) soil.max_rate = *m;
    try {
      soil.validate();
      cfg.model.soil = {soil};
    } catch (const std::exception& ex) {
      e.fail("soil_conductivity", ex.what());
    }
  } else {
    for (const char* k : {"crust_conductivity", "crust_thickness", "suction_head",
                          "moisture_deficit", "infiltration_max_rate"}) {
      if (e.has(k)) e.fail(k, "soil parameters need soil_conductivity");
    }
  }

  // Times and output.
  if (const auto t = e.number("final_time", Range::nonnegative)) cfg.final_time = *t;
  else if (!e.has("final_time")) e.issues.push_back({0, "final_time", "required"});
  if (const std::string* o = e.text("output_times")) {
    for (auto item : split(*o, ", \t")) {
      const auto t = to_number(item);
      if (!t || *t < 0.0) {
        e.fail("output_times", "invalid time '" + std::string(item) + "'");
        break;
      }
      cfg.output_times.push_back(*t);
    }
  }
  if (const std::string* d = e.text("output_directory")) cfg.output_directory = base_dir / *d;
  else cfg.output_directory = base_dir;
  if (const std::string* p = e.text("output_prefix")) cfg.output_prefix = *p;

  // Initial state.
  if (grid) {
    cfg.initial = State::zeros(*grid);
    if (e.has("initial_depth") && e.has("initial_surface")) {
      e.fail("initial_surface", "give either initial_depth or initial_surface");
    } else if (const auto s = e.number("initial_surface", Range::any)) {
      cfg.initial.h = (*s - cfg.model.topography.z).max(0.0);
    } else if (auto h = field_value(e, "initial_depth", *grid, base_dir)) {
      if ((*h < 0.0).any()) e.fail("initial_depth", "depths must be >= 0");
      cfg.initial.h = std::move(*h);
    }
    if (auto q = field_value(e, "initial_discharge_x", *grid, base_dir)) cfg.initial.qx = std::move(*q);
    if (auto q = field_value(e, "initial_discharge_y", *grid, base_dir)) {
      if (grid->is_1d()) e.fail("initial_discharge_y", "not used on a 1D grid");
      cfg.initial.qy = std::move(*q);
    }
    for (Index j = 0; j < grid->ny; ++j) {
      for (Index i = 0; i < grid->nx; ++i) {
        if (cfg.initial.h(j, i) <= kDryDepth) {
          cfg.initial.qx(j, i) = 0.0;
          cfg.initial.qy(j, i) = 0.0;
        }
      }
    }
  }

  if (e.issues.empty()) {
    try {
      cfg.model.validate();
    } catch (const std::exception& ex) {
      e.issues.push_back({0, "", ex.what()});
    }
  }
  if (!e.issues.empty()) throw ConfigError(std::move(e.issues));
  return cfg;
}

SimulationConfig load_parameters(const std::filesystem::path& file)
{
  std::ifstream in(file);
  if (!in) throw ConfigError({{0, "", "cannot open parameter file " + file.string()}});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_parameters(buf.str(), file.parent_path());
}

Grid DemGrid::grid() const
{
  if (nrows == 1) return Grid::line(ncols, static_cast<double>(ncols) * cellsize, x0);
  return Grid::checked({ncols, nrows, cellsize, cellsize, x0, y0});
}

DemGrid DemGrid::from_field(const Field<double>& values, const Grid& grid)
{
  if (!grid.matches(values)) throw std::invalid_argument("DEM: field does not match grid");
  if (!grid.is_1d() && grid.dx != grid.dy) {
    throw std::invalid_argument("DEM: rasters need square cells");
  }
  return {grid.nx, grid.ny, grid.dx, grid.x0, grid.y0, values};
}

DemGrid read_dem(std::istream& in)
{
  DemGrid d;
  const auto expect = [&](const char* name) {
    std::string key;
    if (!(in >> key) || key != name) {
      throw std::runtime_error(std::string("DEM header: expected '") + name + "'");
    }
  };
  std::string token;
  const auto next_number = [&](const char* what) {
    if (!(in >> token)) throw std::runtime_error(std::string("DEM: missing ") + what);
    const auto v = to_number(token);
    if (!v) throw std::runtime_error(std::string("DEM: invalid ") + what + " '" + token + "'");
    return *v;
  };
  expect("ncols");
  const double nc = next_number("ncols");
  expect("nrows");
  const double nr = next_number("nrows");
  expect("cellsize");
  d.cellsize = next_number("cellsize");
  expect("origin");
  d.x0 = next_number("origin x");
  d.y0 = next_number("origin y");
  if (!(nc >= 1) || nc != std::floor(nc) || !(nr >= 1) || nr != std::floor(nr)) {
    throw std::runtime_error("DEM: ncols and nrows must be positive whole numbers");
  }
  if (!(d.cellsize > 0.0)) throw std::runtime_error("DEM: cellsize must be > 0");
  d.ncols = static_cast<Index>(nc);
  d.nrows = static_cast<Index>(nr);
  d.values.resize(d.nrows, d.ncols);
  for (Index r = 0; r < d.nrows; ++r) {
    for (Index c = 0; c < d.ncols; ++c) {
      d.values(d.nrows - 1 - r, c) = next_number("elevation value");
    }
  }
  if (in >> token) throw std::runtime_error("DEM: more values than ncols * nrows");
  return d;
}

DemGrid read_dem(const std::filesystem::path& file)
{
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open raster " + file.string());
  return read_dem(in);
}

void write_dem(std::ostream& out, const DemGrid& dem)
{
  out << "ncols " << dem.ncols << '\n'
      << "nrows " << dem.nrows << '\n'
      << "cellsize " << number_text(dem.cellsize) << '\n'
      << "origin " << number_text(dem.x0) << ' ' << number_text(dem.y0) << '\n';
  for (Index r = dem.nrows - 1; r >= 0; --r) {
    for (Index c = 0; c < dem.ncols; ++c) {
      if (c > 0) out << ' ';
      out << number_text(dem.values(r, c));
    }
    out << '\n';
  }
}

namespace {

void write_columns(std::ostream& out, const Field<double>& h, const Field<double>& qx,
                   const Field<double>& qy, const Field<double>& z, const Grid& grid,
                   double time, std::uint64_t hash, double g)
{
  const bool one_d = grid.is_1d();
  out << "# time = " << number_text(time) << '\n'
      << "# config_hash = " << hex(hash) << '\n'
      << (one_d ? "# x z h u q Fr\n" : "# x y z h u v qx qy Fr\n");
  char buf[256];
  for (Index j = 0; j < grid.ny; ++j) {
    for (Index i = 0; i < grid.nx; ++i) {
      const double hh = h(j, i);
      const double u = velocity(hh, qx(j, i));
      if (one_d) {
        const double fr = froude_number(Cell1<double>{hh, qx(j, i)}, g);
        std::snprintf(buf, sizeof buf, "%.16e %.16e %.16e %.16e %.16e %.16e\n", grid.x(i), z(j, i),
                      hh, u, qx(j, i), fr);
      } else {
        const double v = velocity(hh, qy(j, i));
        const double fr = froude_number(Cell2<double>{hh, qx(j, i), qy(j, i)}, g);
        std::snprintf(buf, sizeof buf, "%.16e %.16e %.16e %.16e %.16e %.16e %.16e %.16e %.16e\n",
                      grid.x(i), grid.y(j), z(j, i), hh, u, v, qx(j, i), qy(j, i), fr);
      }
      out << buf;
    }
  }
}

}  // namespace

void write_output(std::ostream& out, const ConservedFields<double>& w, const Grid& grid,
                  const Topography& topo, double time, std::uint64_t hash, double g)
{
  write_columns(out, w.h, w.qx, w.qy, topo.z, grid, time, hash, g);
}

void write_reference(std::ostream& out, const ReferenceProfile& ref, std::uint64_t hash, double g)
{
  out << "# reference = " << ref.name << '\n';
  for (const auto& [k, v] : ref.parameters) out << "# " << k << " = " << number_text(v) << '\n';
  write_columns(out, ref.h, ref.qx, ref.qy, ref.z, ref.grid, ref.time, hash, g);
}

void write_mass_balance(std::ostream& out, const RunResult& r, std::uint64_t hash)
{
  out << "# config_hash = " << hex(hash) << '\n'
      << "time = " << number_text(r.time) << '\n'
      << "steps = " << r.steps << '\n'
      << "initial_volume = " << number_text(r.balance.initial) << '\n'
      << "final_volume = " << number_text(r.balance.current) << '\n'
      << "rain_volume = " << number_text(r.balance.rain) << '\n'
      << "infiltrated_volume = " << number_text(r.balance.infiltration) << '\n'
      << "boundary_outflow_volume = " << number_text(r.balance.outflow) << '\n'
      << "clamped_volume = " << number_text(r.balance.clamped) << '\n'
      << "balance_residual = " << number_text(r.balance.residual()) << '\n'
      << "max_relative_balance_error = " << number_text(r.max_relative_balance_error) << '\n'
      << "min_depth = " << number_text(r.min_depth) << '\n';
  if (r.boundary.any()) out << "# warning: " << r.boundary.summary() << '\n';
}

std::string format_parameters(const Model& m, double final_time,
                              const std::vector<double>& output_times, const CaseFiles& files,
                              std::string_view title)
{
  const Grid& g = m.grid;
  std::ostringstream os;
  os << "# " << title << "\n\n";
  os << "nx = " << g.nx << '\n';
  if (!g.is_1d()) os << "ny = " << g.ny << '\n';
  os << "length_x = " << number_text(g.length_x()) << '\n';
  if (!g.is_1d()) os << "length_y = " << number_text(g.length_y()) << '\n';
  if (g.x0 != 0.0) os << "x0 = " << number_text(g.x0) << '\n';
  if (!g.is_1d() && g.y0 != 0.0) os << "y0 = " << number_text(g.y0) << '\n';
  os << "topography = " << files.topography << '\n'
     << "initial_depth = " << files.depth << '\n'
     << "initial_discharge_x = " << files.discharge_x << '\n';
  if (!files.discharge_y.empty()) os << "initial_discharge_y = " << files.discharge_y << '\n';

  os << "\nfinal_time = " << number_text(final_time) << '\n';
  if (!output_times.empty()) {
    os << "output_times = ";
    for (std::size_t k = 0; k < output_times.size(); ++k) {
      os << (k ? ", " : "") << number_text(output_times[k]);
    }
    os << '\n';
  }
  os << "order = " << m.scheme.order << '\n'
     << "flux = " << to_string(m.scheme.flux) << '\n'
     << "cfl = " << number_text(m.scheme.cfl) << '\n'
     << "gravity = " << number_text(m.scheme.gravity) << '\n';
  if (m.scheme.fixed_dt) os << "fixed_dt = " << number_text(*m.scheme.fixed_dt) << '\n';

  os << "\nfriction = " << to_string(m.friction.law) << '\n';
  if (m.friction.law != FrictionLaw::none) {
    os << "friction_coefficient = " << number_text(m.friction.coefficient) << '\n';
  }

  const auto bc_text = [](const BoundaryCondition& bc) {
    std::string s(to_string(bc.kind));
    switch (bc.kind) {
      case BoundaryKind::imposed_depth: s += ' ' + number_text(bc.depth); break;
      case BoundaryKind::imposed_discharge: s += ' ' + number_text(bc.discharge); break;
      case BoundaryKind::imposed_both:
        s += ' ' + number_text(bc.depth) + ' ' + number_text(bc.discharge);
        break;
      default: break;
    }
    return s;
  };
  os << "\nboundary_left = " << bc_text(m.boundaries.left) << '\n'
     << "boundary_right = " << bc_text(m.boundaries.right) << '\n';
  if (!g.is_1d()) {
    os << "boundary_bottom = " << bc_text(m.boundaries.bottom) << '\n'
       << "boundary_top = " << bc_text(m.boundaries.top) << '\n';
  }

  if (!m.rain.empty()) {
    os << "\nrain = ";
    const auto& entries = m.rain.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
      os << (k ? ", " : "") << number_text(entries[k].start) << ':' << number_text(entries[k].intensity);
    }
    os << '\n';
  }
  if (m.soil.size() == 1) {
    const SoilParams& s = m.soil[0];
    os << "\nsoil_conductivity = " << number_text(s.soil_conductivity) << '\n'
       << "crust_conductivity = " << number_text(s.crust_conductivity) << '\n'
       << "crust_thickness = " << number_text(s.crust_thickness) << '\n'
       << "suction_head = " << number_text(s.suction_head) << '\n'
       << "moisture_deficit = " << number_text(s.moisture_deficit) << '\n';
    if (s.max_rate) os << "infiltration_max_rate = " << number_text(*s.max_rate) << '\n';
  }
  return os.str();
}

}  // namespace swekit
