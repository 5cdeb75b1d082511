#include "swekit/cases.hpp"

#include <stdexcept>

namespace swekit {

namespace {

Index cells_or(const CaseOptions& o, Index fallback) { return o.cells > 0 ? o.cells : fallback; }

Model base_model(const Grid& grid, int order, int threads)
{
  Model m;
  m.grid = grid;
  m.topography = Topography::flat(grid);
  m.scheme = SchemeConfig::defaults(grid.is_1d());
  m.scheme.order = order;
  m.scheme.cfl = SchemeConfig::max_cfl(order, grid.is_1d());
  m.scheme.threads = threads;
  return m;
}

CaseSetup lake_at_rest_emerged(const CaseOptions& o)
{
  constexpr double eta = 0.1;
  const Grid grid = Grid::line(cells_or(o, 500), 25.0);
  CaseSetup c;
  c.name = "lake_at_rest_emerged";
  c.description = "Lake at rest over an emerged bump, L = 25 m, eta = 0.1 m, T = 100 s";
  c.model = base_model(grid, 2, o.threads);
  Field<double> z = grid.zeros();
  for (Index i = 0; i < grid.nx; ++i) z(0, i) = emerged_bump_bed(grid.x(i));
  c.model.topography = Topography(std::move(z));
  c.model.boundaries = Boundaries::all(BoundaryCondition::wall());
  c.reference = lake_at_rest_profile(grid, c.model.topography, eta);
  c.initial = State::at_rest(c.reference.h);
  c.final_time = 100.0;
  return c;
}

CaseSetup ritter_dam_break(const CaseOptions& o)
{
  const RitterDamBreak dam;
  const Grid grid = Grid::line(cells_or(o, 500), 10.0);
  CaseSetup c;
  c.name = "ritter_dam_break";
  c.description = "Dam break on a dry flat bed, h_l = 0.005 m, dam at 5 m, T = 6 s";
  c.model = base_model(grid, 2, o.threads);
  c.model.boundaries = Boundaries::all(BoundaryCondition::neumann());
  Field<double> h = grid.zeros();
  for (Index i = 0; i < grid.nx; ++i) h(0, i) = grid.x(i) < dam.x_dam ? dam.h_left : 0.0;
  c.initial = State::at_rest(std::move(h));
  c.final_time = 6.0;
  c.reference = ritter_profile(dam, c.final_time, grid);
  return c;
}

CaseSetup thacker_paraboloid(const CaseOptions& o)
{
  const ThackerPlanar th;
  const Index n = cells_or(o, 100);
  const Grid grid = Grid::rectangle(n, n, th.length, th.length);
  CaseSetup c;
  c.name = "thacker_paraboloid";
  c.description = "Planar surface rotating in a paraboloid, 4 m x 4 m, three periods";
  c.model = base_model(grid, 2, o.threads);
  c.model.boundaries = Boundaries::all(BoundaryCondition::wall());
  const ReferenceProfile start = thacker_planar_profile(th, 0.0, grid);
  c.model.topography = Topography(start.z);
  c.initial = State::zeros(grid);
  c.initial.h = start.h;
  c.initial.qx = start.qx;
  c.initial.qy = start.qy;
  c.final_time = 3.0 * th.period();
  c.output_times = {th.period(), 2.0 * th.period()};
  c.reference = thacker_planar_profile(th, c.final_time, grid);
  return c;
}

CaseSetup macdonald_shock(const CaseOptions& o)
{
  const SteadyFlowProfile p = macdonald_short_channel();
  const Grid grid = Grid::line(cells_or(o, 500), p.x_end - p.x_start, p.x_start);
  CaseSetup c;
  c.name = "macdonald_shock";
  c.description = "Steady flow with a hydraulic jump, L = 100 m, q = 2, Manning n = 0.0328";
  c.model = base_model(grid, 2, o.threads);
  c.model.topography = macdonald_topography(p, grid);
  c.model.friction = p.friction;
  c.model.boundaries.left = BoundaryCondition::imposed_discharge(p.q0);
  c.model.boundaries.right = BoundaryCondition::imposed_depth(p.depth(p.x_end));
  c.reference = macdonald_profile(c.name, p, grid, c.model.topography);
  c.initial = State::at_rest(c.reference.h);
  c.final_time = 1500.0;
  return c;
}

CaseSetup macdonald_rain(const CaseOptions& o)
{
  const SteadyFlowProfile p = macdonald_rain_channel();
  const Grid grid = Grid::line(cells_or(o, 500), p.x_end - p.x_start, p.x_start);
  CaseSetup c;
  c.name = "macdonald_rain";
  c.description = "Supercritical channel with rain from t = 1500 s, L = 1000 m, f = 0.065";
  c.model = base_model(grid, 2, o.threads);
  c.model.topography = macdonald_topography(p, grid);
  c.model.friction = p.friction;
  c.model.rain = Hyetograph({{0.0, 0.0}, {1500.0, p.rain}});
  c.model.boundaries.left = BoundaryCondition::imposed_both(p.depth(p.x_start), p.q0);
  c.model.boundaries.right = BoundaryCondition::neumann();
  c.reference = macdonald_profile(c.name, p, grid, c.model.topography);
  c.initial = State::zeros(grid);
  c.final_time = 3000.0;
  c.output_times = {1500.0};
  return c;
}

}  // namespace

const std::vector<std::string>& case_names()
{
  static const std::vector<std::string> names{"lake_at_rest_emerged", "ritter_dam_break",
                                              "thacker_paraboloid", "macdonald_shock",
                                              "macdonald_rain"};
  return names;
}

CaseSetup make_case(std::string_view name, const CaseOptions& options)
{
  if (name == "lake_at_rest_emerged") return lake_at_rest_emerged(options);
  if (name == "ritter_dam_break") return ritter_dam_break(options);
  if (name == "thacker_paraboloid") return thacker_paraboloid(options);
  if (name == "macdonald_shock") return macdonald_shock(options);
  if (name == "macdonald_rain") return macdonald_rain(options);
  std::string known;
  for (const auto& n : case_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown case '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace swekit
