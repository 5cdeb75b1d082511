#include "doctest.h"

#include "swekit/analytic.hpp"
#include "swekit/solver.hpp"

#include <cmath>

using namespace swekit;
using doctest::Approx;

namespace {

Model line_model(Index nx, double length, Boundaries bc = Boundaries::all(BoundaryCondition::wall()))
{
  Model m;
  m.grid = Grid::line(nx, length);
  m.topography = Topography::flat(m.grid);
  m.scheme = SchemeConfig::defaults(true);
  m.boundaries = bc;
  return m;
}

Model square_model(Index nx, Index ny, Boundaries bc = Boundaries::all(BoundaryCondition::wall()))
{
  Model m;
  m.grid = Grid::rectangle(nx, ny, 1.0 * nx, 1.0 * ny);
  m.topography = Topography::flat(m.grid);
  m.scheme = SchemeConfig::defaults(false);
  m.boundaries = bc;
  return m;
}

double max_abs(const Field<double>& f) { return f.abs().maxCoeff(); }

}  // namespace

TEST_CASE("CFL time step")
{
  const Grid dry = Grid::line(10, 1.0);
  CHECK(compute_dt(ConservedFields<double>::zeros(dry), dry, 0.5) == Approx(0.05));

  const Grid g = Grid::line(20, 1.0);
  auto w = ConservedFields<double>::zeros(g);
  w.h.setOnes();
  CHECK(compute_dt(w, g, 1.0) == Approx(0.015965).epsilon(1e-4));

  const Grid coarse = Grid::line(5, 5.0);
  auto fast = ConservedFields<double>::zeros(coarse);
  fast.h.setOnes();
  fast.qx.setConstant(10.0);
  CHECK(compute_dt(fast, coarse, 0.5) == Approx(0.038075).epsilon(1e-4));
}

TEST_CASE("stable time step also bounds imposed inflow states")
{
  Model m = line_model(10, 10.0);
  m.boundaries.left = BoundaryCondition::imposed_both(0.5, 10.0);
  m.boundaries.right = BoundaryCondition::neumann();
  const auto w = ConservedFields<double>::zeros(m.grid);
  CHECK(compute_dt(w, m.grid, m.scheme.cfl) == Approx(0.5));
  CHECK(stable_dt(m, w) == Approx(0.5 / (20.0 + std::sqrt(kGravity * 0.5))));
}

TEST_CASE("scheme limits")
{
  CHECK(SchemeConfig::max_cfl(1, true) == 1.0);
  CHECK(SchemeConfig::max_cfl(2, true) == 0.5);
  CHECK(SchemeConfig::max_cfl(2, false) == 0.25);
  SchemeConfig s = SchemeConfig::defaults(false);
  CHECK(s.order == 2);
  CHECK(s.flux == FluxKind::hll);
  s.cfl = 0.3;
  CHECK_THROWS_AS(s.validate(false), std::invalid_argument);
  CHECK_NOTHROW(s.validate(true));
}

TEST_CASE("boundary ghost cells")
{
  const LineCell a{1.0, 2.0, 0.5, 0.0};
  const LineCell b{0.9, 1.0, 0.0, 0.1};
  const BoundaryStencil cells{a, b, {0.3, 0.1, 0.0, 0.0}, {0.4, 0.2, 0.0, 0.0}};

  auto g = apply_boundary(BoundaryCondition::wall(), Side::left, cells);
  CHECK(g.near.h == 1.0);
  CHECK(g.near.qn == -2.0);
  CHECK(g.near.qt == 0.5);
  CHECK(g.far.qn == -1.0);

  const BoundaryStencil uniform{a, a, a, a};
  g = apply_boundary(BoundaryCondition::periodic(), Side::right, uniform);
  CHECK(g.near.h == a.h);
  CHECK(g.far.qn == a.qn);

  // Supercritical inflow from the rain channel: both values are imposed.
  const double h0 = macdonald_rain_channel().depth(0.0);
  const LineCell in{h0, 2.5, 0.0, 0.0};
  g = apply_boundary(BoundaryCondition::imposed_both(h0, 2.5), Side::left, {in, in, in, in});
  CHECK(g.applied == BoundaryKind::imposed_both);
  CHECK(!g.regime_mismatch);
  CHECK(g.near.h == h0);
  CHECK(g.near.qn == 2.5);

  // Imposing a depth on a supercritical outflow is not legal: free outflow.
  const LineCell out{0.1, 2.0, 0.0, 0.0};
  g = apply_boundary(BoundaryCondition::imposed_depth(1.0), Side::right, {out, out, out, out});
  CHECK(g.applied == BoundaryKind::neumann);
  CHECK(g.regime_mismatch);
  CHECK(g.near.h == 0.1);
}

TEST_CASE("open boundaries continue the bed linearly")
{
  const LineCell a{1.0, 0.0, 0.0, 1.0};
  const LineCell b{1.0, 0.0, 0.0, 1.5};
  const auto g = apply_boundary(BoundaryCondition::neumann(), Side::left, {a, b, a, b});
  CHECK(g.near.z == Approx(0.5));
  CHECK(g.far.z == Approx(0.0));
}

TEST_CASE("lake at rest over a bump: only rain enters the operator")
{
  Model m = line_model(200, 25.0);
  Field<double> z = m.grid.zeros();
  for (Index i = 0; i < m.grid.nx; ++i) z(0, i) = emerged_bump_bed(m.grid.x(i));
  m.topography = Topography(z);
  const auto lake = lake_at_rest_profile(m.grid, m.topography, 0.1);
  const State w = State::at_rest(lake.h);

  auto op = spatial_operator(m, w, 0.0);
  CHECK(max_abs(op.phi.h) <= 1e-13);
  CHECK(max_abs(op.phi.qx) <= 1e-13);

  m.rain = Hyetograph::constant(2e-5);
  op = spatial_operator(m, w, 0.0);
  CHECK(max_abs(op.phi.h + 2e-5) <= 1e-13);
  CHECK(max_abs(op.phi.qx) <= 1e-13);
}

TEST_CASE("uniform periodic state is a fixed point")
{
  Model m = square_model(8, 6, Boundaries::all(BoundaryCondition::periodic()));
  State w = State::zeros(m.grid);
  w.h.setConstant(0.7);
  w.qx.setConstant(0.3);
  w.qy.setConstant(-0.2);
  const auto op = spatial_operator(m, w, 0.0);
  CHECK(max_abs(op.phi.h) <= 1e-14);
  CHECK(max_abs(op.phi.qx) <= 1e-14);
  CHECK(max_abs(op.phi.qy) <= 1e-14);
  for (int order : {1, 2}) {
    m.scheme.order = order;
    const State e = order == 1 ? euler_step(m, w, 0.0, 0.1) : heun_step(m, w, 0.0, 0.1);
    CHECK(max_abs(e.h - w.h) <= 1e-14);
    CHECK(max_abs(e.qx - w.qx) <= 1e-14);
  }
}

TEST_CASE("rain on a closed flat basin raises the level linearly")
{
  for (int order : {1, 2}) {
    Model m = line_model(20, 10.0);
    m.scheme.order = order;
    m.scheme.cfl = SchemeConfig::max_cfl(order, true);
    m.rain = Hyetograph::constant(1e-3);
    State w = State::at_rest(Field<double>::Constant(1, 20, 0.1));
    const auto r = run_simulation(m, w, {100.0, {}});
    CHECK(r.time == 100.0);
    CHECK((r.state.h - 0.2).abs().maxCoeff() <= 1e-12);
    CHECK(max_abs(r.state.qx) <= 1e-12);
    CHECK(std::abs(r.balance.relative_residual()) <= 1e-12);
  }
}

TEST_CASE("run lands on output times")
{
  Model m = line_model(50, 10.0, Boundaries::all(BoundaryCondition::neumann()));
  State w = State::zeros(m.grid);
  for (Index i = 0; i < 25; ++i) w.h(0, i) = 1.0;
  for (Index i = 25; i < 50; ++i) w.h(0, i) = 0.5;
  std::vector<double> seen;
  const auto r = run_simulation(m, w, {1.0, {0.123, 0.5}},
                                [&](const Snapshot& s) { seen.push_back(s.time); });
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == 0.0);
  CHECK(seen[1] == 0.123);
  CHECK(seen[2] == 0.5);
  CHECK(seen[3] == 1.0);
  CHECK(r.time == 1.0);
}

TEST_CASE("Heun and two half Euler steps differ at second order")
{
  Model m = line_model(100, 10.0, Boundaries::all(BoundaryCondition::periodic()));
  m.scheme.order = 2;
  State w = State::zeros(m.grid);
  for (Index i = 0; i < m.grid.nx; ++i) {
    w.h(0, i) = 1.0 + 0.1 * std::sin(2.0 * M_PI * m.grid.x(i) / 10.0);
  }
  auto gap = [&](double dt) {
    const State heun = heun_step(m, w, 0.0, dt);
    const State half = euler_step(m, euler_step(m, w, 0.0, dt / 2), dt / 2, dt / 2);
    return (heun.h - half.h).abs().maxCoeff();
  };
  const double ratio = gap(0.01) / gap(0.005);
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("2D strip reproduces the 1D solution")
{
  Model one = line_model(40, 40.0, Boundaries::all(BoundaryCondition::neumann()));
  Model two = square_model(40, 3);
  two.boundaries.left = two.boundaries.right = BoundaryCondition::neumann();
  one.scheme.fixed_dt = two.scheme.fixed_dt = 0.05;
  State w1 = State::zeros(one.grid);
  State w2 = State::zeros(two.grid);
  for (Index i = 0; i < 40; ++i) {
    const double h = i < 20 ? 1.0 : 0.2;
    w1.h(0, i) = h;
    w2.h.col(i).setConstant(h);
  }
  const auto r1 = run_simulation(one, w1, {2.0, {}});
  const auto r2 = run_simulation(two, w2, {2.0, {}});
  for (Index j = 0; j < 3; ++j) {
    CHECK((r2.state.h.row(j) - r1.state.h.row(0)).abs().maxCoeff() <= 1e-14);
    CHECK((r2.state.qx.row(j) - r1.state.qx.row(0)).abs().maxCoeff() <= 1e-14);
  }
  CHECK(max_abs(r2.state.qy) == 0.0);
}

TEST_CASE("x and y sweeps are mirror images")
{
  Model mx = square_model(12, 9);
  Model my = square_model(9, 12);
  State wx = State::zeros(mx.grid);
  State wy = State::zeros(my.grid);
  for (Index j = 0; j < 9; ++j) {
    for (Index i = 0; i < 12; ++i) {
      const double h = 0.5 + 0.1 * i + 0.03 * j * j + (i < 4 ? 0.4 : 0.0);
      wx.h(j, i) = h;
      wy.h(i, j) = h;
    }
  }
  const auto rx = run_simulation(mx, wx, {1.0, {}});
  const auto ry = run_simulation(my, wy, {1.0, {}});
  CHECK(((rx.state.h - ry.state.h.transpose()).abs().maxCoeff()) <= 1e-13);
  CHECK(((rx.state.qx - ry.state.qy.transpose()).abs().maxCoeff()) <= 1e-13);
  CHECK(((rx.state.qy - ry.state.qx.transpose()).abs().maxCoeff()) <= 1e-13);
}

TEST_CASE("thread count does not change results")
{
  Model m = square_model(30, 20);
  State w = State::zeros(m.grid);
  for (Index j = 0; j < 20; ++j) {
    for (Index i = 0; i < 30; ++i) w.h(j, i) = (i - 10) * (i - 10) + (j - 8) * (j - 8) < 20 ? 1.0 : 0.1;
  }
  m.scheme.threads = 1;
  const auto serial = run_simulation(m, w, {2.0, {}});
  m.scheme.threads = 3;
  const auto threaded = run_simulation(m, w, {2.0, {}});
  CHECK((serial.state.h == threaded.state.h).all());
  CHECK((serial.state.qx == threaded.state.qx).all());
  CHECK((serial.state.qy == threaded.state.qy).all());
  CHECK(serial.steps == threaded.steps);
}

namespace {

Model draining_slope(bool friction)
{
  Model m = line_model(50, 50.0);
  m.boundaries.right = BoundaryCondition::neumann();
  for (Index i = 0; i < m.grid.nx; ++i) m.topography.z(0, i) = 0.01 * (50.0 - m.grid.x(i));
  m.rain = Hyetograph({{0.0, 1e-4}, {30.0, 0.0}});
  if (friction) m.friction = FrictionParams::manning(0.03);
  SoilParams soil;
  soil.soil_conductivity = 1e-5;
  soil.suction_head = 0.05;
  soil.moisture_deficit = 0.3;
  m.soil = {soil};
  return m;
}

}  // namespace

TEST_CASE("mass balance with rain, infiltration and outflow")
{
  const Model m = draining_slope(true);
  const auto r = run_simulation(m, State::zeros(m.grid), {60.0, {}});
  CHECK(r.balance.rain == Approx(50.0 * 30.0 * 1e-4));
  CHECK(r.balance.infiltration > 0.0);
  CHECK(r.balance.clamped == 0.0);
  CHECK(std::abs(r.balance.residual()) <= 1e-12 * r.balance.rain);
  CHECK(r.min_depth >= 0.0);
}

TEST_CASE("clamped depths are booked in the mass balance")
{
  // Without friction, infiltration thins films while their discharge stays,
  // so the second Heun stage can overdraw a cell.
  const Model m = draining_slope(false);
  const auto r = run_simulation(m, State::zeros(m.grid), {60.0, {}});
  CHECK(r.min_depth < 0.0);
  CHECK(r.balance.clamped > 0.0);
  CHECK(r.state.h.minCoeff() >= 0.0);
  CHECK(std::abs(r.balance.residual()) <= 1e-12 * r.balance.rain);
}

TEST_CASE("non-finite state raises a numerical fault")
{
  Model m = line_model(10, 10.0);
  State w = State::at_rest(Field<double>::Ones(1, 10));
  w.h(0, 4) = std::nan("");
  CHECK_THROWS_AS(euler_step(m, w, 0.0, 0.01), NumericalFault);
}
