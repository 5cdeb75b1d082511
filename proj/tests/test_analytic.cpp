#include "doctest.h"

#include "swekit/analytic.hpp"
#include "swekit/cases.hpp"

#include <cmath>

using namespace swekit;
using doctest::Approx;

TEST_CASE("lake at rest profile")
{
  const Grid g = Grid::line(500, 25.0);
  Field<double> z = g.zeros();
  for (Index i = 0; i < g.nx; ++i) z(0, i) = emerged_bump_bed(g.x(i));
  const Topography bump(z);

  auto p = lake_at_rest_profile(g, bump, -1.0);
  CHECK(p.h.maxCoeff() == 0.0);

  p = lake_at_rest_profile(g, Topography::flat(g), 1.0);
  CHECK((p.h == 1.0).all());

  p = lake_at_rest_profile(g, bump, 0.1);
  CHECK(z.maxCoeff() == Approx(0.2).epsilon(1e-3));
  CHECK(p.h.maxCoeff() < z.maxCoeff());
  int wet_regions = 0;
  for (Index i = 0; i < g.nx; ++i) {
    if (p.h(0, i) > 0.0 && (i == 0 || p.h(0, i - 1) == 0.0)) ++wet_regions;
  }
  CHECK(wet_regions == 2);
  CHECK(p.qx.abs().maxCoeff() == 0.0);
}

TEST_CASE("Ritter dam break")
{
  const RitterDamBreak dam;
  const double c = std::sqrt(kGravity * 0.005);
  CHECK(dam.front(6.0) == Approx(7.658).epsilon(1e-4));
  CHECK(dam.head(6.0) == Approx(5.0 - 6.0 * c));
  CHECK(dam.depth(5.0, 3.0) == Approx(4.0 / 9.0 * 0.005));
  CHECK(dam.velocity(5.0, 3.0) == Approx(2.0 / 3.0 * c));
  CHECK(dam.depth(dam.front(6.0) + 0.01, 6.0) == 0.0);
  CHECK(dam.depth(dam.head(6.0) - 0.01, 6.0) == 0.005);
  // Very early the Riemann data is recovered.
  CHECK(dam.depth(4.9, 1e-9) == 0.005);
  CHECK(dam.depth(5.1, 1e-9) == 0.0);
  // Self-similarity in (x - x_dam) / t.
  CHECK(dam.depth(5.0 + 0.2, 1.0) == Approx(dam.depth(5.0 + 0.4, 2.0)));
}

TEST_CASE("Ritter closed form satisfies the shallow-water system")
{
  const RitterDamBreak dam;
  double worst = 0.0;
  for (double t : {0.5, 2.0, 6.0}) {
    const double a = dam.head(t), b = dam.front(t);
    for (int k = 1; k < 40; ++k) {
      const double x = a + (b - a) * k / 40.0;
      worst = std::max(worst, dam.pde_residual(x, t));
    }
    worst = std::max(worst, dam.pde_residual(a - 0.5, t));
    worst = std::max(worst, dam.pde_residual(b + 0.5, t));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("Thacker planar surface")
{
  const ThackerPlanar th;
  CHECK(th.period() == Approx(2.0 * M_PI / th.omega()));
  CHECK(3.0 * th.period() == Approx(13.4571).epsilon(1e-5));
  for (double x : {1.3, 2.0, 2.6}) {
    for (double y : {1.5, 2.0, 2.4}) {
      CHECK(th.depth(x, y, 0.0) == Approx(th.depth(x, y, th.period())));
    }
  }
  // Volume by midpoint quadrature on a fine grid.
  const Grid g = Grid::rectangle(800, 800, 4.0, 4.0);
  const auto p = thacker_planar_profile(th, 0.37, g);
  CHECK(total_volume(p.h, g) == Approx(th.volume()).epsilon(1e-4));
  CHECK(p.h.maxCoeff() <= th.max_depth());
}

TEST_CASE("Thacker closed form satisfies the shallow-water system")
{
  const ThackerPlanar th;
  double worst = 0.0;
  for (double t : {0.0, 1.1, 4.0}) {
    for (int a = 0; a < 24; ++a) {
      for (int r = 1; r < 8; ++r) {
        const double ang = 2.0 * M_PI * a / 24.0;
        const double x = 2.0 + 0.1 * r * std::cos(ang);
        const double y = 2.0 + 0.1 * r * std::sin(ang);
        if (th.depth(x, y, t) < 1e-3) continue;
        worst = std::max(worst, th.pde_residual(x, y, t));
      }
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("uniform flow on a frictionless channel needs no slope")
{
  SteadyFlowProfile p;
  p.depth = [](double) { return 1.3; };
  p.q0 = 2.0;
  p.x_start = 0.0;
  p.x_end = 10.0;
  for (double x : {0.5, 5.0, 9.5}) CHECK(p.bed_slope(x) == Approx(0.0).epsilon(1e-12));
  CHECK(p.bed(10.0) == Approx(0.0));
}

TEST_CASE("MacDonald short channel")
{
  const auto p = macdonald_short_channel();
  REQUIRE(p.shocks.size() == 1);
  CHECK(p.shocks[0] == Approx(200.0 / 3.0));
  const double hc = critical_depth(2.0);
  CHECK(p.depth(10.0) > hc);                 // subcritical inflow
  CHECK(p.depth(60.0) < hc);                 // supercritical before the jump
  CHECK(p.depth(90.0) > hc);                 // subcritical after it
  // Conjugate depths across the jump.
  const double h1 = p.depth(200.0 / 3.0 - 1e-9), h2 = p.depth(200.0 / 3.0 + 1e-9);
  const double m1 = 4.0 / h1 + 0.5 * kGravity * h1 * h1;
  const double m2 = 4.0 / h2 + 0.5 * kGravity * h2 * h2;
  CHECK(m1 == Approx(m2).epsilon(1e-4));
  double worst = 0.0;
  for (double x = 1.0; x < 100.0; x += 1.3) {
    if (std::abs(x - 200.0 / 3.0) < 0.5) continue;
    worst = std::max(worst, std::abs(p.steady_residual(x)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("MacDonald rain channel")
{
  const auto p = macdonald_rain_channel();
  CHECK(p.discharge(0.0) == 2.5);
  CHECK(p.discharge(1000.0) == Approx(3.5));
  double worst = 0.0;
  for (double x = 5.0; x < 1000.0; x += 17.0) {
    CHECK(froude_number(Cell1<double>{p.depth(x), p.discharge(x)}) > 1.0);
    worst = std::max(worst, std::abs(p.steady_residual(x)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("error norms")
{
  Field<double> a = Field<double>::Random(1, 30);
  auto n = error_norms(a, a);
  CHECK(n.l1 == 0.0);
  CHECK(n.l2 == 0.0);
  CHECK(n.linf == 0.0);
  n = error_norms(a + 1e-3, a);
  CHECK(n.l1 == Approx(1e-3));
  CHECK(n.linf == Approx(1e-3));
  Field<bool> mask = Field<bool>::Constant(1, 30, true);
  Field<double> b = a;
  b(0, 7) += 5.0;
  mask(0, 7) = false;
  CHECK(error_norms(b, a, mask).linf == 0.0);
}

TEST_CASE("comparison excludes cells around declared points")
{
  const Grid g = Grid::line(10, 10.0);
  ReferenceProfile ref;
  ref.grid = g;
  ref.z = ref.h = ref.qx = ref.qy = g.zeros();
  Field<double> h = g.zeros();
  h(0, 5) = 1.0;
  const auto r = compare_to_reference(h, g.zeros(), g.zeros(), ref, {5.5}, 1);
  CHECK(r.all.h.linf == 1.0);
  CHECK(r.restricted.h.linf == 0.0);
}

TEST_CASE("built-in cases")
{
  CHECK(case_names().size() == 5);
  for (const auto& name : case_names()) {
    const auto c = make_case(name);
    CHECK(c.name == name);
    CHECK_NOTHROW(c.model.validate());
    CHECK(c.model.grid.matches(c.initial.h));
    CHECK(c.final_time > 0.0);
  }
  CHECK_THROWS_AS(make_case("nope"), std::invalid_argument);
}
