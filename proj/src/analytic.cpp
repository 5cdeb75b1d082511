#include "swekit/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swekit {

namespace {

// 4th-order central first derivative.
template <typename F>
double derivative(F&& f, double x, double step)
{
  return (f(x - 2 * step) - 8 * f(x - step) + 8 * f(x + step) - f(x + 2 * step)) / (12 * step);
}

constexpr std::array<double, 5> kGaussNodes{-0.9061798459386640, -0.5384693101056831, 0.0,
                                            0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kGaussWeights{0.2369268850561891, 0.4786286704993665,
                                              0.5688888888888889, 0.4786286704993665,
                                              0.2369268850561891};

// Composite 5-point Gauss-Legendre on [a, b], panels no wider than `panel`.
template <typename F>
double integrate(F&& f, double a, double b, double panel = 0.25)
{
  if (a == b) return 0.0;
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / panel)));
  const double w = (b - a) / n;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double mid = a + (k + 0.5) * w;
    double s = 0.0;
    for (std::size_t m = 0; m < kGaussNodes.size(); ++m) s += kGaussWeights[m] * f(mid + 0.5 * w * kGaussNodes[m]);
    sum += 0.5 * w * s;
  }
  return sum;
}

ReferenceProfile blank_profile(std::string name, const Grid& grid, double t)
{
  ReferenceProfile p;
  p.name = std::move(name);
  p.time = t;
  p.grid = grid;
  p.z = grid.zeros();
  p.h = grid.zeros();
  p.qx = grid.zeros();
  p.qy = grid.zeros();
  return p;
}

}  // namespace

ReferenceProfile lake_at_rest_profile(const Grid& grid, const Topography& topo, double eta)
{
  if (!grid.matches(topo.z)) throw std::invalid_argument("lake_at_rest_profile: topography/grid mismatch");
  ReferenceProfile p = blank_profile("lake_at_rest", grid, 0.0);
  p.parameters = {{"eta", eta}};
  p.z = topo.z;
  p.h = (eta - topo.z).max(0.0);
  return p;
}

double emerged_bump_bed(double x)
{
  return (x > 8.0 && x < 12.0) ? 0.2 - 0.05 * (x - 10.0) * (x - 10.0) : 0.0;
}

// ---------------------------------------------------------------------------
// Ritter

double RitterDamBreak::wave_speed() const { return std::sqrt(g * h_left); }
double RitterDamBreak::head(double t) const { return x_dam - t * wave_speed(); }
double RitterDamBreak::front(double t) const { return x_dam + 2.0 * t * wave_speed(); }

double RitterDamBreak::depth(double x, double t) const
{
  if (t <= 0.0) return x <= x_dam ? h_left : 0.0;
  if (x <= head(t)) return h_left;
  if (x >= front(t)) return 0.0;
  const double r = 2.0 * wave_speed() - (x - x_dam) / t;
  return r * r / (9.0 * g);
}

double RitterDamBreak::velocity(double x, double t) const
{
  if (t <= 0.0 || x <= head(t) || x >= front(t)) return 0.0;
  return 2.0 / 3.0 * ((x - x_dam) / t + wave_speed());
}

double RitterDamBreak::pde_residual(double x, double t) const
{
  const double step = 1e-3 * std::min(1.0, t);
  const auto h = [&](double xx, double tt) { return depth(xx, tt); };
  const auto q = [&](double xx, double tt) { return depth(xx, tt) * velocity(xx, tt); };
  const auto mom = [&](double xx, double tt) {
    const double hh = depth(xx, tt);
    const double u = velocity(xx, tt);
    return hh * u * u + 0.5 * g * hh * hh;
  };
  const double mass = derivative([&](double tt) { return h(x, tt); }, t, step) +
                      derivative([&](double xx) { return q(xx, t); }, x, step);
  const double momentum = derivative([&](double tt) { return q(x, tt); }, t, step) +
                          derivative([&](double xx) { return mom(xx, t); }, x, step);
  return std::max(std::abs(mass), std::abs(momentum));
}

ReferenceProfile ritter_profile(const RitterDamBreak& dam, double t, const Grid& grid)
{
  if (!(dam.h_left > 0.0)) throw std::invalid_argument("ritter_profile: h_left must be > 0");
  if (!(t > 0.0)) throw std::invalid_argument("ritter_profile: t must be > 0");
  ReferenceProfile p = blank_profile("ritter_dam_break", grid, t);
  p.parameters = {{"h_left", dam.h_left}, {"x_dam", dam.x_dam}, {"g", dam.g}};
  for (Index j = 0; j < grid.ny; ++j) {
    for (Index i = 0; i < grid.nx; ++i) {
      const double x = grid.x(i);
      p.h(j, i) = dam.depth(x, t);
      p.qx(j, i) = dam.discharge(x, t);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Thacker

double ThackerPlanar::omega() const { return std::sqrt(2.0 * g * h0) / a; }
double ThackerPlanar::period() const { return 2.0 * std::numbers::pi / omega(); }

double ThackerPlanar::bed(double x, double y) const
{
  const double dx = x - 0.5 * length;
  const double dy = y - 0.5 * length;
  return -h0 * (1.0 - (dx * dx + dy * dy) / (a * a));
}

double ThackerPlanar::surface(double x, double y, double t) const
{
  const double wt = omega() * t;
  return eta * h0 / (a * a) *
         (2.0 * (x - 0.5 * length) * std::cos(wt) + 2.0 * (y - 0.5 * length) * std::sin(wt) - eta);
}

double ThackerPlanar::depth(double x, double y, double t) const
{
  return std::max(surface(x, y, t) - bed(x, y), 0.0);
}

double ThackerPlanar::velocity_x(double t) const { return -eta * omega() * std::sin(omega() * t); }
double ThackerPlanar::velocity_y(double t) const { return eta * omega() * std::cos(omega() * t); }
double ThackerPlanar::volume() const { return 0.5 * std::numbers::pi * a * a * h0; }

double ThackerPlanar::pde_residual(double x, double y, double t) const
{
  const double step = 1e-3;
  const auto h = [&](double xx, double yy, double tt) { return depth(xx, yy, tt); };
  const auto u = [&](double tt) { return velocity_x(tt); };
  const auto v = [&](double tt) { return velocity_y(tt); };

  const double h_t = derivative([&](double tt) { return h(x, y, tt); }, t, step);
  const double hu_x = derivative([&](double xx) { return h(xx, y, t) * u(t); }, x, step);
  const double hv_y = derivative([&](double yy) { return h(x, yy, t) * v(t); }, y, step);

  const double hu_t = derivative([&](double tt) { return h(x, y, tt) * u(tt); }, t, step);
  const double fx_x = derivative(
      [&](double xx) {
        const double hh = h(xx, y, t);
        return hh * u(t) * u(t) + 0.5 * g * hh * hh;
      },
      x, step);
  const double huv_y = derivative([&](double yy) { return h(x, yy, t) * u(t) * v(t); }, y, step);

  const double hv_t = derivative([&](double tt) { return h(x, y, tt) * v(tt); }, t, step);
  const double huv_x = derivative([&](double xx) { return h(xx, y, t) * u(t) * v(t); }, x, step);
  const double gy_y = derivative(
      [&](double yy) {
        const double hh = h(x, yy, t);
        return hh * v(t) * v(t) + 0.5 * g * hh * hh;
      },
      y, step);

  const double hh = h(x, y, t);
  const double zx = 2.0 * h0 * (x - 0.5 * length) / (a * a);
  const double zy = 2.0 * h0 * (y - 0.5 * length) / (a * a);

  const double r1 = h_t + hu_x + hv_y;
  const double r2 = hu_t + fx_x + huv_y + g * hh * zx;
  const double r3 = hv_t + huv_x + gy_y + g * hh * zy;
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

ReferenceProfile thacker_planar_profile(const ThackerPlanar& c, double t, const Grid& grid)
{
  ReferenceProfile p = blank_profile("thacker_planar", grid, t);
  p.parameters = {{"a", c.a}, {"h0", c.h0}, {"eta", c.eta}, {"L", c.length}, {"g", c.g}};
  const double u = c.velocity_x(t);
  const double v = c.velocity_y(t);
  for (Index j = 0; j < grid.ny; ++j) {
    for (Index i = 0; i < grid.nx; ++i) {
      const double x = grid.x(i);
      const double y = grid.y(j);
      p.z(j, i) = c.bed(x, y);
      const double h = c.depth(x, y, t);
      p.h(j, i) = h;
      p.qx(j, i) = h > 0.0 ? h * u : 0.0;
      p.qy(j, i) = h > 0.0 ? h * v : 0.0;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// MacDonald-type steady flows

double SteadyFlowProfile::slope_of_depth(double x) const
{
  if (depth_slope) return depth_slope(x);
  const double step = 1e-6 * std::max(1.0, std::abs(x));
  for (double s : shocks) {
    if (x < s && x + step >= s) return (depth(x) - depth(x - step)) / step;
    if (x >= s && x - step < s) return (depth(x + step) - depth(x)) / step;
  }
  return (depth(x + step) - depth(x - step)) / (2.0 * step);
}

double SteadyFlowProfile::friction_slope(double x) const
{
  const double h = depth(x);
  const double q = discharge(x);
  switch (friction.law) {
    case FrictionLaw::manning:
      return friction.coefficient * friction.coefficient * q * std::abs(q) / std::pow(h, 10.0 / 3.0);
    case FrictionLaw::darcy_weisbach:
      return friction.coefficient / (8.0 * g) * q * std::abs(q) / (h * h * h);
    case FrictionLaw::none: return 0.0;
  }
  return 0.0;
}

double SteadyFlowProfile::bed_slope(double x) const
{
  const double h = depth(x);
  if (!(h > 0.0)) throw std::domain_error("steady profile: depth must be positive");
  const double q = discharge(x);
  return (q * q / (g * h * h * h) - 1.0) * slope_of_depth(x) - friction_slope(x) -
         2.0 * q * rain / (g * h * h);
}

double SteadyFlowProfile::bed(double x, double z_start) const
{
  const auto slope = [this](double s) { return bed_slope(s); };
  double z = z_start;
  double from = x_start;
  const double sign = x >= x_start ? 1.0 : -1.0;
  std::vector<double> cuts;
  for (double s : shocks) {
    if ((s - x_start) * sign > 0.0 && (x - s) * sign > 0.0) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end(), [sign](double l, double r) { return l * sign < r * sign; });
  for (double s : cuts) {
    z += integrate(slope, from, s);
    from = s;
  }
  return z + integrate(slope, from, x);
}

double SteadyFlowProfile::steady_residual(double x) const
{
  const double step = 1e-3;
  const auto momentum = [this](double s) {
    const double h = depth(s);
    const double q = discharge(s);
    return q * q / h + 0.5 * g * h * h;
  };
  const double dm = derivative(momentum, x, step);
  const double dz = derivative([this](double s) { return bed(s); }, x, step);
  const double h = depth(x);
  return std::abs(dm - g * h * (-dz - friction_slope(x)));
}

Topography macdonald_topography(const SteadyFlowProfile& profile, const Grid& grid, double z_start)
{
  if (!grid.is_1d()) throw std::invalid_argument("macdonald_topography: 1D grid required");
  Field<double> z = grid.zeros();
  // Cumulative integration from one centre to the next, split at shocks.
  double x_prev = profile.x_start;
  double z_prev = z_start;
  const auto slope = [&profile](double s) { return profile.bed_slope(s); };
  for (Index i = 0; i < grid.nx; ++i) {
    const double x = grid.x(i);
    double from = x_prev;
    double acc = z_prev;
    for (double s : profile.shocks) {
      if (s > from && s < x) {
        acc += integrate(slope, from, s);
        from = s;
      }
    }
    acc += integrate(slope, from, x);
    z(0, i) = acc;
    x_prev = x;
    z_prev = acc;
  }
  return Topography(std::move(z));
}

ReferenceProfile macdonald_profile(const std::string& name, const SteadyFlowProfile& profile,
                                   const Grid& grid, const Topography& topo)
{
  ReferenceProfile p = blank_profile(name, grid, 0.0);
  p.parameters = {{"q0", profile.q0},
                  {"rain", profile.rain},
                  {"friction_coefficient", profile.friction.coefficient},
                  {"g", profile.g}};
  p.z = topo.z;
  for (Index i = 0; i < grid.nx; ++i) {
    const double x = grid.x(i);
    p.h(0, i) = profile.depth(x);
    p.qx(0, i) = profile.discharge(x);
  }
  return p;
}

SteadyFlowProfile macdonald_short_channel(double g)
{
  constexpr double q = 2.0;
  constexpr double shock = 200.0 / 3.0;
  const double hc = std::cbrt(q * q / g);
  // Quartic past the jump; its constant term is the conjugate depth of the
  // upstream value 2 hc / 3, so the jump satisfies Rankine-Hugoniot exactly.
  const double a1 = 0.674202;
  const double a2 = 21.7112;
  const double a3 = 14.492;
  const double a4 = (std::sqrt(28.0) - 1.0) / 3.0;

  SteadyFlowProfile p;
  p.depth = [=](double x) {
    const double s = x / 100.0;
    if (x < shock) return hc * (4.0 / 3.0 - s) - 0.9 * s * (s - 2.0 / 3.0);
    const double e = s - 2.0 / 3.0;
    return hc * (a1 * e * e * e * e + a1 * e * e * e - a2 * e * e + a3 * e + a4);
  };
  p.depth_slope = [=](double x) {
    const double s = x / 100.0;
    if (x < shock) return (-hc - 0.9 * (2.0 * s - 2.0 / 3.0)) / 100.0;
    const double e = s - 2.0 / 3.0;
    return hc * (4.0 * a1 * e * e * e + 3.0 * a1 * e * e - 2.0 * a2 * e + a3) / 100.0;
  };
  p.shocks = {shock};
  p.q0 = q;
  p.rain = 0.0;
  p.friction = FrictionParams::manning(0.0328);
  p.g = g;
  p.x_start = 0.0;
  p.x_end = 100.0;
  return p;
}

SteadyFlowProfile macdonald_rain_channel(double g)
{
  constexpr double q0 = 2.5;
  constexpr double rain = 0.001;
  constexpr double length = 1000.0;
  // A fixed fraction of the local critical depth with a smooth dip mid-channel.
  constexpr double fraction = 0.8;

  SteadyFlowProfile p;
  p.q0 = q0;
  p.rain = rain;
  p.friction = FrictionParams::darcy_weisbach(0.065);
  p.g = g;
  p.x_start = 0.0;
  p.x_end = length;
  const auto critical = [=](double x) {
    const double q = q0 + rain * x;
    return std::cbrt(q * q / g);
  };
  const auto shape = [=](double x) {
    const double s = x / length - 0.5;
    return 1.0 - 0.2 * std::exp(-36.0 * s * s);
  };
  p.depth = [=](double x) { return fraction * critical(x) * shape(x); };
  p.depth_slope = [=](double x) {
    const double q = q0 + rain * x;
    const double dcrit = 2.0 / 3.0 * critical(x) * rain / q;
    const double s = x / length - 0.5;
    const double dshape = 0.2 * std::exp(-36.0 * s * s) * 72.0 * s / length;
    return fraction * (dcrit * shape(x) + critical(x) * dshape);
  };
  return p;
}

// ---------------------------------------------------------------------------
// Norms

ErrorNorms error_norms(const Field<double>& computed, const Field<double>& reference,
                       const Field<bool>& mask)
{
  if (computed.rows() != reference.rows() || computed.cols() != reference.cols()) {
    throw std::invalid_argument("error_norms: shape mismatch");
  }
  const bool masked = mask.size() != 0;
  if (masked && (mask.rows() != computed.rows() || mask.cols() != computed.cols())) {
    throw std::invalid_argument("error_norms: mask shape mismatch");
  }
  ErrorNorms n;
  Index count = 0;
  for (Index j = 0; j < computed.rows(); ++j) {
    for (Index i = 0; i < computed.cols(); ++i) {
      if (masked && !mask(j, i)) continue;
      const double e = std::abs(computed(j, i) - reference(j, i));
      n.l1 += e;
      n.l2 += e * e;
      n.linf = std::max(n.linf, e);
      ++count;
    }
  }
  if (count > 0) {
    n.l1 /= static_cast<double>(count);
    n.l2 = std::sqrt(n.l2 / static_cast<double>(count));
  }
  return n;
}

ErrorReport compare_to_reference(const Field<double>& h, const Field<double>& qx,
                                 const Field<double>& qy, const ReferenceProfile& ref,
                                 const std::vector<double>& excluded_x, Index exclusion_cells)
{
  const Grid& grid = ref.grid;
  Field<bool> keep = Field<bool>::Constant(grid.ny, grid.nx, true);
  for (double x : excluded_x) {
    const Index centre = static_cast<Index>(std::floor((x - grid.x0) / grid.dx));
    for (Index i = std::max<Index>(0, centre - exclusion_cells);
         i <= std::min<Index>(grid.nx - 1, centre + exclusion_cells); ++i) {
      keep.col(i).setConstant(false);
    }
  }
  ErrorReport r;
  r.all = {error_norms(h, ref.h), error_norms(qx, ref.qx), error_norms(qy, ref.qy)};
  r.restricted = {error_norms(h, ref.h, keep), error_norms(qx, ref.qx, keep),
                  error_norms(qy, ref.qy, keep)};
  return r;
}

}  // namespace swekit
