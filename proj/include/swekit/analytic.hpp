#pragma once

// Reference solutions used to validate the solver: lake at rest, Ritter's dry
// dam break, Thacker's planar surface in a paraboloid, and MacDonald-type
// steady flows generated from a prescribed depth profile. Each closed form
// carries a PDE-residual self-check.

#include "swekit/hydraulics.hpp"
#include "swekit/sources.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace swekit {

/// Point values of a reference solution at the cell centres of `grid`.
struct ReferenceProfile {
  std::string name;
  std::vector<std::pair<std::string, double>> parameters;
  double time{0.0};
  Grid grid;
  Field<double> z;
  Field<double> h;
  Field<double> qx;
  Field<double> qy;
};

/// h = max(eta - z, 0), q = 0.
ReferenceProfile lake_at_rest_profile(const Grid& grid, const Topography& topo, double eta);

/// Bed of the emerged-bump lake: 0.2 - 0.05 (x - 10)^2 on 8 < x < 12, else 0.
double emerged_bump_bed(double x);

/// Dam break over a dry, flat, frictionless bed.
struct RitterDamBreak {
  double h_left{0.005};
  double x_dam{5.0};
  double g{kGravity};

  double wave_speed() const;  // sqrt(g h_left)
  /// Upstream edge of the rarefaction, x_dam - t sqrt(g h_left).
  double head(double t) const;
  /// Wet/dry front, x_dam + 2 t sqrt(g h_left).
  double front(double t) const;
  double depth(double x, double t) const;
  double velocity(double x, double t) const;
  double discharge(double x, double t) const { return depth(x, t) * velocity(x, t); }

  /// max |residual| of the homogeneous 1D system at (x, t), from 4th-order
  /// central differences of the closed form.
  double pde_residual(double x, double t) const;
};

ReferenceProfile ritter_profile(const RitterDamBreak& dam, double t, const Grid& grid);

/// Planar free surface rotating in the paraboloid z = -h0 (1 - r^2/a^2),
/// centred in a square domain of side `length`.
struct ThackerPlanar {
  double a{1.0};
  double h0{0.1};
  double eta{0.5};
  double length{4.0};
  double g{kGravity};

  double omega() const;  // sqrt(2 g h0) / a
  double period() const;
  double bed(double x, double y) const;
  double surface(double x, double y, double t) const;
  double depth(double x, double y, double t) const;
  double velocity_x(double t) const;
  double velocity_y(double t) const;
  /// Largest depth of the solution; constant in time.
  double max_depth() const { return h0; }
  /// Wet volume (constant in time): pi a^2 h0 / 2.
  double volume() const;

  /// max |residual| of the 2D system with bed slope source at (x, y, t).
  double pde_residual(double x, double y, double t) const;
};

ReferenceProfile thacker_planar_profile(const ThackerPlanar& case_, double t, const Grid& grid);

/// Prescribed steady depth profile h(x) with discharge q(x) = q0 + R x.
/// `shocks` lists the discontinuities of h; the topography stays continuous
/// across them.
struct SteadyFlowProfile {
  std::function<double(double)> depth;
  std::function<double(double)> depth_slope;  // empty: central differences
  std::vector<double> shocks;
  double q0{0.0};
  double rain{0.0};
  FrictionParams friction;
  double g{kGravity};
  double x_start{0.0};
  double x_end{0.0};

  double discharge(double x) const { return q0 + rain * x; }
  double slope_of_depth(double x) const;
  double friction_slope(double x) const;
  /// z'(x) = (q^2/(g h^3) - 1) h' - S_f - 2 q R / (g h^2).
  double bed_slope(double x) const;
  /// z(x) with z(x_start) = z_start, integrated piecewise between shocks.
  double bed(double x, double z_start = 0.0) const;

  /// Residual of d/dx(q^2/h + g h^2/2) = g h (S0 - S_f) with S0 = -dz/dx,
  /// every derivative taken numerically from h and the integrated bed.
  double steady_residual(double x) const;
};

/// Bed elevation at the cell centres of a 1D grid.
Topography macdonald_topography(const SteadyFlowProfile& profile, const Grid& grid,
                                double z_start = 0.0);

ReferenceProfile macdonald_profile(const std::string& name, const SteadyFlowProfile& profile,
                                   const Grid& grid, const Topography& topo);

/// Short channel (L = 100 m, q = 2, Manning n = 0.0328): subcritical inflow,
/// sonic point, hydraulic jump at x = 200/3, subcritical outflow.
SteadyFlowProfile macdonald_short_channel(double g = kGravity);

/// Long channel (L = 1000 m, Darcy-Weisbach f = 0.065, q0 = 2.5, R = 0.001),
/// supercritical everywhere.
SteadyFlowProfile macdonald_rain_channel(double g = kGravity);

struct ErrorNorms {
  double l1{0.0};
  double l2{0.0};
  double linf{0.0};
};

/// Cell-averaged L1, L2 and max norms of computed - reference over the cells
/// where `mask` is true (all cells when empty).
ErrorNorms error_norms(const Field<double>& computed, const Field<double>& reference,
                       const Field<bool>& mask = {});

struct ProfileErrors {
  ErrorNorms h;
  ErrorNorms qx;
  ErrorNorms qy;
};

struct ErrorReport {
  ProfileErrors all;
  ProfileErrors restricted;  // excluding cells near the declared points
};

/// Compares (h, qx, qy) against a reference. The restricted norms leave out
/// every cell within `exclusion_cells` cells (along x) of a point in
/// `excluded_x`.
ErrorReport compare_to_reference(const Field<double>& h, const Field<double>& qx,
                                 const Field<double>& qy, const ReferenceProfile& ref,
                                 const std::vector<double>& excluded_x = {},
                                 Index exclusion_cells = 0);

}  // namespace swekit
