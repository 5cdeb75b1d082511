#pragma once

// Grids, conserved states and the elementary hydraulic quantities of the
// shallow-water system.

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <string>

namespace swekit {

/// Default gravitational acceleration [m/s^2].
inline constexpr double kGravity = 9.81;

/// Depths at or below this value are dry: velocity is zero and so is momentum.
inline constexpr double kDryDepth = 1e-12;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

/// Cell-centred field stored row-major over (j, i): rows are y, columns are x.
template <typename Scalar>
using Field = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Index = Eigen::Index;

/// Point value (h, hu) of the 1D system.
template <typename Scalar>
struct Cell1 {
  Scalar h{0};
  Scalar q{0};
};

/// Point value (h, hu, hv) of the 2D system.
template <typename Scalar>
struct Cell2 {
  Scalar h{0};
  Scalar qx{0};
  Scalar qy{0};
};

template <typename Scalar>
bool is_valid(const Cell1<Scalar>& w)
{
  return std::isfinite(w.h) && std::isfinite(w.q) && w.h >= Scalar(0) &&
         (w.h > Scalar(0) || w.q == Scalar(0));
}

template <typename Scalar>
bool is_valid(const Cell2<Scalar>& w)
{
  return std::isfinite(w.h) && std::isfinite(w.qx) && std::isfinite(w.qy) && w.h >= Scalar(0) &&
         (w.h > Scalar(0) || (w.qx == Scalar(0) && w.qy == Scalar(0)));
}

/// u = q/h on wet cells, 0 on dry ones.
template <typename Scalar>
Scalar velocity(Scalar h, Scalar q)
{
  return h > Scalar(kDryDepth) ? q / h : Scalar(0);
}

/// F(W) = (hu, hu^2 + g h^2 / 2).
template <typename Scalar>
Vector2<Scalar> physical_flux(const Cell1<Scalar>& w, Scalar g = Scalar(kGravity))
{
  const Scalar u = velocity(w.h, w.q);
  return Vector2<Scalar>(w.h * u, w.h * u * u + g * w.h * w.h / Scalar(2));
}

/// Characteristic speeds u -/+ sqrt(gh), ordered.
template <typename Scalar>
Vector2<Scalar> eigenvalues(const Cell1<Scalar>& w, Scalar g = Scalar(kGravity))
{
  const Scalar u = velocity(w.h, w.q);
  const Scalar c = std::sqrt(g * w.h);
  return Vector2<Scalar>(u - c, u + c);
}

/// Eigenvalues of the directional Jacobian along the unit vector `xi`:
/// (u_xi - sqrt(gh), u_xi, u_xi + sqrt(gh)).
template <typename Scalar>
Vector3<Scalar> eigenvalues(const Cell2<Scalar>& w, const Vector2<Scalar>& xi,
                            Scalar g = Scalar(kGravity))
{
  if (std::abs(xi.norm() - Scalar(1)) > Scalar(1e-12)) {
    throw std::invalid_argument("eigenvalues: direction must be a unit vector");
  }
  const Scalar un = xi.x() * velocity(w.h, w.qx) + xi.y() * velocity(w.h, w.qy);
  const Scalar c = std::sqrt(g * w.h);
  return Vector3<Scalar>(un - c, un, un + c);
}

/// Fr = |u| / sqrt(gh). A dry cell has Fr = 0 by convention.
template <typename Scalar>
Scalar froude_number(const Cell1<Scalar>& w, Scalar g = Scalar(kGravity))
{
  if (w.h <= Scalar(kDryDepth)) return Scalar(0);
  return std::abs(velocity(w.h, w.q)) / std::sqrt(g * w.h);
}

template <typename Scalar>
Scalar froude_number(const Cell2<Scalar>& w, Scalar g = Scalar(kGravity))
{
  if (w.h <= Scalar(kDryDepth)) return Scalar(0);
  const Scalar u = velocity(w.h, w.qx);
  const Scalar v = velocity(w.h, w.qy);
  return std::sqrt(u * u + v * v) / std::sqrt(g * w.h);
}

/// h_c = (|q| / sqrt(g))^(2/3); flow is subcritical when h > h_c.
template <typename Scalar>
Scalar critical_depth(Scalar q, Scalar g = Scalar(kGravity))
{
  return std::pow(std::abs(q) / std::sqrt(g), Scalar(2) / Scalar(3));
}

enum class FlowRegime { dry, subcritical, critical, supercritical };

template <typename Scalar>
FlowRegime classify(const Cell1<Scalar>& w, Scalar g = Scalar(kGravity))
{
  if (w.h <= Scalar(kDryDepth)) return FlowRegime::dry;
  const Scalar fr = froude_number(w, g);
  if (fr < Scalar(1)) return FlowRegime::subcritical;
  if (fr > Scalar(1)) return FlowRegime::supercritical;
  return FlowRegime::critical;
}

/// Uniform rectangular mesh. A grid with a single row is one-dimensional.
struct Grid {
  Index nx{1};
  Index ny{1};
  double dx{1.0};
  double dy{1.0};
  double x0{0.0};
  double y0{0.0};

  static Grid line(Index nx, double length, double x0 = 0.0)
  {
    return checked({nx, 1, length / static_cast<double>(nx), 1.0, x0, 0.0});
  }

  static Grid rectangle(Index nx, Index ny, double length_x, double length_y, double x0 = 0.0,
                        double y0 = 0.0)
  {
    return checked({nx, ny, length_x / static_cast<double>(nx),
                    length_y / static_cast<double>(ny), x0, y0});
  }

  static Grid checked(Grid g)
  {
    if (g.nx < 1 || g.ny < 1) throw std::invalid_argument("Grid: cell counts must be positive");
    if (!(g.dx > 0.0) || !(g.dy > 0.0)) {
      throw std::invalid_argument("Grid: spacings must be positive");
    }
    return g;
  }

  bool is_1d() const { return ny == 1; }
  Index cells() const { return nx * ny; }
  double cell_area() const { return is_1d() ? dx : dx * dy; }
  double x(Index i) const { return x0 + (static_cast<double>(i) + 0.5) * dx; }
  double y(Index j) const { return y0 + (static_cast<double>(j) + 0.5) * dy; }
  double length_x() const { return static_cast<double>(nx) * dx; }
  double length_y() const { return static_cast<double>(ny) * dy; }

  template <typename Scalar = double>
  Field<Scalar> zeros() const
  {
    return Field<Scalar>::Zero(ny, nx);
  }

  template <typename Scalar>
  bool matches(const Field<Scalar>& f) const
  {
    return f.rows() == ny && f.cols() == nx;
  }
};

/// Conserved unknowns over a grid, one contiguous array per component.
/// `qy` is identically zero on 1D grids.
template <typename Scalar>
struct ConservedFields {
  Field<Scalar> h;
  Field<Scalar> qx;
  Field<Scalar> qy;

  static ConservedFields zeros(const Grid& grid)
  {
    return {grid.zeros<Scalar>(), grid.zeros<Scalar>(), grid.zeros<Scalar>()};
  }

  Cell1<Scalar> cell1(Index i) const { return {h(0, i), qx(0, i)}; }
  Cell2<Scalar> cell2(Index j, Index i) const { return {h(j, i), qx(j, i), qy(j, i)}; }
};

/// Cell-centred bed elevation. Time independent; slopes are derived on demand.
struct Topography {
  Field<double> z;

  Topography() = default;
  explicit Topography(Field<double> elevation) : z(std::move(elevation)) {}

  static Topography flat(const Grid& grid) { return Topography(grid.zeros()); }
};

/// Sum of h times cell measure: m^2 on 1D grids, m^3 on 2D grids.
template <typename Scalar>
Scalar total_volume(const Field<Scalar>& h, const Grid& grid)
{
  if (!grid.matches(h)) {
    throw std::invalid_argument("total_volume: field is " + std::to_string(h.rows()) + "x" +
                                std::to_string(h.cols()) + ", grid is " +
                                std::to_string(grid.ny) + "x" + std::to_string(grid.nx));
  }
  return h.sum() * Scalar(grid.cell_area());
}

template <typename Scalar>
Scalar total_volume(const ConservedFields<Scalar>& w, const Grid& grid)
{
  return total_volume(w.h, grid);
}

}  // namespace swekit
