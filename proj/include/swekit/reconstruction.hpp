#pragma once

// MUSCL and hydrostatic reconstruction, plus the momentum corrections that
// keep the topography source balanced against the interface fluxes.

#include "swekit/hydraulics.hpp"

#include <algorithm>

namespace swekit {

template <typename Scalar>
Scalar minmod(Scalar a, Scalar b)
{
  if (a > Scalar(0) && b > Scalar(0)) return std::min(a, b);
  if (a < Scalar(0) && b < Scalar(0)) return std::max(a, b);
  return Scalar(0);
}

template <typename Scalar>
using Column = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// Left and right traces at the n-1 interfaces between n consecutive cells.
/// `left[k]` is the value at interface k+1/2 seen from cell k, `right[k]`
/// seen from cell k+1.
template <typename Scalar>
struct InterfaceTraces {
  Column<Scalar> left;
  Column<Scalar> right;
};

/// Limited slope per cell, expressed as an increment across one cell
/// (slope times dx). End cells get zero slope.
template <typename Derived>
Column<typename Derived::Scalar> muscl_increments(const Eigen::DenseBase<Derived>& values)
{
  using Scalar = typename Derived::Scalar;
  const Index n = values.size();
  Column<Scalar> d = Column<Scalar>::Zero(n);
  for (Index i = 1; i + 1 < n; ++i) {
    d[i] = minmod(values[i] - values[i - 1], values[i + 1] - values[i]);
  }
  return d;
}

/// Piecewise-linear minmod reconstruction. With `second_order == false` the
/// traces are the cell values themselves.
template <typename Derived>
InterfaceTraces<typename Derived::Scalar> muscl_reconstruct(const Eigen::DenseBase<Derived>& values,
                                                            bool second_order = true)
{
  using Scalar = typename Derived::Scalar;
  const Index n = values.size();
  const Index m = std::max<Index>(n - 1, 0);
  InterfaceTraces<Scalar> t{Column<Scalar>(m), Column<Scalar>(m)};
  if (!second_order) {
    for (Index k = 0; k < m; ++k) {
      t.left[k] = values[k];
      t.right[k] = values[k + 1];
    }
    return t;
  }
  const Column<Scalar> d = muscl_increments(values);
  for (Index k = 0; k < m; ++k) {
    t.left[k] = values[k] + Scalar(0.5) * d[k];
    t.right[k] = values[k + 1] - Scalar(0.5) * d[k + 1];
  }
  return t;
}

/// max(surface - bed, 0): depth left over when the interface bed is `z_face`.
template <typename Scalar>
Scalar hydrostatic_depth(Scalar surface, Scalar z_face)
{
  return std::max(surface - z_face, Scalar(0));
}

template <typename Scalar>
struct HydrostaticStates {
  Cell1<Scalar> left;
  Cell1<Scalar> right;
};

/// Hydrostatic reconstruction of both sides of one interface from the
/// traces (h, z, u) on its left (`minus`) and right (`plus`).
template <typename Scalar>
HydrostaticStates<Scalar> hydrostatic_reconstruct(Scalar h_minus, Scalar z_minus, Scalar u_minus,
                                                  Scalar h_plus, Scalar z_plus, Scalar u_plus)
{
  const Scalar z_face = std::max(z_minus, z_plus);
  const Scalar hl = hydrostatic_depth(h_minus + z_minus, z_face);
  const Scalar hr = hydrostatic_depth(h_plus + z_plus, z_face);
  return {{hl, hl * u_minus}, {hr, hr * u_plus}};
}

/// (g/2)(h_trace^2 - h_reconstructed^2), added to the normal momentum flux
/// on the side the trace belongs to.
template <typename Scalar>
Scalar interface_pressure_correction(Scalar h_trace, Scalar h_reconstructed,
                                     Scalar g = Scalar(kGravity))
{
  return Scalar(0.5) * g * (h_trace * h_trace - h_reconstructed * h_reconstructed);
}

/// Momentum part of the centred term of cell i, built from the cell's own
/// traces: -(g/2)(h_{i-1/2+} + h_{i+1/2-})(z_{i+1/2-} - z_{i-1/2+}).
template <typename Scalar>
Scalar centered_correction(Scalar h_at_right_face, Scalar h_at_left_face, Scalar z_at_right_face,
                           Scalar z_at_left_face, Scalar g = Scalar(kGravity))
{
  return -Scalar(0.5) * g * (h_at_left_face + h_at_right_face) *
         (z_at_right_face - z_at_left_face);
}

}  // namespace swekit
