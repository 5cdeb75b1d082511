#pragma once

// Numerical fluxes at cell interfaces.

#include "swekit/hydraulics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>

namespace swekit {

enum class FluxKind { hll, rusanov };

inline std::string_view to_string(FluxKind k)
{
  return k == FluxKind::hll ? "hll" : "rusanov";
}

template <typename Scalar>
struct WaveSpeeds {
  Scalar slow{0};
  Scalar fast{0};
};

/// Slowest and fastest characteristic speeds over both interface states.
template <typename Scalar>
WaveSpeeds<Scalar> wave_speeds(const Cell1<Scalar>& left, const Cell1<Scalar>& right,
                               Scalar g = Scalar(kGravity))
{
  const Vector2<Scalar> l = eigenvalues(left, g);
  const Vector2<Scalar> r = eigenvalues(right, g);
  return {std::min(l[0], r[0]), std::max(l[1], r[1])};
}

namespace detail {

template <typename Scalar>
bool same_state(const Cell1<Scalar>& a, const Cell1<Scalar>& b)
{
  return a.h == b.h && a.q == b.q;
}

template <typename Scalar>
bool both_dry(const Cell1<Scalar>& a, const Cell1<Scalar>& b)
{
  return a.h <= Scalar(kDryDepth) && b.h <= Scalar(kDryDepth);
}

}  // namespace detail

/// Harten-Lax-van Leer two-wave flux.
///
/// Upwind branches use exact comparisons: F(WL) when 0 <= c1, F(WR) when
/// c2 <= 0, and the averaged state otherwise. A dry-dry interface carries no
/// flux. Identical states return F(W) without going through the average, so
/// consistency holds bit for bit.
template <typename Scalar>
Vector2<Scalar> hll_flux(const Cell1<Scalar>& left, const Cell1<Scalar>& right,
                         Scalar g = Scalar(kGravity))
{
  if (detail::both_dry(left, right)) return Vector2<Scalar>::Zero();
  if (detail::same_state(left, right)) return physical_flux(left, g);

  const auto [c1, c2] = wave_speeds(left, right, g);
  if (Scalar(0) <= c1) return physical_flux(left, g);
  if (c2 <= Scalar(0)) return physical_flux(right, g);

  const Vector2<Scalar> fl = physical_flux(left, g);
  const Vector2<Scalar> fr = physical_flux(right, g);
  const Vector2<Scalar> jump(right.h - left.h, right.q - left.q);
  const Scalar inv = Scalar(1) / (c2 - c1);
  return (c2 * fl - c1 * fr) * inv + (c1 * c2 * inv) * jump;
}

/// Local Lax-Friedrichs flux with c = max |eigenvalue| over both states.
template <typename Scalar>
Vector2<Scalar> rusanov_flux(const Cell1<Scalar>& left, const Cell1<Scalar>& right,
                             Scalar g = Scalar(kGravity))
{
  if (detail::both_dry(left, right)) return Vector2<Scalar>::Zero();
  if (detail::same_state(left, right)) return physical_flux(left, g);

  const Vector2<Scalar> l = eigenvalues(left, g);
  const Vector2<Scalar> r = eigenvalues(right, g);
  const Scalar c = std::max({std::abs(l[0]), std::abs(l[1]), std::abs(r[0]), std::abs(r[1])});
  const Vector2<Scalar> jump(right.h - left.h, right.q - left.q);
  return Scalar(0.5) * (physical_flux(left, g) + physical_flux(right, g)) - Scalar(0.5) * c * jump;
}

template <typename Scalar>
Vector2<Scalar> numerical_flux(FluxKind kind, const Cell1<Scalar>& left,
                               const Cell1<Scalar>& right, Scalar g = Scalar(kGravity))
{
  switch (kind) {
    case FluxKind::hll: return hll_flux(left, right, g);
    case FluxKind::rusanov: return rusanov_flux(left, right, g);
  }
  throw std::invalid_argument("numerical_flux: unknown flux kind");
}

enum class Axis { x, y };

/// Transverse momentum flux carried by the contact wave (HLLC-style).
///
/// Along x the transverse velocity is v and the normal one u; along y the
/// roles swap. The upwind side is chosen by the sign of the summed normal
/// velocities; a zero sum selects the right state.
template <typename Scalar>
Scalar transverse_flux(Scalar mass_flux, Scalar normal_left, Scalar normal_right,
                       Scalar tangential_left, Scalar tangential_right)
{
  return normal_left + normal_right > Scalar(0) ? tangential_left * mass_flux
                                                : tangential_right * mass_flux;
}

/// Axis-explicit form: for Axis::x pass (uL, uR, vL, vR); for Axis::y pass
/// the same velocities and the roles of u and v are swapped internally.
template <typename Scalar>
Scalar transverse_component(Scalar mass_flux, Scalar uL, Scalar uR, Scalar vL, Scalar vR,
                            Axis axis)
{
  return axis == Axis::x ? transverse_flux(mass_flux, uL, uR, vL, vR)
                         : transverse_flux(mass_flux, vL, vR, uL, uR);
}

}  // namespace swekit
