#pragma once

// Ghost-cell boundary conditions with flow-regime checks.

#include "swekit/hydraulics.hpp"

#include <array>
#include <string>
#include <string_view>

namespace swekit {

enum class BoundaryKind { wall, neumann, periodic, imposed_depth, imposed_discharge, imposed_both };

std::string_view to_string(BoundaryKind k);

/// Boundary rule for one side. `discharge` is the discharge component along
/// the axis normal to the side, signed in the axis direction (positive q on
/// the left side flows into the domain).
struct BoundaryCondition {
  BoundaryKind kind{BoundaryKind::wall};
  double depth{0.0};
  double discharge{0.0};

  static BoundaryCondition wall() { return {BoundaryKind::wall}; }
  static BoundaryCondition neumann() { return {BoundaryKind::neumann}; }
  static BoundaryCondition periodic() { return {BoundaryKind::periodic}; }
  static BoundaryCondition imposed_depth(double h) { return {BoundaryKind::imposed_depth, h, 0.0}; }
  static BoundaryCondition imposed_discharge(double q) { return {BoundaryKind::imposed_discharge, 0.0, q}; }
  static BoundaryCondition imposed_both(double h, double q) { return {BoundaryKind::imposed_both, h, q}; }
};

enum class Side { left = 0, right = 1, bottom = 2, top = 3 };

std::string_view to_string(Side s);

struct Boundaries {
  BoundaryCondition left{BoundaryCondition::wall()};
  BoundaryCondition right{BoundaryCondition::wall()};
  BoundaryCondition bottom{BoundaryCondition::wall()};
  BoundaryCondition top{BoundaryCondition::wall()};

  static Boundaries all(BoundaryCondition bc) { return {bc, bc, bc, bc}; }

  const BoundaryCondition& operator[](Side s) const;
  BoundaryCondition& operator[](Side s);
};

/// One cell seen along a sweep line: depth, normal and tangential discharge,
/// bed elevation.
struct LineCell {
  double h{0.0};
  double qn{0.0};
  double qt{0.0};
  double z{0.0};
};

/// Interior cells a boundary rule may read: the two next to this side and,
/// for periodic wrapping, the two next to the opposite side.
struct BoundaryStencil {
  LineCell inner0;
  LineCell inner1;
  LineCell opposite0;
  LineCell opposite1;
};

struct GhostCells {
  LineCell near;  // adjacent to the first interior cell
  LineCell far;
  BoundaryKind applied{BoundaryKind::wall};
  bool regime_mismatch{false};
};

/// Fills the two ghost cells of `side`.
///
/// The regime is read from the first interior cell at the current time using
/// the normal Froude number. When the requested rule is not legal for that
/// regime the closest legal rule is applied and `regime_mismatch` is set:
/// a supercritical outflow becomes Neumann, imposed_both on subcritical flow
/// keeps the discharge at an inflow and the depth at an outflow. A dry first
/// cell carries no regime information and the rule is applied as given.
GhostCells apply_boundary(const BoundaryCondition& bc, Side side, const BoundaryStencil& cells,
                          double g = kGravity);

/// Per-side counters of regime/rule mismatches seen during a run.
struct BoundaryDiagnostics {
  std::array<std::size_t, 4> mismatches{};

  bool any() const;
  std::string summary() const;
};

}  // namespace swekit
