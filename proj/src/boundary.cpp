#include "swekit/boundary.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace swekit {

std::string_view to_string(BoundaryKind k)
{
  switch (k) {
    case BoundaryKind::wall: return "wall";
    case BoundaryKind::neumann: return "neumann";
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::imposed_depth: return "imposed_depth";
    case BoundaryKind::imposed_discharge: return "imposed_discharge";
    case BoundaryKind::imposed_both: return "imposed_both";
  }
  return "?";
}

std::string_view to_string(Side s)
{
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::bottom: return "bottom";
    case Side::top: return "top";
  }
  return "?";
}

const BoundaryCondition& Boundaries::operator[](Side s) const
{
  switch (s) {
    case Side::left: return left;
    case Side::right: return right;
    case Side::bottom: return bottom;
    case Side::top: return top;
  }
  return left;
}

BoundaryCondition& Boundaries::operator[](Side s)
{
  return const_cast<BoundaryCondition&>(std::as_const(*this)[s]);
}

namespace {

double outward_sign(Side s)
{
  return (s == Side::left || s == Side::bottom) ? -1.0 : 1.0;
}

LineCell dry_guard(LineCell c)
{
  if (c.h <= kDryDepth) {
    c.qn = 0.0;
    c.qt = 0.0;
  }
  return c;
}

// Bed continued linearly past an open boundary; `k` is 1 for the near ghost
// and 2 for the far one.
double extended_bed(const BoundaryStencil& cells, int k)
{
  return cells.inner0.z + k * (cells.inner0.z - cells.inner1.z);
}

}  // namespace

GhostCells apply_boundary(const BoundaryCondition& bc, Side side, const BoundaryStencil& cells,
                          double g)
{
  const LineCell& in = cells.inner0;
  BoundaryKind kind = bc.kind;
  bool mismatch = false;

  const bool imposed = kind == BoundaryKind::imposed_depth ||
                       kind == BoundaryKind::imposed_discharge ||
                       kind == BoundaryKind::imposed_both;
  if (imposed && in.h > kDryDepth) {
    const double un = in.qn / in.h;
    const bool supercritical = std::abs(un) > std::sqrt(g * in.h);
    const bool inflow = un * outward_sign(side) < 0.0;
    if (supercritical && !inflow) {
      kind = BoundaryKind::neumann;
      mismatch = true;
    } else if (supercritical && kind != BoundaryKind::imposed_both) {
      mismatch = true;
    } else if (!supercritical && kind == BoundaryKind::imposed_both) {
      kind = inflow ? BoundaryKind::imposed_discharge : BoundaryKind::imposed_depth;
      mismatch = true;
    }
  }

  GhostCells out;
  out.applied = kind;
  out.regime_mismatch = mismatch;
  switch (kind) {
    case BoundaryKind::wall:
      out.near = {cells.inner0.h, -cells.inner0.qn, cells.inner0.qt, cells.inner0.z};
      out.far = {cells.inner1.h, -cells.inner1.qn, cells.inner1.qt, cells.inner1.z};
      break;
    case BoundaryKind::neumann:
      out.near = in;
      out.far = in;
      break;
    case BoundaryKind::periodic:
      out.near = cells.opposite0;
      out.far = cells.opposite1;
      break;
    case BoundaryKind::imposed_depth:
      out.near = dry_guard({bc.depth, in.qn, in.qt, in.z});
      out.far = out.near;
      break;
    case BoundaryKind::imposed_discharge:
      out.near = dry_guard({in.h, bc.discharge, in.qt, in.z});
      out.far = out.near;
      break;
    case BoundaryKind::imposed_both:
      out.near = dry_guard({bc.depth, bc.discharge, 0.0, in.z});
      out.far = out.near;
      break;
  }
  if (kind != BoundaryKind::wall && kind != BoundaryKind::periodic) {
    out.near.z = extended_bed(cells, 1);
    out.far.z = extended_bed(cells, 2);
  }
  return out;
}

bool BoundaryDiagnostics::any() const
{
  for (auto m : mismatches) {
    if (m != 0) return true;
  }
  return false;
}

std::string BoundaryDiagnostics::summary() const
{
  std::ostringstream os;
  bool first = true;
  for (int s = 0; s < 4; ++s) {
    if (mismatches[s] == 0) continue;
    if (!first) os << "; ";
    first = false;
    os << to_string(static_cast<Side>(s)) << ": boundary rule not legal for the local flow regime "
       << mismatches[s] << " time(s), closest legal rule applied";
  }
  return os.str();
}

}  // namespace swekit
