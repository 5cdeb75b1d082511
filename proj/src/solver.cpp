#include "swekit/solver.hpp"

#include "swekit/parallel.hpp"
#include "swekit/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

namespace swekit {

double SchemeConfig::max_cfl(int order, bool one_d)
{
  if (one_d) return order == 1 ? 1.0 : 0.5;
  return order == 1 ? 0.5 : 0.25;
}

SchemeConfig SchemeConfig::defaults(bool one_d)
{
  SchemeConfig s;
  s.cfl = max_cfl(s.order, one_d);
  return s;
}

void SchemeConfig::validate(bool one_d) const
{
  if (order != 1 && order != 2) throw std::invalid_argument("scheme: order must be 1 or 2");
  const double cmax = max_cfl(order, one_d);
  if (!(cfl > 0.0) || cfl > cmax) {
    std::ostringstream os;
    os << "scheme: cfl must lie in (0, " << cmax << "] for order " << order << " in "
       << (one_d ? "1D" : "2D");
    throw std::invalid_argument(os.str());
  }
  if (fixed_dt && !(*fixed_dt > 0.0)) throw std::invalid_argument("scheme: fixed_dt must be > 0");
  if (!(gravity > 0.0)) throw std::invalid_argument("scheme: gravity must be > 0");
  if (threads < 1) throw std::invalid_argument("scheme: threads must be >= 1");
}

void Model::validate() const
{
  Grid::checked(grid);
  if (grid.nx < 2 || (!grid.is_1d() && grid.ny < 2)) {
    throw std::invalid_argument("model: at least two cells per active direction are required");
  }
  if (!grid.matches(topography.z)) throw std::invalid_argument("model: topography does not match grid");
  if (!topography.z.allFinite()) throw std::invalid_argument("model: topography has non-finite values");
  scheme.validate(grid.is_1d());
  const auto check_pair = [](const BoundaryCondition& a, const BoundaryCondition& b, const char* axis) {
    if ((a.kind == BoundaryKind::periodic) != (b.kind == BoundaryKind::periodic)) {
      throw std::invalid_argument(std::string("model: periodic boundaries must be paired along ") + axis);
    }
  };
  check_pair(boundaries.left, boundaries.right, "x");
  if (!grid.is_1d()) check_pair(boundaries.bottom, boundaries.top, "y");
  for (Side s : {Side::left, Side::right, Side::bottom, Side::top}) {
    const auto& bc = boundaries[s];
    if (bc.depth < 0.0 || !std::isfinite(bc.depth) || !std::isfinite(bc.discharge)) {
      throw std::invalid_argument("model: imposed boundary values must be finite with depth >= 0");
    }
  }
  if (soil.size() > 1 && static_cast<Index>(soil.size()) != grid.cells()) {
    throw std::invalid_argument("model: per-cell soil parameters must cover every cell");
  }
  for (const auto& s : soil) s.validate();
}

State State::zeros(const Grid& grid)
{
  State s;
  static_cast<ConservedFields<double>&>(s) = ConservedFields<double>::zeros(grid);
  s.infiltrated = grid.zeros();
  return s;
}

State State::at_rest(Field<double> h)
{
  State s;
  s.qx = Field<double>::Zero(h.rows(), h.cols());
  s.qy = s.qx;
  s.infiltrated = s.qx;
  s.h = std::move(h);
  return s;
}

namespace {

struct WaveSpeedBounds {
  double x{0.0};
  double y{0.0};
};

double cell_speed(double h, double q, double g)
{
  return std::abs(velocity(h, q)) + std::sqrt(g * std::max(h, 0.0));
}

WaveSpeedBounds interior_speeds(const ConservedFields<double>& w, const Grid& grid, double g)
{
  WaveSpeedBounds s;
  for (Index j = 0; j < grid.ny; ++j) {
    for (Index i = 0; i < grid.nx; ++i) {
      s.x = std::max(s.x, cell_speed(w.h(j, i), w.qx(j, i), g));
      s.y = std::max(s.y, cell_speed(w.h(j, i), w.qy(j, i), g));
    }
  }
  return s;
}

double dt_from_speeds(const Grid& grid, double cfl, const WaveSpeedBounds& s)
{
  double bound = grid.dx;
  if (s.x > 0.0) bound = std::min(bound, grid.dx / s.x);
  if (!grid.is_1d()) {
    bound = std::min(bound, grid.dy);
    if (s.y > 0.0) bound = std::min(bound, grid.dy / s.y);
  }
  return cfl * bound;
}

}  // namespace

double compute_dt(const ConservedFields<double>& w, const Grid& grid, double cfl, double g)
{
  return dt_from_speeds(grid, cfl, interior_speeds(w, grid, g));
}

double stable_dt(const Model& model, const ConservedFields<double>& w)
{
  const Grid& grid = model.grid;
  const double g = model.scheme.gravity;
  WaveSpeedBounds s = interior_speeds(w, grid, g);

  const auto ghost_speed = [&](Side side, const BoundaryStencil& cells) {
    const GhostCells gc = apply_boundary(model.boundaries[side], side, cells, g);
    return std::max(cell_speed(gc.near.h, gc.near.qn, g), cell_speed(gc.far.h, gc.far.qn, g));
  };
  const Field<double>& z = model.topography.z;
  const Index nx = grid.nx;
  const Index ny = grid.ny;
  for (Index j = 0; j < ny; ++j) {
    const auto at = [&](Index i) { return LineCell{w.h(j, i), w.qx(j, i), w.qy(j, i), z(j, i)}; };
    s.x = std::max(s.x, ghost_speed(Side::left, {at(0), at(1), at(nx - 1), at(nx - 2)}));
    s.x = std::max(s.x, ghost_speed(Side::right, {at(nx - 1), at(nx - 2), at(0), at(1)}));
  }
  if (!grid.is_1d()) {
    for (Index i = 0; i < nx; ++i) {
      const auto at = [&](Index j) { return LineCell{w.h(j, i), w.qy(j, i), w.qx(j, i), z(j, i)}; };
      s.y = std::max(s.y, ghost_speed(Side::bottom, {at(0), at(1), at(ny - 1), at(ny - 2)}));
      s.y = std::max(s.y, ghost_speed(Side::top, {at(ny - 1), at(ny - 2), at(0), at(1)}));
    }
  }
  return dt_from_speeds(grid, model.scheme.cfl, s);
}

namespace {

// n interior cells with two ghost cells on each side.
struct PaddedLine {
  Column<double> h, qn, qt, z;

  explicit PaddedLine(Index n) : h(n + 4), qn(n + 4), qt(n + 4), z(n + 4) {}

  Index interior() const { return h.size() - 4; }

  LineCell cell(Index p) const { return {h[p], qn[p], qt[p], z[p]}; }
  void set(Index p, const LineCell& c)
  {
    h[p] = c.h;
    qn[p] = c.qn;
    qt[p] = c.qt;
    z[p] = c.z;
  }
};

struct LineIncrements {
  Column<double> mass, normal, tangential;
  double flux_first{0.0};
  double flux_last{0.0};
};

struct SweepSettings {
  bool second_order;
  FluxKind flux;
  double g;
};

// Returns the flux differences of every interior cell (not yet divided by the
// spacing) and the mass flux through the two end interfaces.
LineIncrements sweep_line(const PaddedLine& line, const SweepSettings& s)
{
  const Index np = line.h.size();
  const Index n = np - 4;

  Column<double> u(np), t(np), eta(np);
  for (Index p = 0; p < np; ++p) {
    u[p] = velocity(line.h[p], line.qn[p]);
    t[p] = velocity(line.h[p], line.qt[p]);
    eta[p] = line.h[p] + line.z[p];
  }
  const auto H = muscl_reconstruct(line.h, s.second_order);
  const auto U = muscl_reconstruct(u, s.second_order);
  const auto T = muscl_reconstruct(t, s.second_order);
  const auto E = muscl_reconstruct(eta, s.second_order);

  // Interface k (0..n) separates padded cells k+1 and k+2, trace index k+1.
  Column<double> fm(n + 1), fn(n + 1), ft(n + 1), sl(n + 1), sr(n + 1);
  Column<double> hm(n + 1), hp(n + 1), zm(n + 1), zp(n + 1);
  for (Index k = 0; k <= n; ++k) {
    const Index tr = k + 1;
    hm[k] = H.left[tr];
    hp[k] = H.right[tr];
    const double em = E.left[tr];
    const double ep = E.right[tr];
    zm[k] = s.second_order ? em - hm[k] : line.z[k + 1];
    zp[k] = s.second_order ? ep - hp[k] : line.z[k + 2];

    const double z_face = std::max(zm[k], zp[k]);
    const double hl = hydrostatic_depth(em, z_face);
    const double hr = hydrostatic_depth(ep, z_face);
    const Cell1<double> wl{hl, hl * U.left[tr]};
    const Cell1<double> wr{hr, hr * U.right[tr]};
    const Vector2<double> f = numerical_flux(s.flux, wl, wr, s.g);

    const bool wet_l = hl > kDryDepth;
    const bool wet_r = hr > kDryDepth;
    fm[k] = f[0];
    fn[k] = f[1];
    ft[k] = transverse_flux(f[0], wet_l ? U.left[tr] : 0.0, wet_r ? U.right[tr] : 0.0,
                            wet_l ? T.left[tr] : 0.0, wet_r ? T.right[tr] : 0.0);
    sl[k] = interface_pressure_correction(hm[k], hl, s.g);
    sr[k] = interface_pressure_correction(hp[k], hr, s.g);
  }

  LineIncrements out{Column<double>(n), Column<double>(n), Column<double>(n), fm[0], fm[n]};
  for (Index i = 0; i < n; ++i) {
    const double fc = centered_correction(hm[i + 1], hp[i], zm[i + 1], zp[i], s.g);
    out.mass[i] = fm[i + 1] - fm[i];
    out.normal[i] = (fn[i + 1] + sl[i + 1]) - (fn[i] + sr[i]) - fc;
    out.tangential[i] = ft[i + 1] - ft[i];
  }
  return out;
}

struct GhostFlags {
  std::uint8_t lo{0};
  std::uint8_t hi{0};
};

GhostFlags fill_ghosts(PaddedLine& line, const Boundaries& bcs, Side lo, Side hi, double g)
{
  const Index n = line.interior();
  const BoundaryStencil lo_cells{line.cell(2), line.cell(3), line.cell(n + 1), line.cell(n)};
  const BoundaryStencil hi_cells{line.cell(n + 1), line.cell(n), line.cell(2), line.cell(3)};
  const GhostCells a = apply_boundary(bcs[lo], lo, lo_cells, g);
  const GhostCells b = apply_boundary(bcs[hi], hi, hi_cells, g);
  line.set(1, a.near);
  line.set(0, a.far);
  line.set(n + 2, b.near);
  line.set(n + 3, b.far);
  return {static_cast<std::uint8_t>(a.regime_mismatch), static_cast<std::uint8_t>(b.regime_mismatch)};
}

void check_finite(const ConservedFields<double>& w, double t)
{
  if (w.h.allFinite() && w.qx.allFinite() && w.qy.allFinite()) return;
  for (Index j = 0; j < w.h.rows(); ++j) {
    for (Index i = 0; i < w.h.cols(); ++i) {
      if (!std::isfinite(w.h(j, i)) || !std::isfinite(w.qx(j, i)) || !std::isfinite(w.qy(j, i))) {
        std::ostringstream os;
        os << "non-finite state in cell (row " << j << ", col " << i << ") at t = " << t;
        throw NumericalFault(os.str(), t, j, i);
      }
    }
  }
}

}  // namespace

SpatialOperator spatial_operator(const Model& model, const ConservedFields<double>& w, double t,
                                 BoundaryDiagnostics* diagnostics)
{
  const Grid& grid = model.grid;
  const Field<double>& z = model.topography.z;
  const SweepSettings settings{model.scheme.order == 2, model.scheme.flux, model.scheme.gravity};
  const int threads = model.scheme.threads;

  SpatialOperator op{ConservedFields<double>::zeros(grid), {}};

  // x sweep, one row per task.
  std::vector<std::array<double, 2>> xflux(static_cast<std::size_t>(grid.ny));
  std::vector<GhostFlags> xflags(static_cast<std::size_t>(grid.ny));
  parallel_for(grid.ny, threads, [&](std::ptrdiff_t j) {
    PaddedLine line(grid.nx);
    for (Index i = 0; i < grid.nx; ++i) {
      line.set(i + 2, {w.h(j, i), w.qx(j, i), w.qy(j, i), z(j, i)});
    }
    xflags[j] = fill_ghosts(line, model.boundaries, Side::left, Side::right, settings.g);
    const LineIncrements inc = sweep_line(line, settings);
    const double inv = 1.0 / grid.dx;
    for (Index i = 0; i < grid.nx; ++i) {
      op.phi.h(j, i) = inc.mass[i] * inv;
      op.phi.qx(j, i) = inc.normal[i] * inv;
      op.phi.qy(j, i) = inc.tangential[i] * inv;
    }
    xflux[j] = {inc.flux_first, inc.flux_last};
  });

  const double edge_x = grid.is_1d() ? 1.0 : grid.dy;
  for (Index j = 0; j < grid.ny; ++j) {
    op.outflow.rate[0] -= xflux[j][0] * edge_x;
    op.outflow.rate[1] += xflux[j][1] * edge_x;
    if (diagnostics) {
      diagnostics->mismatches[0] += xflags[j].lo;
      diagnostics->mismatches[1] += xflags[j].hi;
    }
  }

  if (!grid.is_1d()) {
    std::vector<std::array<double, 2>> yflux(static_cast<std::size_t>(grid.nx));
    std::vector<GhostFlags> yflags(static_cast<std::size_t>(grid.nx));
    parallel_for(grid.nx, threads, [&](std::ptrdiff_t i) {
      PaddedLine line(grid.ny);
      for (Index j = 0; j < grid.ny; ++j) {
        line.set(j + 2, {w.h(j, i), w.qy(j, i), w.qx(j, i), z(j, i)});
      }
      yflags[i] = fill_ghosts(line, model.boundaries, Side::bottom, Side::top, settings.g);
      const LineIncrements inc = sweep_line(line, settings);
      const double inv = 1.0 / grid.dy;
      for (Index j = 0; j < grid.ny; ++j) {
        op.phi.h(j, i) += inc.mass[j] * inv;
        op.phi.qy(j, i) += inc.normal[j] * inv;
        op.phi.qx(j, i) += inc.tangential[j] * inv;
      }
      yflux[i] = {inc.flux_first, inc.flux_last};
    });
    for (Index i = 0; i < grid.nx; ++i) {
      op.outflow.rate[2] -= yflux[i][0] * grid.dx;
      op.outflow.rate[3] += yflux[i][1] * grid.dx;
      if (diagnostics) {
        diagnostics->mismatches[2] += yflags[i].lo;
        diagnostics->mismatches[3] += yflags[i].hi;
      }
    }
  }

  const double rain = model.rain.rate(t);
  if (rain != 0.0) op.phi.h -= rain;
  return op;
}

StepBudget& StepBudget::operator+=(const StepBudget& o)
{
  rain += o.rain;
  infiltration += o.infiltration;
  outflow += o.outflow;
  clamped += o.clamped;
  min_depth = std::min(min_depth, o.min_depth);
  return *this;
}

StepBudget StepBudget::scaled(double s) const
{
  StepBudget b = *this;
  b.rain *= s;
  b.infiltration *= s;
  b.outflow *= s;
  b.clamped *= s;
  return b;
}

namespace {

// Euler stage at the rain rate of [t, t + dt).
State euler_stage(const Model& model, const State& in, double t, double dt, StepBudget& budget,
                  BoundaryDiagnostics* diagnostics)
{
  const Grid& grid = model.grid;
  const double area = grid.cell_area();
  const double g = model.scheme.gravity;
  const double rain = model.rain.rate(t);

  const SpatialOperator op = spatial_operator(model, in, t, diagnostics);
  State out;
  out.h = in.h - dt * op.phi.h;
  out.qx = in.qx - dt * op.phi.qx;
  out.qy = in.qy - dt * op.phi.qy;
  out.infiltrated = in.infiltrated;
  check_finite(out, t + dt);

  budget = StepBudget{};
  budget.rain = dt * rain * area * static_cast<double>(grid.cells());
  budget.outflow = dt * op.outflow.total();
  budget.min_depth = out.h.minCoeff();

  double clamped = 0.0;
  double infiltrated = 0.0;
  for (Index j = 0; j < grid.ny; ++j) {
    for (Index i = 0; i < grid.nx; ++i) {
      double& h = out.h(j, i);
      if (h < 0.0) {
        clamped -= h;
        h = 0.0;
      }
      if (model.infiltrates() && h > 0.0) {
        const Index cell = j * grid.nx + i;
        const auto step = infiltration_step({in.infiltrated(j, i), model.soil_at(cell)}, h, dt, rain);
        h -= step.infiltrated_depth;
        out.infiltrated(j, i) = step.state.infiltrated;
        infiltrated += step.infiltrated_depth;
      }
      if (h <= kDryDepth) {
        out.qx(j, i) = 0.0;
        out.qy(j, i) = 0.0;
        continue;
      }
      const double factor = friction_damping(std::hypot(in.qx(j, i), in.qy(j, i)), in.h(j, i), h,
                                             model.friction, dt, g);
      out.qx(j, i) *= factor;
      out.qy(j, i) *= factor;
    }
  }
  budget.clamped = clamped * area;
  budget.infiltration = infiltrated * area;
  return out;
}

}  // namespace

State euler_step(const Model& model, const State& w, double t, double dt, StepBudget* budget,
                 BoundaryDiagnostics* diagnostics)
{
  StepBudget b;
  State out = euler_stage(model, w, t, dt, b, diagnostics);
  if (budget) *budget = b;
  return out;
}

State heun_step(const Model& model, const State& w, double t, double dt, StepBudget* budget,
                BoundaryDiagnostics* diagnostics)
{
  StepBudget b1;
  StepBudget b2;
  const State w1 = euler_stage(model, w, t, dt, b1, diagnostics);
  const State w2 = euler_stage(model, w1, t, dt, b2, diagnostics);

  State out;
  out.h = 0.5 * (w.h + w2.h);
  out.qx = 0.5 * (w.qx + w2.qx);
  out.qy = 0.5 * (w.qy + w2.qy);
  out.infiltrated = 0.5 * (w.infiltrated + w2.infiltrated);
  for (Index j = 0; j < out.h.rows(); ++j) {
    for (Index i = 0; i < out.h.cols(); ++i) {
      if (out.h(j, i) <= kDryDepth) {
        out.qx(j, i) = 0.0;
        out.qy(j, i) = 0.0;
      }
    }
  }
  if (budget) {
    StepBudget b = b1;
    b += b2;
    *budget = b.scaled(0.5);
    budget->min_depth = std::min(b1.min_depth, b2.min_depth);
  }
  return out;
}

double MassBalance::residual() const
{
  return (current - initial) - (rain - infiltration - outflow + clamped);
}

double MassBalance::relative_residual() const
{
  const double scale = std::max({std::abs(initial), std::abs(current), std::abs(rain),
                                 std::abs(infiltration), std::abs(outflow),
                                 std::numeric_limits<double>::min()});
  return std::abs(residual()) / scale;
}

RunResult run_simulation(const Model& model, State initial, const RunOptions& options,
                         const OutputObserver& on_output, const StepObserver& on_step)
{
  model.validate();
  const Grid& grid = model.grid;
  if (!grid.matches(initial.h) || !grid.matches(initial.qx) || !grid.matches(initial.qy)) {
    throw std::invalid_argument("run_simulation: initial state does not match the grid");
  }
  if (initial.infiltrated.size() == 0) initial.infiltrated = grid.zeros();
  if (!grid.matches(initial.infiltrated)) {
    throw std::invalid_argument("run_simulation: infiltrated field does not match the grid");
  }
  if (!(initial.h >= 0.0).all()) throw std::invalid_argument("run_simulation: negative initial depth");
  check_finite(initial, 0.0);
  if (!(options.final_time >= 0.0)) throw std::invalid_argument("run_simulation: final time must be >= 0");

  std::vector<double> targets;
  for (double to : options.output_times) {
    if (to > 0.0 && to < options.final_time) targets.push_back(to);
  }
  targets.push_back(options.final_time);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  RunResult r;
  r.state = std::move(initial);
  r.balance.initial = total_volume(r.state.h, grid);
  r.balance.current = r.balance.initial;
  r.min_depth = r.state.h.minCoeff();

  if (on_output) on_output({0.0, 0, r.state, r.balance});

  const bool heun = model.scheme.order == 2;
  std::size_t next = 0;
  while (next < targets.size() && r.time < options.final_time) {
    double dt = model.scheme.fixed_dt
                    ? *model.scheme.fixed_dt
                    : stable_dt(model, r.state);
    if (!(dt > 0.0) || !std::isfinite(dt)) {
      throw NumericalFault("time step collapsed", r.time, -1, -1);
    }
    double limit = targets[next];
    bool output_due = true;
    if (const auto change = model.rain.next_change(r.time); change && *change < limit) {
      limit = *change;
      output_due = false;
    }
    bool land = false;
    if (r.time + dt * (1.0 + 1e-9) >= limit) {
      dt = limit - r.time;
      land = true;
    }

    StepBudget budget;
    r.state = heun ? heun_step(model, r.state, r.time, dt, &budget, &r.boundary)
                   : euler_step(model, r.state, r.time, dt, &budget, &r.boundary);
    r.time = land ? limit : r.time + dt;
    ++r.steps;

    r.balance.current = total_volume(r.state.h, grid);
    r.balance.rain += budget.rain;
    r.balance.infiltration += budget.infiltration;
    r.balance.outflow += budget.outflow;
    r.balance.clamped += budget.clamped;
    r.max_relative_balance_error = std::max(r.max_relative_balance_error, r.balance.relative_residual());
    r.min_depth = std::min(r.min_depth, budget.min_depth);

    if (on_step) on_step(r.time, dt, r.state, budget);
    if (land && output_due) {
      if (on_output) on_output({r.time, r.steps, r.state, r.balance});
      ++next;
    }
    if (r.steps >= options.max_steps) {
      throw NumericalFault("step limit reached before the final time", r.time, -1, -1);
    }
  }
  return r;
}

}  // namespace swekit
