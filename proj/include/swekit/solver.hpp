#pragma once

// Time integration of the shallow-water system: CFL time step, the spatial
// operator with hydrostatic reconstruction, Euler and Heun steps, and the
// driver loop with a global mass balance.

#include "swekit/boundary.hpp"
#include "swekit/flux.hpp"
#include "swekit/hydraulics.hpp"
#include "swekit/sources.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace swekit {

/// Raised when a stage produces a non-finite value. Negative depths are
/// clamped to zero and booked in the mass balance instead.
class NumericalFault : public std::runtime_error {
 public:
  NumericalFault(const std::string& what, double time, Index row, Index col)
      : std::runtime_error(what), time_(time), row_(row), col_(col)
  {
  }
  double time() const { return time_; }
  Index row() const { return row_; }
  Index col() const { return col_; }

 private:
  double time_;
  Index row_;
  Index col_;
};

/// Spatial and temporal order are chosen together: order 1 is first-order
/// reconstruction with Euler, order 2 is MUSCL with Heun.
struct SchemeConfig {
  int order{2};
  FluxKind flux{FluxKind::hll};
  double cfl{0.5};
  std::optional<double> fixed_dt;
  double gravity{kGravity};
  int threads{1};

  /// Largest stable Courant number for the order and dimension.
  static double max_cfl(int order, bool one_d);
  static SchemeConfig defaults(bool one_d);
  void validate(bool one_d) const;
};

struct Model {
  Grid grid;
  Topography topography;
  SchemeConfig scheme;
  Boundaries boundaries;
  FrictionParams friction;
  Hyetograph rain;
  /// Empty: no infiltration. One entry: uniform soil. Otherwise one per cell.
  std::vector<SoilParams> soil;

  void validate() const;
  bool infiltrates() const { return !soil.empty(); }
  const SoilParams& soil_at(Index cell) const { return soil.size() == 1 ? soil[0] : soil[cell]; }
};

/// Conserved fields plus the infiltrated depth V_inf per cell.
struct State : ConservedFields<double> {
  Field<double> infiltrated;

  static State zeros(const Grid& grid);
  static State at_rest(Field<double> h);
};

/// Outward volume rates through each side [m^2/s in 1D, m^3/s in 2D].
struct BoundaryOutflow {
  std::array<double, 4> rate{};
  double total() const { return rate[0] + rate[1] + rate[2] + rate[3]; }
};

struct SpatialOperator {
  ConservedFields<double> phi;  // W* = W - dt * phi
  BoundaryOutflow outflow;
};

/// dt = C min(dx, dx / max(|u| + sqrt(gh))); in 2D the minimum also runs over
/// dy with |v|. A dry domain gets C dx (C min(dx, dy) in 2D).
double compute_dt(const ConservedFields<double>& w, const Grid& grid, double cfl,
                  double g = kGravity);

/// compute_dt with the maximum also taken over the ghost cells, so states
/// imposed at the boundaries are bounded by the CFL condition too.
double stable_dt(const Model& model, const ConservedFields<double>& w);

/// Assembles phi = (F_{i+1/2L} - F_{i-1/2R} - Fc_i)/dx (+ the y analog in 2D)
/// minus the rain rate on the mass component.
SpatialOperator spatial_operator(const Model& model, const ConservedFields<double>& w, double t,
                                 BoundaryDiagnostics* diagnostics = nullptr);

/// Volumes exchanged during one step [m or m^2 times cell measure].
struct StepBudget {
  double rain{0.0};
  double infiltration{0.0};
  double outflow{0.0};
  double clamped{0.0};  // negative round-off depth reset to zero
  double min_depth{0.0};  // smallest depth produced by any stage before clamping

  StepBudget& operator+=(const StepBudget& o);
  StepBudget scaled(double s) const;
};

/// One Euler stage: convection and rain, then infiltration, then friction.
State euler_step(const Model& model, const State& w, double t, double dt,
                 StepBudget* budget = nullptr, BoundaryDiagnostics* diagnostics = nullptr);

/// Heun predictor-corrector: two Euler stages averaged with the start state.
State heun_step(const Model& model, const State& w, double t, double dt,
                StepBudget* budget = nullptr, BoundaryDiagnostics* diagnostics = nullptr);

/// Cumulative volumes since the start of a run.
struct MassBalance {
  double initial{0.0};
  double current{0.0};
  double rain{0.0};
  double infiltration{0.0};
  double outflow{0.0};
  double clamped{0.0};

  /// (current - initial) - (rain - infiltration - outflow + clamped)
  double residual() const;
  double relative_residual() const;
};

struct RunOptions {
  double final_time{0.0};
  std::vector<double> output_times;
  std::size_t max_steps{50'000'000};
};

struct Snapshot {
  double time;
  std::size_t steps;
  const State& state;
  const MassBalance& balance;
};

struct RunResult {
  State state;
  double time{0.0};
  std::size_t steps{0};
  MassBalance balance;
  double max_relative_balance_error{0.0};
  double min_depth{0.0};
  BoundaryDiagnostics boundary;
};

using OutputObserver = std::function<void(const Snapshot&)>;
using StepObserver = std::function<void(double t, double dt, const State&, const StepBudget&)>;

/// Advances to `final_time`, landing exactly on every output time, on the
/// final time and on every rain change. `on_output` sees the initial state,
/// every requested output time and the final state.
RunResult run_simulation(const Model& model, State initial, const RunOptions& options,
                         const OutputObserver& on_output = {}, const StepObserver& on_step = {});

}  // namespace swekit
