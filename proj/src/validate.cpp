#include "swekit/validate.hpp"

#include "swekit/cases.hpp"
#include "swekit/io.hpp"

#include <Eigen/QR>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace swekit {

bool Check::passed() const
{
  if (!std::isfinite(value)) return false;
  return relation == Relation::at_most ? value <= limit : value >= limit;
}

bool CaseReport::passed() const
{
  if (!error.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

Check at_most(std::string name, double value, double limit)
{
  return {std::move(name), value, Check::Relation::at_most, limit};
}

Check at_least(std::string name, double value, double limit)
{
  return {std::move(name), value, Check::Relation::at_least, limit};
}

struct TimedRun {
  RunResult result;
  double seconds{0.0};
};

TimedRun timed_run(const CaseSetup& c, const StepObserver& on_step = {})
{
  const auto start = Clock::now();
  RunResult r = run_simulation(c.model, c.initial, {c.final_time, c.output_times}, {}, on_step);
  return {std::move(r), std::chrono::duration<double>(Clock::now() - start).count()};
}

std::string final_output(const CaseSetup& c, const RunResult& r)
{
  std::ostringstream os;
  write_output(os, r.state, c.model.grid, c.model.topography, r.time, fnv1a64(c.name),
               c.model.scheme.gravity);
  return os.str();
}

// Largest |W(t + dt) - W(t)| / dt over cells and components for one more step.
double steady_rate(const Model& model, const State& s, double t)
{
  const double dt = stable_dt(model, s);
  const State next = model.scheme.order == 2 ? heun_step(model, s, t, dt) : euler_step(model, s, t, dt);
  const double dh = (next.h - s.h).abs().maxCoeff();
  const double dq = std::max((next.qx - s.qx).abs().maxCoeff(), (next.qy - s.qy).abs().maxCoeff());
  return std::max(dh, dq) / dt;
}

// Interface with the largest depth jump.
double shock_position(const Grid& grid, const Field<double>& h)
{
  Index best = 0;
  double jump = -1.0;
  for (Index i = 0; i + 1 < grid.nx; ++i) {
    const double d = std::abs(h(0, i + 1) - h(0, i));
    if (d > jump) {
      jump = d;
      best = i;
    }
  }
  return grid.x0 + static_cast<double>(best + 1) * grid.dx;
}

void lake_at_rest(const CaseSetup& c, CaseReport& rep)
{
  constexpr double eta = 0.1;
  const TimedRun run = timed_run(c);
  rep.seconds = run.seconds;
  const State& s = run.result.state;
  double surface = 0.0;
  for (Index i = 0; i < c.model.grid.nx; ++i) {
    if (s.h(0, i) > kDryDepth) {
      surface = std::max(surface, std::abs(s.h(0, i) + c.model.topography.z(0, i) - eta));
    }
  }
  rep.checks.push_back(at_most("max |q| [m^2/s]", s.qx.abs().maxCoeff(), 1e-12));
  rep.checks.push_back(at_most("max wet |h + z - eta| [m]", surface, 1e-12));
  rep.checks.push_back(at_most("runtime [s]", run.seconds, 5.0));
  rep.final_output = final_output(c, run.result);
}

// L1(h) error on `cells` cells, leaving out a fixed window around the two
// ends of the rarefaction.
double ritter_l1(Index cells, int threads)
{
  constexpr double window = 0.25;  // [m]
  const CaseSetup c = make_case("ritter_dam_break", {cells, threads});
  const RunResult r = run_simulation(c.model, c.initial, {c.final_time, {}});
  const RitterDamBreak dam;
  const Index excl = static_cast<Index>(std::ceil(window / c.model.grid.dx));
  const ErrorReport e = compare_to_reference(r.state.h, r.state.qx, r.state.qy, c.reference,
                                             {dam.head(c.final_time), dam.front(c.final_time)}, excl);
  return e.restricted.h.l1;
}

void ritter(const CaseSetup& c, const ValidationOptions& o, CaseReport& rep)
{
  constexpr double wet = 1e-8;  // [m] depth marking the numerical front
  const TimedRun run = timed_run(c);
  rep.seconds = run.seconds;
  const RunResult& r = run.result;
  const Grid& grid = c.model.grid;
  const RitterDamBreak dam;

  Index last_wet = -1;
  for (Index i = 0; i < grid.nx; ++i) {
    if (r.state.h(0, i) > wet) last_wet = i;
  }
  const double front = grid.x0 + static_cast<double>(last_wet + 1) * grid.dx;
  const double front_error = std::abs(front - dam.front(c.final_time));

  const ErrorReport e = compare_to_reference(r.state.h, r.state.qx, r.state.qy, c.reference);
  const double l1_coarse = ritter_l1(250, o.threads);
  const double l1_mid = ritter_l1(500, o.threads);
  const double l1_fine = ritter_l1(1000, o.threads);
  const double order = std::min(std::log2(l1_coarse / l1_mid), std::log2(l1_mid / l1_fine));

  rep.checks.push_back(at_least("min depth over all stages [m]", r.min_depth, 0.0));
  rep.checks.push_back(at_least("finite final state", r.state.h.allFinite() && r.state.qx.allFinite(), 1.0));
  rep.checks.push_back(at_most("L1(h) [m]", e.all.h.l1, 1e-5));
  rep.checks.push_back(at_least("L1(h) order 250-500-1000", order, 0.8));
  rep.checks.push_back(at_most("front error / dx", front_error / grid.dx, 2.0));
  rep.checks.push_back(at_most("runtime [s]", run.seconds, 10.0));
  rep.final_output = final_output(c, r);
}

void thacker(const CaseSetup& c, CaseReport& rep)
{
  constexpr double wet = 1e-3;  // [m] cells used for the planar fit
  const ThackerPlanar th;
  const Grid& grid = c.model.grid;
  const double v0 = total_volume(c.initial.h, grid);
  double drift = 0.0;
  double peak = c.initial.h.maxCoeff();
  const TimedRun run = timed_run(c, [&](double, double, const State& s, const StepBudget&) {
    drift = std::max(drift, std::abs(total_volume(s.h, grid) - v0) / v0);
    peak = std::max(peak, s.h.maxCoeff());
  });
  rep.seconds = run.seconds;
  const State& s = run.result.state;

  std::vector<Eigen::Vector3d> rows;
  std::vector<double> eta;
  for (Index j = 0; j < grid.ny; ++j) {
    for (Index i = 0; i < grid.nx; ++i) {
      if (s.h(j, i) < wet) continue;
      rows.emplace_back(1.0, grid.x(i), grid.y(j));
      eta.push_back(s.h(j, i) + c.model.topography.z(j, i));
    }
  }
  Eigen::MatrixXd a(static_cast<Index>(rows.size()), 3);
  Eigen::VectorXd b(static_cast<Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    a.row(static_cast<Index>(k)) = rows[k].transpose();
    b[static_cast<Index>(k)] = eta[k];
  }
  const Eigen::Vector3d plane = a.colPivHouseholderQr().solve(b);
  const double residual = rows.empty() ? INFINITY : (a * plane - b).cwiseAbs().maxCoeff();
  const double amplitude = 4.0 * th.eta * th.h0 / th.a;

  rep.checks.push_back(at_most("relative volume drift", drift, 1e-10));
  rep.checks.push_back(at_most("max h / analytic max h", peak / th.max_depth(), 1.2));
  rep.checks.push_back(at_most("planar fit residual / amplitude", residual / amplitude, 0.1));
  rep.checks.push_back(at_most("runtime [s]", run.seconds, 120.0));
  rep.final_output = final_output(c, run.result);
}

void macdonald_shock(const CaseSetup& c, CaseReport& rep)
{
  constexpr double shock = 200.0 / 3.0;
  const TimedRun run = timed_run(c);
  rep.seconds = run.seconds;
  const RunResult& r = run.result;
  const Grid& grid = c.model.grid;
  const SteadyFlowProfile p = macdonald_short_channel(c.model.scheme.gravity);

  const double window = 2.0 * grid.dx;
  Index outliers = 0;
  Index stray_outliers = 0;
  double h_error = 0.0;
  for (Index i = 0; i < grid.nx; ++i) {
    const bool near_shock = std::abs(grid.x(i) - shock) <= window;
    if (std::abs(r.state.qx(0, i) - p.q0) > 1e-3 * p.q0) {
      ++outliers;
      if (!near_shock) ++stray_outliers;
    }
    if (!near_shock) {
      h_error = std::max(h_error, std::abs(r.state.h(0, i) - c.reference.h(0, i)) / c.reference.h(0, i));
    }
  }
  const double position = shock_position(grid, r.state.h);

  rep.checks.push_back(at_most("max |dW/dt| at T", steady_rate(c.model, r.state, r.time), 1e-8));
  rep.checks.push_back(at_most("cells with |q - 2| > 1e-3 q", static_cast<double>(outliers), 2.0));
  rep.checks.push_back(at_most("  of which away from the shock", static_cast<double>(stray_outliers), 0.0));
  rep.checks.push_back(at_most("shock position error / dx", std::abs(position - shock) / grid.dx, 2.0));
  rep.checks.push_back(at_most("max relative h error off shock", h_error, 0.01));
  rep.checks.push_back(at_most("runtime [s]", run.seconds, 30.0));
  rep.final_output = final_output(c, r);
}

void macdonald_rain(const CaseSetup& c, CaseReport& rep)
{
  const TimedRun run = timed_run(c);
  rep.seconds = run.seconds;
  const RunResult& r = run.result;
  const Grid& grid = c.model.grid;
  const SteadyFlowProfile p = macdonald_rain_channel(c.model.scheme.gravity);

  Eigen::MatrixXd a(grid.nx, 2);
  Eigen::VectorXd b(grid.nx);
  double h_error = 0.0;
  for (Index i = 0; i < grid.nx; ++i) {
    a(i, 0) = 1.0;
    a(i, 1) = grid.x(i);
    b[i] = r.state.qx(0, i);
    h_error = std::max(h_error, std::abs(r.state.h(0, i) - c.reference.h(0, i)) / c.reference.h(0, i));
  }
  const Eigen::Vector2d line = a.colPivHouseholderQr().solve(b);

  rep.checks.push_back(at_most("relative error of fitted dq/dx", std::abs(line[1] - p.rain) / p.rain, 0.01));
  rep.checks.push_back(at_most("max relative h error", h_error, 0.01));
  rep.checks.push_back(at_most("relative mass balance error", r.max_relative_balance_error, 1e-10));
  rep.checks.push_back(at_least("min depth over all stages [m]", r.min_depth, 0.0));
  rep.checks.push_back(at_most("runtime [s]", run.seconds, 30.0));
  rep.final_output = final_output(c, r);
}

}  // namespace

CaseReport validate_case(std::string_view name, const ValidationOptions& options)
{
  CaseReport rep;
  rep.name = std::string(name);
  const CaseSetup c = make_case(name, {0, options.threads});
  try {
    if (name == "lake_at_rest_emerged") lake_at_rest(c, rep);
    else if (name == "ritter_dam_break") ritter(c, options, rep);
    else if (name == "thacker_paraboloid") thacker(c, rep);
    else if (name == "macdonald_shock") macdonald_shock(c, rep);
    else if (name == "macdonald_rain") macdonald_rain(c, rep);
  } catch (const NumericalFault& f) {
    rep.error = f.what();
  }
  return rep;
}

std::vector<CaseReport> validate_all(const ValidationOptions& options)
{
  std::vector<CaseReport> out;
  for (const auto& name : case_names()) out.push_back(validate_case(name, options));
  return out;
}

std::string format_report(const std::vector<CaseReport>& reports)
{
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-22s %-34s %12s    %-10s %s\n", "case", "check", "value", "limit", "result");
  os << buf;
  for (const auto& r : reports) {
    if (!r.error.empty()) {
      std::snprintf(buf, sizeof buf, "%-22s %-34s %12s    %-10s %s\n", r.name.c_str(), "run", "-", "-", "FAIL");
      os << buf << "    " << r.error << '\n';
      continue;
    }
    for (const auto& c : r.checks) {
      std::snprintf(buf, sizeof buf, "%-22s %-34s %12.4e %s %-10.3g %s\n", r.name.c_str(),
                    c.name.c_str(), c.value, c.relation == Check::Relation::at_most ? "<=" : ">=",
                    c.limit, c.passed() ? "PASS" : "FAIL");
      os << buf;
    }
  }
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.passed();
  os << passed << "/" << reports.size() << " cases passed\n";
  return os.str();
}

}  // namespace swekit
