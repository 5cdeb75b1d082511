#pragma once

// Friction, rain and infiltration source terms.

#include "swekit/hydraulics.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace swekit {

enum class FrictionLaw { none, manning, darcy_weisbach };

inline std::string_view to_string(FrictionLaw law)
{
  switch (law) {
    case FrictionLaw::none: return "none";
    case FrictionLaw::manning: return "manning";
    case FrictionLaw::darcy_weisbach: return "darcy_weisbach";
  }
  return "?";
}

/// Friction law and its coefficient: Manning n [s m^-1/3] or the
/// dimensionless Darcy-Weisbach f.
struct FrictionParams {
  FrictionLaw law{FrictionLaw::none};
  double coefficient{0.0};

  static FrictionParams none() { return {}; }
  static FrictionParams manning(double n) { return checked({FrictionLaw::manning, n}); }
  static FrictionParams darcy_weisbach(double f) { return checked({FrictionLaw::darcy_weisbach, f}); }
  /// Strickler K: C_f = 1/K^2, i.e. Manning with n = 1/K.
  static FrictionParams strickler(double k) { return manning(1.0 / k); }
  /// Chezy C: C_f = 1/C^2, i.e. Darcy-Weisbach with f = 8g/C^2.
  static FrictionParams chezy(double c, double g = kGravity) { return darcy_weisbach(8.0 * g / (c * c)); }

  static FrictionParams checked(FrictionParams p)
  {
    if (!(p.coefficient >= 0.0) || !std::isfinite(p.coefficient)) {
      throw std::invalid_argument("friction coefficient must be finite and nonnegative");
    }
    return p;
  }
};

/// Multiplicative factor in (0, 1] applied to the post-convection discharge.
/// `q_n_magnitude` is |q| (or |q_vec|) at the start of the stage.
template <typename Scalar>
Scalar friction_damping(Scalar q_n_magnitude, Scalar h_n, Scalar h_np1, const FrictionParams& p,
                        Scalar dt, Scalar g = Scalar(kGravity))
{
  if (p.law == FrictionLaw::none || p.coefficient == 0.0) return Scalar(1);
  if (h_n <= Scalar(kDryDepth) || h_np1 <= Scalar(kDryDepth)) return Scalar(1);
  const Scalar c = Scalar(p.coefficient);
  Scalar k{0};
  switch (p.law) {
    case FrictionLaw::manning:
      k = g * c * c * dt * q_n_magnitude / (h_n * std::pow(h_np1, Scalar(4) / Scalar(3)));
      break;
    case FrictionLaw::darcy_weisbach:
      k = dt * (c / Scalar(8)) * q_n_magnitude / (h_n * h_np1);
      break;
    case FrictionLaw::none: break;
  }
  return Scalar(1) / (Scalar(1) + k);
}

/// Semi-implicit friction update of one discharge component. A cell that is
/// dry after the convective stage loses its discharge; a cell that was dry
/// at the start of the stage has no velocity and so no friction yet.
template <typename Scalar>
Scalar friction_semi_implicit(Scalar q_star, Scalar q_n, Scalar h_n, Scalar h_np1,
                              const FrictionParams& p, Scalar dt, Scalar g = Scalar(kGravity))
{
  if (h_np1 <= Scalar(kDryDepth)) return Scalar(0);
  return q_star * friction_damping(std::abs(q_n), h_n, h_np1, p, dt, g);
}

/// Piecewise-constant, spatially uniform rain intensity.
class Hyetograph {
 public:
  struct Entry {
    double start;      // [s]
    double intensity;  // [m/s]
  };

  Hyetograph() = default;
  explicit Hyetograph(std::vector<Entry> entries) : entries_(std::move(entries))
  {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (!(entries_[k].intensity >= 0.0)) {
        throw std::invalid_argument("hyetograph: intensities must be nonnegative");
      }
      if (k > 0 && !(entries_[k].start > entries_[k - 1].start)) {
        throw std::invalid_argument("hyetograph: start times must be strictly increasing");
      }
    }
  }

  static Hyetograph constant(double intensity) { return Hyetograph({{0.0, intensity}}); }

  /// Intensity of the interval containing t; zero before the first entry.
  double rate(double t) const
  {
    double r = 0.0;
    for (const auto& e : entries_) {
      if (e.start <= t) r = e.intensity;
      else break;
    }
    return r;
  }

  /// First change time strictly after t, if any.
  std::optional<double> next_change(double t) const
  {
    for (const auto& e : entries_) {
      if (e.start > t) return e.start;
    }
    return std::nullopt;
  }

  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

inline double rain_rate(double t, const Hyetograph& hyeto) { return hyeto.rate(t); }

/// Soil description of the bi-layer Green-Ampt model. `crust_thickness == 0`
/// selects the single-layer model. Without `max_rate` the rate cap defaults
/// to the water available in the step.
struct SoilParams {
  double soil_conductivity{0.0};   // K_s [m/s]
  double crust_conductivity{0.0};  // K_c [m/s]
  double crust_thickness{0.0};     // Z_c [m]
  double suction_head{0.0};        // h_f [m]
  double moisture_deficit{1.0};    // theta_s - theta_i [-]
  std::optional<double> max_rate;  // i_max [m/s]

  void validate() const
  {
    if (!(soil_conductivity >= 0.0)) throw std::invalid_argument("soil: K_s must be >= 0");
    if (!(crust_conductivity >= 0.0)) throw std::invalid_argument("soil: K_c must be >= 0");
    if (!(crust_thickness >= 0.0)) throw std::invalid_argument("soil: Z_c must be >= 0");
    if (!(suction_head >= 0.0)) throw std::invalid_argument("soil: h_f must be >= 0");
    if (!(moisture_deficit > 0.0)) throw std::invalid_argument("soil: delta theta must be > 0");
    if (crust_thickness > 0.0 && !(crust_conductivity > 0.0)) {
      throw std::invalid_argument("soil: a crust needs K_c > 0");
    }
    if (max_rate && !(*max_rate >= 0.0)) throw std::invalid_argument("soil: i_max must be >= 0");
  }
};

struct GreenAmptState {
  double infiltrated{0.0};  // V_inf [m]
  SoilParams soil;

  double front_depth() const { return infiltrated / soil.moisture_deficit; }
};

/// Conductivity seen by the wetting front at depth `front_depth`.
inline double effective_conductivity(const SoilParams& s, double front_depth)
{
  if (s.crust_thickness == 0.0) return s.soil_conductivity;
  if (front_depth <= s.crust_thickness) return s.crust_conductivity;
  return front_depth / ((front_depth - s.crust_thickness) / s.soil_conductivity +
                        s.crust_thickness / s.crust_conductivity);
}

/// Infiltration capacity I_C [m/s] for ponding depth `h_surface`. Infinite
/// while nothing has infiltrated yet.
inline double infiltration_capacity(const GreenAmptState& ga, double h_surface)
{
  const double zf = ga.front_depth();
  if (zf <= 0.0) return std::numeric_limits<double>::infinity();
  return effective_conductivity(ga.soil, zf) * (1.0 + (ga.soil.suction_head + h_surface) / zf);
}

struct InfiltrationStep {
  double infiltrated_depth{0.0};  // Delta V [m], to be removed from h by the caller
  GreenAmptState state;
};

/// One explicit Green-Ampt update over dt with ponding depth `h_surface`.
/// `rain` only enters the default rate cap h_surface/dt + R.
inline InfiltrationStep infiltration_step(const GreenAmptState& ga, double h_surface, double dt,
                                          double rain = 0.0)
{
  if (!(h_surface >= 0.0)) throw std::invalid_argument("infiltration_step: negative depth");
  if (!(dt > 0.0)) throw std::invalid_argument("infiltration_step: dt must be positive");
  InfiltrationStep out{0.0, ga};
  if (h_surface <= 0.0) return out;
  const double cap = ga.soil.max_rate.value_or(h_surface / dt + rain);
  const double rate = std::min(infiltration_capacity(ga, h_surface), cap);
  out.infiltrated_depth = std::min(h_surface, rate * dt);
  out.state.infiltrated += out.infiltrated_depth;
  return out;
}

}  // namespace swekit
