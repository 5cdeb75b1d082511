#pragma once

// Parameter files, DEM rasters, column output and mass-balance reports.
//
// Parameter file: `key = value` lines, `#` starts a comment. Keys:
//
//   nx, ny, length_x, length_y, x0, y0      grid (ny = 1 for 1D)
//   topography                              flat | <DEM path>
//   initial_depth | initial_surface         number or DEM path | number
//   initial_discharge_x, initial_discharge_y number or DEM path
//   final_time, output_times                seconds; times comma separated
//   order, flux, cfl, fixed_dt, gravity, threads
//   friction, friction_coefficient          none | manning | darcy_weisbach
//                                           | strickler | chezy
//   boundary_left|right|bottom|top          wall | neumann | periodic
//                                           | imposed_depth h
//                                           | imposed_discharge q
//                                           | imposed_both h q
//   rain                                    start:intensity pairs, comma separated
//   soil_conductivity, crust_conductivity, crust_thickness, suction_head,
//   moisture_deficit, infiltration_max_rate Green-Ampt soil (uniform)
//   output_directory, output_prefix
//
// Relative paths are resolved against the directory of the parameter file.

#include "swekit/analytic.hpp"
#include "swekit/solver.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace swekit {

class ConfigError : public std::runtime_error {
 public:
  struct Issue {
    int line;  // 0 when the problem is not tied to one line
    std::string key;
    std::string reason;
  };

  explicit ConfigError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

struct SimulationConfig {
  Model model;
  State initial;
  double final_time{0.0};
  std::vector<double> output_times;
  std::filesystem::path output_directory{"."};
  std::string output_prefix{"swekit"};
  std::uint64_t hash{0};
};

/// Throws ConfigError listing every problem found.
SimulationConfig parse_parameters(std::string_view text,
                                  const std::filesystem::path& base_dir = ".");

/// Reads and parses a parameter file. A missing file is a ConfigError.
SimulationConfig load_parameters(const std::filesystem::path& file);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// Hash of a parameter text with comments, blank lines and surrounding
/// whitespace removed.
std::uint64_t parameter_hash(std::string_view text);

std::string hex(std::uint64_t value);

/// Raster with square cells. `values` is stored like a Field: row 0 is the
/// southernmost row. Files list rows north to south.
struct DemGrid {
  Index ncols{0};
  Index nrows{0};
  double cellsize{0.0};
  double x0{0.0};
  double y0{0.0};
  Field<double> values;

  Grid grid() const;
  static DemGrid from_field(const Field<double>& values, const Grid& grid);
};

/// Header: `ncols N`, `nrows M`, `cellsize D`, `origin X Y`, then M rows of
/// N values. Throws std::runtime_error with the offending item.
DemGrid read_dem(std::istream& in);
DemGrid read_dem(const std::filesystem::path& file);
void write_dem(std::ostream& out, const DemGrid& dem);

/// One line per cell: `x z h u q Fr` in 1D, `x y z h u v qx qy Fr` in 2D,
/// scientific notation with 17 significant digits, after a `#` header with
/// the time and the configuration hash.
void write_output(std::ostream& out, const ConservedFields<double>& w, const Grid& grid,
                  const Topography& topo, double time, std::uint64_t hash,
                  double g = kGravity);

/// A reference profile in the same columns as write_output.
void write_reference(std::ostream& out, const ReferenceProfile& ref, std::uint64_t hash,
                     double g = kGravity);

void write_mass_balance(std::ostream& out, const RunResult& result, std::uint64_t hash);

/// Parameter text reproducing a model setup. DEM-backed fields are written
/// as paths relative to the parameter file.
struct CaseFiles {
  std::string topography;
  std::string depth;
  std::string discharge_x;
  std::string discharge_y;  // empty in 1D
};

std::string format_parameters(const Model& model, double final_time,
                              const std::vector<double>& output_times, const CaseFiles& files,
                              std::string_view title);

}  // namespace swekit
