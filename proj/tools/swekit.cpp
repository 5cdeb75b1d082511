// Command-line front end: run, validate, generate-case, version.

#include "swekit/cases.hpp"
#include "swekit/io.hpp"
#include "swekit/validate.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace swekit;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { ok = 0, usage = 1, validation_failed = 2, numerical_fault = 3 };

void write_file(const fs::path& path, const std::string& text)
{
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int run_command(const fs::path& params, int threads)
{
  SimulationConfig cfg = load_parameters(params);
  if (threads > 0) cfg.model.scheme.threads = threads;
  fs::create_directories(cfg.output_directory);

  int snapshot = 0;
  const auto on_output = [&](const Snapshot& s) {
    char name[64];
    std::snprintf(name, sizeof name, "_%04d.txt", snapshot++);
    std::ofstream out(cfg.output_directory / (cfg.output_prefix + name));
    write_output(out, s.state, cfg.model.grid, cfg.model.topography, s.time, cfg.hash,
                 cfg.model.scheme.gravity);
  };
  const RunResult r =
      run_simulation(cfg.model, cfg.initial, {cfg.final_time, cfg.output_times}, on_output);

  std::ofstream report(cfg.output_directory / (cfg.output_prefix + "_mass_balance.txt"));
  write_mass_balance(report, r, cfg.hash);
  std::cout << "t = " << r.time << " s after " << r.steps << " steps, " << snapshot
            << " snapshot(s) in " << cfg.output_directory.string() << '\n'
            << "relative mass balance error: " << r.max_relative_balance_error << '\n';
  if (r.boundary.any()) std::cerr << "warning: " << r.boundary.summary() << '\n';
  return ok;
}

int validate_command(const std::vector<std::string>& names, int threads, const std::string& out_dir)
{
  const ValidationOptions opts{threads};
  std::vector<CaseReport> reports;
  for (const auto& n : names.empty() ? case_names() : names) {
    reports.push_back(validate_case(n, opts));
  }
  std::cout << format_report(reports);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto& r : reports) write_file(fs::path(out_dir) / (r.name + ".txt"), r.final_output);
  }
  for (const auto& r : reports) {
    if (!r.passed()) return validation_failed;
  }
  return ok;
}

int generate_command(const std::string& name, const fs::path& dir)
{
  const CaseSetup c = make_case(name);
  fs::create_directories(dir);
  const Grid& grid = c.model.grid;
  const auto dem = [&](const std::string& suffix, const Field<double>& f) {
    std::ofstream out(dir / (name + suffix));
    write_dem(out, DemGrid::from_field(f, grid));
    return name + suffix;
  };
  CaseFiles files;
  files.topography = dem("_topography.dem", c.model.topography.z);
  files.depth = dem("_depth.dem", c.initial.h);
  files.discharge_x = dem("_discharge_x.dem", c.initial.qx);
  if (!grid.is_1d()) files.discharge_y = dem("_discharge_y.dem", c.initial.qy);

  const std::string params = format_parameters(c.model, c.final_time, c.output_times, files,
                                               c.description) +
                             "\noutput_prefix = " + name + "\n";
  write_file(dir / (name + ".params"), params);
  std::ofstream ref(dir / (name + "_reference.txt"));
  write_reference(ref, c.reference, parameter_hash(params), c.model.scheme.gravity);
  std::cout << "wrote " << (dir / (name + ".params")).string() << " and its rasters\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Shallow-water finite-volume kit"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a simulation from a parameter file");
  std::string params;
  int run_threads = 0;
  run->add_option("params", params, "Parameter file")->required();
  run->add_option("--threads", run_threads, "Override the thread count");

  auto* validate = app.add_subcommand("validate", "Run the built-in benchmark set");
  std::vector<std::string> cases;
  int val_threads = 1;
  std::string out_dir;
  validate->add_option("--case", cases, "Only these cases")->check(CLI::IsMember(case_names()));
  validate->add_option("--threads", val_threads, "Worker threads")->check(CLI::PositiveNumber);
  validate->add_option("--output-dir", out_dir, "Write each final state here");

  auto* generate = app.add_subcommand("generate-case", "Write parameter file, rasters and reference");
  std::string case_name;
  std::string gen_dir = ".";
  generate->add_option("name", case_name, "Built-in case")->required()->check(CLI::IsMember(case_names()));
  generate->add_option("--output-dir", gen_dir, "Destination directory");

  app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (run->parsed()) return run_command(params, run_threads);
    if (validate->parsed()) return validate_command(cases, val_threads, out_dir);
    if (generate->parsed()) return generate_command(case_name, gen_dir);
    std::cout << "swekit " << kVersion << '\n';
    return ok;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error:\n" << e.what() << '\n';
    return usage;
  } catch (const NumericalFault& e) {
    std::cerr << "numerical fault: " << e.what() << '\n';
    return numerical_fault;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
