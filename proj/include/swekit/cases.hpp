#pragma once

// Built-in benchmark cases: model, initial state and reference solution.

#include "swekit/analytic.hpp"
#include "swekit/solver.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace swekit {

struct CaseOptions {
  Index cells{0};  // cells per direction, 0 for the case default
  int threads{1};
};

struct CaseSetup {
  std::string name;
  std::string description;
  Model model;
  State initial;
  double final_time{0.0};
  std::vector<double> output_times;
  /// Reference at the final time (the steady profile for the channel cases).
  ReferenceProfile reference;
};

const std::vector<std::string>& case_names();

/// Throws std::invalid_argument for an unknown name.
CaseSetup make_case(std::string_view name, const CaseOptions& options = {});

}  // namespace swekit
