#pragma once

// Non-regression harness: runs the built-in cases and compares them with
// their reference solutions against fixed tolerances.

#include <string>
#include <string_view>
#include <vector>

namespace swekit {

struct Check {
  enum class Relation { at_most, at_least };

  std::string name;
  double value{0.0};
  Relation relation{Relation::at_most};
  double limit{0.0};

  bool passed() const;
};

struct CaseReport {
  std::string name;
  std::vector<Check> checks;
  double seconds{0.0};        // wall time of the main run
  std::string final_output;   // write_output of the final state
  std::string error;          // set when the run aborted

  bool passed() const;
};

struct ValidationOptions {
  int threads{1};
};

CaseReport validate_case(std::string_view name, const ValidationOptions& options = {});

std::vector<CaseReport> validate_all(const ValidationOptions& options = {});

/// One row per check: case, check, value, relation, limit, PASS/FAIL.
std::string format_report(const std::vector<CaseReport>& reports);

}  // namespace swekit
