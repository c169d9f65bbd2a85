// Plain key=value run configuration and machine-readable JSON/CSV reports.

#pragma once

#include <string>
#include <vector>

#include "qhl/moments.hpp"

namespace qhl {

struct RunConfig {
  std::vector<int> fields = {-1};
  std::string mode = "first";  // first | ratios | logderiv
  double alpha = 0.25;
  double beta = 0.3;
  double r = 0.25;
  std::vector<double> x_grid = {1000.0};
  std::string weight = "bump";  // bump | gamma
  double eps_l = 1e-9;
  int workers = 1;
  std::string out_path;
};

// key=value lines, '#' comments, unknown keys rejected; range violations
// surface the violated theorem constraint.  Empty input yields the defaults.
RunConfig parse_config(const std::string& text);

// Builds the per-X request for one field of the config.
MomentRequest request_from_config(const RunConfig& cfg, int field_d, double X);

std::string emit_report_json(const MomentReport& rep);
MomentReport parse_report_json(const std::string& text);

std::string report_csv_header();
std::string report_csv_row(const MomentReport& rep);

}  // namespace qhl
