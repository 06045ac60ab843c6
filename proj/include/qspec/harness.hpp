#pragma once

#include "qspec/families.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qspec {

struct VerificationCase {
  std::string case_id;
  std::string input;
  std::string predicted;
  std::string computed;
  bool pass = false;
  double residual = 0;
};

/// Grid knobs for `verify`. A zero max_n selects each theorem's default.
struct GridConfig {
  int max_n = 0;
  std::vector<int> c_values{1, 2};
  // Generalized core-satellite grid.
  std::vector<int> n0_values{1, 2, 3};
  std::vector<int> count_values{1, 2, 3};
  std::vector<int> order_values{1, 2, 3, 4};
  int max_order_classes = 3;
  // Family grids.
  std::vector<int> multiplicity_values{1, 2, 3};  // p, p1, p2, p3
  std::vector<int> size_values{1, 2, 3, 4, 5};    // a, b
  std::vector<int> s_odd{1, 3, 5};
  std::vector<int> s_even{2, 4, 6};
  std::vector<int> join_c_values{1, 2, 3};
  // Closed-form spectra.
  int complete_max = 8;
  int bipartite_max = 5;
  double tolerance = 1e-7;
};

GridConfig grid_from_json(const nlohmann::json& j);

const std::vector<std::string>& theorem_ids();

/// Runs one theorem suite. Throws std::invalid_argument on an unknown id.
std::vector<VerificationCase> verify(std::string_view theorem_id, const GridConfig& grid = {});

void write_report_csv(std::ostream& out, const std::vector<VerificationCase>& cases);

/// Every valid spec of one family over the configured grid.
std::vector<FamilySpec> family_grid(std::string_view family, const GridConfig& grid = {});
std::vector<FamilySpec> gcs_grid(const GridConfig& grid = {});

struct SweepOptions {
  std::size_t max_points = 10000;
  bool timing = true;
};

/// Expands a family pattern whose parameters are integers, integer lists
/// or {"from": a, "to": b} ranges, and writes one CSV row per valid point.
/// Returns the number of rows written.
std::size_t sweep(const nlohmann::json& pattern, std::ostream& out, const SweepOptions& options = {});

}  // namespace qspec
