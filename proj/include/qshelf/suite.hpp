#pragma once

#include <array>
#include <string>
#include <vector>

#include "qshelf/check.hpp"
#include "qshelf/family.hpp"
#include "qshelf/series.hpp"

namespace qshelf {

enum class SuiteName { gga, gordon, xq, matrices, partitions, all };
enum class ReportFormat { text, json };

std::string_view to_string(SuiteName s);
std::string_view to_string(ReportFormat f);
SuiteName parse_suite(std::string_view name);
ReportFormat parse_format(std::string_view name);

struct SuiteConfig {
  SuiteName suite = SuiteName::all;
  int k_min = 2;
  int k_max = 4;
  Exponent order = 60;
  int j_max = 6;
  std::vector<int> J_values{0, 1, 2, 3};
  ReportFormat format = ReportFormat::text;
  int parallelism = 1;
  /// Test hook: perturbs one recursion-generated gga shelf entry so the
  /// failure path can be exercised.
  bool inject_fault = false;
  /// Test hook: adds a check that throws.
  bool inject_error = false;

  /// Throws UsageError on an invalid grid.
  void validate() const;
};

/// Defaults, with the order taken from QSHELF_ORDER when it is set.
SuiteConfig default_config();

struct Report {
  SuiteConfig config;
  std::vector<CheckResult> results;
  /// Counts indexed by Status.
  std::array<int, 3> summary{};

  int exit_code() const { return summary[1] + summary[2] == 0 ? 0 : 1; }
};

/// Runs every check of the configured suite over the grid. Checks that throw
/// are recorded with status error. Results are sorted by id, then params.
Report run_suite(const SuiteConfig& config);

/// Report rendering; elapsed times are left out so reports are reproducible.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

struct SeriesRequest {
  std::string what;
  Family family = Family::gga;
  int k = 2;
  int i = 1;
  int j = 0;
  int J = 0;
  int l = 1;
  Exponent order = 8;
};

/// Text dump of one named object: product, altsum, closed-form, h1-infinity,
/// genfun or h-poly (every entry of the ^J h^(j) matrix). Throws UsageError
/// for an unknown name.
std::string emit_series(const SeriesRequest& request);

}  // namespace qshelf
