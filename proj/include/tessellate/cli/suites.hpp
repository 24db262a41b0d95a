#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tessellate::cli {

/// One asserted quantity of a validation suite.
struct CheckLine {
  std::string name;
  double estimate = 0.0;
  std::optional<double> target;
  std::optional<double> tol;  // relative unless absolute noted in name
  bool pass = true;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool pass = true;

  void add(CheckLine line) {
    pass = pass && line.pass;
    lines.push_back(std::move(line));
  }
  /// Relative-tolerance assertion.
  void check_rel(const std::string& name, double estimate, double target,
                 double tol, const std::string& note = {});
  /// Boolean assertion.
  void check_true(const std::string& name, bool ok, double estimate = 0.0,
                  const std::string& note = {});
  /// p-value above threshold.
  void check_p_above(const std::string& name, double p, double threshold,
                     const std::string& note = {});
  /// p-value below threshold (discrimination / negative control).
  void check_p_below(const std::string& name, double p, double threshold,
                     const std::string& note = {});
};

void print_report(const SuiteReport& rep, std::ostream& os);
void write_report_csv(const SuiteReport& rep, const std::string& path);

// The numbered acceptance criteria. Each function pins its own windows,
// replication counts and tolerances.
SuiteReport criterion1_planar_table(std::uint64_t seed, int threads);
SuiteReport criterion2_first_order(std::uint64_t seed, int threads);
SuiteReport criterion3_spatial(std::uint64_t seed, int threads);
SuiteReport criterion4_zeta(std::uint64_t seed);
SuiteReport criterion5_typical_cell(std::uint64_t seed, int threads);
SuiteReport criterion6_spinal(std::uint64_t seed, int threads);
SuiteReport criterion7_scaling(std::uint64_t seed, int threads);
SuiteReport criterion8_iteration(std::uint64_t seed, int threads);
SuiteReport criterion9_hardcore(std::uint64_t seed, int threads);
SuiteReport criterion10_geometry(std::uint64_t seed);

/// CLI suite names: planar -> {1}, spatial -> {3}, stit -> {4,7,8},
/// kernels -> {2,9}.
std::vector<SuiteReport> run_suite(const std::string& name,
                                   std::uint64_t seed, int threads);

}  // namespace tessellate::cli
