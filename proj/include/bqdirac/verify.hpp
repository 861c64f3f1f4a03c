#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bqdirac/types.hpp"

namespace bqdirac {

enum class Suite { algebra, basis, triality, dynamics, transform, mass, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct SuiteConfig {
  Suite suite = Suite::all;
  int trials = 100;
  std::uint64_t seed = 1;
  Real tol = 1e-10;
  std::optional<std::string> report_path;
  int threads = 0;  // 0: hardware concurrency
};

/// Throws std::invalid_argument for trials < 1, tol <= 0 or threads < 0.
void validate(const SuiteConfig& cfg);

struct Record {
  std::string id;
  std::string paper_ref;
  int trials = 0;
  Real max_residual = 0;
  Real tol = 0;
  bool pass = false;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<Record> records;
  nlohmann::ordered_json observations;
  bool pass = false;
  double wall_ms = 0;
};

SuiteReport run_suite(const SuiteConfig& cfg);

/// config, records, observations, summary. Without timing, summary.wall_ms is omitted.
nlohmann::ordered_json to_json(const SuiteReport& report, bool with_timing = true);

/// Writes the report; throws std::runtime_error on I/O failure.
void write_report(const SuiteReport& report, const std::string& path);

/// One line per record plus a summary line.
std::string format_text(const SuiteReport& report);

std::vector<std::string> demo_names();
/// Throws std::invalid_argument for an unknown name.
std::string demo(std::string_view name);

}  // namespace bqdirac
