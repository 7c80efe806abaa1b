#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagconn/connection.hpp"
#include "flagconn/metric.hpp"
#include "flagconn/oracle.hpp"
#include "flagconn/rootsys.hpp"

namespace flagconn {

inline constexpr const char* kVersion = "0.1.0";
/// Tensor entries at or below this magnitude are left out of the sparse output.
inline constexpr double kSparseCutoff = 1e-12;

enum class OutputFormat { Json, Csv };
enum class CoefficientSource { Normal, Random, Explicit };

struct CoefficientEntry {
  Coords root;
  double c = 0.0;
};

struct JobConfig {
  std::string family = "A";
  int rank = 2;
  CoefficientSource source = CoefficientSource::Normal;
  std::vector<CoefficientEntry> coefficients;  // used when source == Explicit
  std::vector<std::string> checks = {"all"};
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::Json;
};

/// Check names accepted in JobConfig::checks ("all" expands to every applicable one).
const std::vector<std::string>& known_checks();

/// Reads a config object. Keys mirror JobConfig: family, rank, coefficients
/// ("normal", "random" or a list of {root, c}), checks (list or comma
/// string), tolerance, seed, output, format. Missing keys keep `base` values.
JobConfig parse_config(const nlohmann::json& j, JobConfig base = {});

/// Coefficients file: a bare list of {root, c}, or an object carrying one
/// under "coefficients".
std::vector<CoefficientEntry> parse_coefficients(const nlohmann::json& j);

std::vector<std::string> split_checks(const std::string& list);

struct JobResult {
  RootSystem root_system;
  MetricSpec metric;
  ConnectionTensor tensor;
  std::vector<CheckReport> reports;
  nlohmann::json meta;

  bool all_passed() const;
};

/// Validates the config (ConfigError on failure), assembles the tensor and
/// runs the requested checks. Deterministic in (config, seed).
JobResult execute(const JobConfig& config);

nlohmann::json report_to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

nlohmann::json render_json(const JobResult& result);
std::string render_csv(const ConnectionTensor& tensor);

/// Runs the job and writes artifacts. Returns 0 when every check passes,
/// 1 when a check fails, 2 on configuration errors.
int run_job(const JobConfig& config, std::ostream& out, std::ostream& err);

/// One "PASS name ..." / "FAIL name ..." line; failures add the report as JSON.
void print_report(std::ostream& os, const CheckReport& r);

struct LoadedTensor {
  RootSystem root_system;
  MetricSpec metric;
  double tolerance = kDefaultTolerance;
  ConnectionTensor tensor;
};

/// Rebuilds the tensor and its metric from a JSON document written by render_json.
LoadedTensor read_tensor_json(const nlohmann::json& doc);

/// Re-runs the torsion and metric-compatibility checks on a loaded tensor.
std::vector<CheckReport> verify_tensor(const LoadedTensor& loaded);

}  // namespace flagconn
