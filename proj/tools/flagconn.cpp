// flagconn: Levi-Civita connection of a flag manifold G/T for an invariant metric.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagconn/errors.hpp"
#include "flagconn/job.hpp"

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw flagconn::ConfigError("cannot open " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw flagconn::ConfigError(path + ": " + e.what());
  }
}

int verify(const std::string& path) {
  const auto loaded = flagconn::read_tensor_json(load_json(path));
  bool ok = true;
  for (const auto& r : flagconn::verify_tensor(loaded)) {
    flagconn::print_report(std::cout, r);
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levi-Civita connection of G/T for classical G and any invariant metric"};
  app.set_version_flag("--version", flagconn::kVersion);

  std::string config_path;
  std::string family;
  int rank = 0;
  std::string coeffs;
  std::string checks;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::string output;
  std::string format;
  std::string verify_path;

  app.add_option("--config", config_path, "JSON config file; flags override its values");
  auto* o_family = app.add_option("--family", family, "Root family: A, B, C or D");
  auto* o_rank = app.add_option("--rank", rank, "Rank of the root system");
  auto* o_coeffs = app.add_option("--coeffs", coeffs, "Coefficients: JSON file path, \"normal\" or \"random\"");
  auto* o_checks = app.add_option("--checks", checks, "Comma list of oracle,torsion,metric,lemma2,su-crosscheck or all");
  auto* o_tol = app.add_option("--tolerance", tolerance, "Absolute residual threshold (default 1e-9)");
  auto* o_seed = app.add_option("--seed", seed, "Seed for random coefficients (default 0)");
  auto* o_output = app.add_option("--output", output, "Output path (default: standard output)");
  auto* o_format = app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--verify", verify_path, "Re-run torsion and metric checks on a written JSON tensor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!verify_path.empty()) return verify(verify_path);

    flagconn::JobConfig cfg;
    if (!config_path.empty()) cfg = flagconn::parse_config(load_json(config_path));
    if (o_family->count()) cfg.family = family;
    if (o_rank->count()) cfg.rank = rank;
    if (o_coeffs->count()) {
      if (coeffs == "normal") {
        cfg.source = flagconn::CoefficientSource::Normal;
      } else if (coeffs == "random") {
        cfg.source = flagconn::CoefficientSource::Random;
      } else {
        cfg.source = flagconn::CoefficientSource::Explicit;
        cfg.coefficients = flagconn::parse_coefficients(load_json(coeffs));
      }
    }
    if (o_checks->count()) cfg.checks = flagconn::split_checks(checks);
    if (o_tol->count()) cfg.tolerance = tolerance;
    if (o_seed->count()) cfg.seed = seed;
    if (o_output->count()) cfg.output_path = output;
    if (o_format->count()) cfg.format = format == "csv" ? flagconn::OutputFormat::Csv : flagconn::OutputFormat::Json;
    return flagconn::run_job(cfg, std::cout, std::cerr);
  } catch (const flagconn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
