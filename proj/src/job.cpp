#include "flagconn/job.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "flagconn/errors.hpp"
#include "flagconn/su_realization.hpp"

namespace flagconn {

using nlohmann::json;

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"oracle", "torsion", "metric", "lemma2", "su-crosscheck"};
  return names;
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<CoefficientEntry> parse_coefficients(const json& j) {
  const json& list = j.is_object() && j.contains("coefficients") ? j.at("coefficients") : j;
  if (!list.is_array()) throw ConfigError("coefficients must be a list of {\"root\": [...], \"c\": value}");
  std::vector<CoefficientEntry> out;
  for (const auto& e : list) {
    if (!e.is_object() || !e.contains("root") || !e.contains("c")) {
      throw ConfigError("each coefficient entry needs \"root\" and \"c\"");
    }
    try {
      out.push_back({e.at("root").get<Coords>(), e.at("c").get<double>()});
    } catch (const json::exception& ex) {
      throw ConfigError(std::string("malformed coefficient entry: ") + ex.what());
    }
  }
  return out;
}

JobConfig parse_config(const json& j, JobConfig base) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  JobConfig cfg = std::move(base);
  try {
    if (j.contains("family")) cfg.family = j.at("family").get<std::string>();
    if (j.contains("rank")) cfg.rank = j.at("rank").get<int>();
    if (j.contains("coefficients")) {
      const json& c = j.at("coefficients");
      if (c.is_string()) {
        const auto token = c.get<std::string>();
        if (token == "normal") {
          cfg.source = CoefficientSource::Normal;
        } else if (token == "random") {
          cfg.source = CoefficientSource::Random;
        } else {
          throw ConfigError("coefficients token must be \"normal\" or \"random\", got \"" + token + "\"");
        }
      } else {
        cfg.source = CoefficientSource::Explicit;
        cfg.coefficients = parse_coefficients(c);
      }
    }
    if (j.contains("checks")) {
      const json& c = j.at("checks");
      cfg.checks = c.is_string() ? split_checks(c.get<std::string>()) : c.get<std::vector<std::string>>();
    }
    if (j.contains("tolerance")) cfg.tolerance = j.at("tolerance").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output")) cfg.output_path = j.at("output").get<std::string>();
    if (j.contains("format")) {
      const auto f = j.at("format").get<std::string>();
      if (f == "json") {
        cfg.format = OutputFormat::Json;
      } else if (f == "csv") {
        cfg.format = OutputFormat::Csv;
      } else {
        throw ConfigError("format must be json or csv, got \"" + f + "\"");
      }
    }
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed config: ") + ex.what());
  }
  return cfg;
}

namespace {

std::vector<std::string> expand_checks(const JobConfig& cfg, const RootSystem& rs) {
  const bool su_applicable = rs.family() == Family::A && rs.rank() >= 2;
  std::vector<std::string> out;
  auto add = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  for (const auto& name : cfg.checks) {
    if (name == "all") {
      for (const auto& k : known_checks()) {
        if (k != "su-crosscheck" || su_applicable) add(k);
      }
      continue;
    }
    if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end()) {
      throw ConfigError("unknown check \"" + name + "\"");
    }
    if (name == "su-crosscheck" && !su_applicable) {
      throw ConfigError("su-crosscheck needs family A with rank >= 2");
    }
    add(name);
  }
  return out;
}

MetricSpec metric_from_config(const JobConfig& cfg, const RootSystem& rs) {
  switch (cfg.source) {
    case CoefficientSource::Normal: return MetricSpec::normal(rs);
    case CoefficientSource::Random: return MetricSpec::random(rs, cfg.seed);
    case CoefficientSource::Explicit: break;
  }
  MetricSpec spec;
  std::set<Coords> seen;
  for (const auto& e : cfg.coefficients) {
    if (!seen.insert(e.root).second) {
      std::string label;
      for (std::size_t i = 0; i < e.root.size(); ++i) label += (i ? "," : "") + std::to_string(e.root[i]);
      throw ConfigError("duplicate metric coefficient for root [" + label + "]");
    }
    if (e.root.size() != static_cast<std::size_t>(rs.rank())) {
      throw ConfigError("coefficient root has " + std::to_string(e.root.size()) + " coordinates, expected " +
                        std::to_string(rs.rank()));
    }
    spec.set(Root(e.root), e.c);
  }
  resolve_coefficients(rs, spec);
  return spec;
}

CheckReport su_crosscheck(const RootSystem& rs, const StructureConstants& sc, const KillingForm& killing,
                          const MetricSpec& spec, double tolerance) {
  const int n = rs.rank();
  const auto align = su::align_basis(rs, sc, killing);
  double worst = std::max(su::bracket_table_residual(rs, sc, align), su::killing_identity_residual(n));
  std::optional<std::vector<std::size_t>> witness;
  const auto eps_metric = su::to_eps_metric(n, spec);
  const auto coeffs = resolve_coefficients(rs, spec);
  const std::size_t dim = 2 * rs.num_positive();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const MVector x = MVector::unit(dim, i);
      const MVector y = MVector::unit(dim, j);
      const MVector closed = u_bilinear(rs, sc, coeffs, x, y);
      const MVector matrix = align.to_abstract_coords(
          su::u_sun(n, eps_metric, align.to_matrix_coords(x), align.to_matrix_coords(y)));
      const double r = max_abs_diff(closed, matrix);
      if (r > worst) {
        worst = r;
        witness = std::vector<std::size_t>{i, j};
      }
    }
  }
  return make_report("su-crosscheck", worst, tolerance, witness);
}

json basis_json(const RootSystem& rs, const MBasis& basis) {
  json out = json::array();
  for (const auto& e : basis.entries()) {
    out.push_back({{"root", rs.root(e.positive_index).coords()}, {"kind", e.kind == MKind::U ? "U" : "V"}});
  }
  return out;
}

json coefficients_json(const RootSystem& rs, const MetricSpec& spec) {
  const auto c = resolve_coefficients(rs, spec);
  json out = json::array();
  for (std::size_t p = 0; p < c.size(); ++p) out.push_back({{"root", rs.root(p).coords()}, {"c", c[p]}});
  return out;
}

}  // namespace

bool JobResult::all_passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

JobResult execute(const JobConfig& config) {
  if (!(config.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  JobResult result;
  result.root_system = build_root_system(parse_family(config.family), config.rank);
  const RootSystem& rs = result.root_system;
  const auto checks = expand_checks(config, rs);
  result.metric = metric_from_config(config, rs);

  const StructureConstants sc = chevalley_constants(rs);
  const KillingForm killing = killing_gram(rs, sc);
  const MetricGram gram = build_metric(rs, killing, result.metric);
  const MBracketTable table = m_bracket_table(rs, sc);
  result.tensor = assemble_tensor(rs, sc, result.metric);

  for (const auto& name : checks) {
    if (name == "oracle") {
      result.reports.push_back(check_oracle_equivalence(rs, sc, result.metric, config.tolerance));
    } else if (name == "torsion") {
      result.reports.push_back(check_torsion(result.tensor, table, config.tolerance));
    } else if (name == "metric") {
      result.reports.push_back(check_metric_compat(result.tensor, gram, config.tolerance));
    } else if (name == "lemma2") {
      result.reports.push_back(check_lemma2(rs));
    } else if (name == "su-crosscheck") {
      result.reports.push_back(su_crosscheck(rs, sc, killing, result.metric, config.tolerance));
    }
  }

  result.meta = {{"family", to_string(rs.family())},
                 {"rank", rs.rank()},
                 {"coefficients", coefficients_json(rs, result.metric)},
                 {"tolerance", config.tolerance},
                 {"seed", config.seed},
                 {"version", kVersion}};
  return result;
}

json report_to_json(const CheckReport& r) {
  json j = {{"check_name", r.check_name},
            {"max_residual", r.max_residual},
            {"threshold", r.threshold},
            {"passed", r.passed},
            {"witness", nullptr}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.check_name = j.at("check_name").get<std::string>();
  r.max_residual = j.at("max_residual").get<double>();
  r.threshold = j.at("threshold").get<double>();
  r.passed = j.at("passed").get<bool>();
  if (j.contains("witness") && !j.at("witness").is_null()) r.witness = j.at("witness").get<std::vector<std::size_t>>();
  return r;
}

json render_json(const JobResult& result) {
  const ConnectionTensor& t = result.tensor;
  json entries = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double v = t.at(i, j, k);
        if (std::abs(v) > kSparseCutoff) entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", v}});
      }
    }
  }
  json checks = json::array();
  for (const auto& r : result.reports) checks.push_back(report_to_json(r));
  return {{"basis", basis_json(result.root_system, t.basis())},
          {"tensor", std::move(entries)},
          {"checks", std::move(checks)},
          {"meta", result.meta}};
}

std::string render_csv(const ConnectionTensor& t) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "i,j,k,value\n";
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double v = t.at(i, j, k);
        if (std::abs(v) > kSparseCutoff) os << i << ',' << j << ',' << k << ',' << v << '\n';
      }
    }
  }
  return os.str();
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int run_job(const JobConfig& config, std::ostream& out, std::ostream& err) {
  JobResult result;
  try {
    result = execute(config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  }

  const json doc = render_json(result);
  if (config.format == OutputFormat::Json) {
    const std::string text = doc.dump(2) + "\n";
    if (config.output_path.empty()) {
      out << text;
    } else {
      write_text(config.output_path, text);
    }
  } else {
    const std::string csv = render_csv(result.tensor);
    json side = {{"checks", doc.at("checks")}, {"meta", doc.at("meta")}};
    if (config.output_path.empty()) {
      out << csv;
      err << side.dump(2) << '\n';
    } else {
      write_text(config.output_path, csv);
      write_text(config.output_path + ".checks.json", side.dump(2) + "\n");
    }
  }

  for (const auto& r : result.reports) print_report(err, r);
  return result.all_passed() ? 0 : 1;
}

void print_report(std::ostream& os, const CheckReport& r) {
  os << (r.passed ? "PASS " : "FAIL ") << r.check_name << " max_residual=" << r.max_residual
     << " threshold=" << r.threshold << '\n';
  if (!r.passed) os << report_to_json(r).dump() << '\n';
}

LoadedTensor read_tensor_json(const json& doc) {
  try {
    const json& meta = doc.at("meta");
    LoadedTensor loaded;
    loaded.root_system = build_root_system(parse_family(meta.at("family").get<std::string>()), meta.at("rank").get<int>());
    const RootSystem& rs = loaded.root_system;
    for (const auto& e : parse_coefficients(meta.at("coefficients"))) loaded.metric.set(Root(e.root), e.c);
    resolve_coefficients(rs, loaded.metric);
    loaded.tolerance = meta.at("tolerance").get<double>();

    MBasis basis = build_m_basis(rs);
    const std::size_t n = basis.dim();
    const json& labels = doc.at("basis");
    if (labels.size() != n) throw ConfigError("basis length does not match the root system");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = basis.entry(k);
      const bool same = labels[k].at("root").get<Coords>() == rs.root(e.positive_index).coords() &&
                        labels[k].at("kind").get<std::string>() == (e.kind == MKind::U ? "U" : "V");
      if (!same) throw ConfigError("basis entry " + std::to_string(k) + " does not match the documented order");
    }
    std::vector<double> data(n * n * n, 0.0);
    for (const auto& e : doc.at("tensor")) {
      const auto i = e.at("i").get<std::size_t>();
      const auto j = e.at("j").get<std::size_t>();
      const auto k = e.at("k").get<std::size_t>();
      if (i >= n || j >= n || k >= n) throw ConfigError("tensor index out of range");
      data[(i * n + j) * n + k] = e.at("value").get<double>();
    }
    loaded.tensor = ConnectionTensor(std::move(basis), std::move(data));
    return loaded;
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed tensor document: ") + ex.what());
  }
}

std::vector<CheckReport> verify_tensor(const LoadedTensor& loaded) {
  const RootSystem& rs = loaded.root_system;
  const StructureConstants sc = chevalley_constants(rs);
  const MetricGram gram = build_metric(rs, killing_gram(rs, sc), loaded.metric);
  return {check_torsion(loaded.tensor, m_bracket_table(rs, sc), loaded.tolerance),
          check_metric_compat(loaded.tensor, gram, loaded.tolerance)};
}

}  // namespace flagconn
