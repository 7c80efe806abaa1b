// Python bindings: root data, the connection tensor as a numpy array, and the checks.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagconn/connection.hpp"
#include "flagconn/errors.hpp"
#include "flagconn/job.hpp"
#include "flagconn/oracle.hpp"
#include "flagconn/su_realization.hpp"

namespace py = pybind11;
using namespace flagconn;

namespace {

struct System {
  RootSystem rs;
  StructureConstants sc;
  KillingForm killing;
  MBracketTable table;

  System(const std::string& family, int rank)
      : rs(build_root_system(parse_family(family), rank)),
        sc(chevalley_constants(rs)),
        killing(killing_gram(rs, sc)),
        table(m_bracket_table(rs, sc)) {}

  std::size_t dim() const { return table.dim(); }
};

// None / "normal" -> normal metric, "random" -> seeded draw, otherwise a
// mapping {root tuple: c} or a sequence of c in positive-root order.
MetricSpec to_spec(const System& s, const py::object& coeffs, std::uint64_t seed) {
  if (coeffs.is_none()) return MetricSpec::normal(s.rs);
  if (py::isinstance<py::str>(coeffs)) {
    const auto token = coeffs.cast<std::string>();
    if (token == "normal") return MetricSpec::normal(s.rs);
    if (token == "random") return MetricSpec::random(s.rs, seed);
    throw ConfigError("coefficients must be \"normal\", \"random\", a dict or a sequence, got \"" + token + "\"");
  }
  MetricSpec spec;
  if (py::isinstance<py::dict>(coeffs)) {
    for (auto [k, v] : coeffs.cast<py::dict>()) spec.set(Root(k.cast<Coords>()), v.cast<double>());
  } else {
    const auto values = coeffs.cast<std::vector<double>>();
    if (values.size() != s.rs.num_positive()) {
      throw ConfigError("expected " + std::to_string(s.rs.num_positive()) + " coefficients, got " +
                        std::to_string(values.size()));
    }
    for (std::size_t p = 0; p < values.size(); ++p) spec.set(s.rs.root(p), values[p]);
  }
  return spec;
}

MVector to_mvector(const System& s, const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 1 || std::size_t(a.shape(0)) != s.dim()) {
    throw DimensionError("expected a vector of length " + std::to_string(s.dim()));
  }
  return MVector(std::vector<double>(a.data(), a.data() + a.shape(0)));
}

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::array_t<double> to_array(const MVector& v) { return to_array(v.coeffs()); }

py::array_t<double> cube(std::size_t n, const std::vector<double>& data) {
  py::array_t<double> out({n, n, n});
  std::copy(data.begin(), data.end(), out.mutable_data());
  return out;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["check_name"] = r.check_name;
  d["max_residual"] = r.max_residual;
  d["threshold"] = r.threshold;
  d["passed"] = r.passed;
  d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(flagconn, m) {
  m.doc() = "Levi-Civita connection of flag manifolds G/T for classical G";
  m.attr("__version__") = kVersion;

  py::register_exception<RepresentationError>(m, "RepresentationError", PyExc_RuntimeError);

  m.def(
      "positive_roots",
      [](const std::string& family, int rank) {
        const auto rs = build_root_system(parse_family(family), rank);
        std::vector<Coords> out;
        for (const auto& r : rs.positive_roots()) out.push_back(r.coords());
        return out;
      },
      py::arg("family"), py::arg("rank"), "Positive roots in simple-root coordinates, ascending lexicographic order.");

  m.def(
      "structure_constant",
      [](const std::string& family, int rank, const Coords& alpha, const Coords& beta) {
        const System s(family, rank);
        return structure_constant(s.rs, s.sc, Root(alpha), Root(beta));
      },
      py::arg("family"), py::arg("rank"), py::arg("alpha"), py::arg("beta"));

  m.def(
      "basis_labels",
      [](const std::string& family, int rank) {
        const System s(family, rank);
        std::vector<std::pair<Coords, std::string>> out;
        const MBasis basis = build_m_basis(s.rs);
        for (const auto& e : basis.entries())
          out.emplace_back(s.rs.root(e.positive_index).coords(), e.kind == MKind::U ? "U" : "V");
        return out;
      },
      py::arg("family"), py::arg("rank"), "(root, 'U' | 'V') for each basis vector of m.");

  m.def(
      "bracket_table",
      [](const std::string& family, int rank) {
        const System s(family, rank);
        const std::size_t n = s.dim();
        std::vector<double> data(n * n * n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) data[(i * n + j) * n + k] = s.table(i, j, k);
        return cube(n, data);
      },
      py::arg("family"), py::arg("rank"), "T[i, j, k] = k-th coordinate of [e_i, e_j]_m.");

  m.def(
      "metric_diagonal",
      [](const std::string& family, int rank, const py::object& coefficients, std::uint64_t seed) {
        const System s(family, rank);
        const auto g = build_metric(s.rs, s.killing, to_spec(s, coefficients, seed));
        return to_array(g.diagonal);
      },
      py::arg("family"), py::arg("rank"), py::arg("coefficients") = py::none(), py::arg("seed") = 0);

  m.def(
      "connection_tensor",
      [](const std::string& family, int rank, const py::object& coefficients, std::uint64_t seed) {
        const System s(family, rank);
        const auto t = assemble_tensor(s.rs, s.sc, to_spec(s, coefficients, seed));
        return cube(t.dim(), t.data());
      },
      py::arg("family"), py::arg("rank"), py::arg("coefficients") = py::none(), py::arg("seed") = 0,
      "Gamma[i, j, k] with nabla_{e_i} e_j = sum_k Gamma[i, j, k] e_k.");

  m.def(
      "u",
      [](const std::string& family, int rank, const py::object& coefficients, py::array_t<double> x,
         py::array_t<double> y, std::uint64_t seed) {
        const System s(family, rank);
        return to_array(u_bilinear(s.rs, s.sc, to_spec(s, coefficients, seed), to_mvector(s, x), to_mvector(s, y)));
      },
      py::arg("family"), py::arg("rank"), py::arg("coefficients"), py::arg("x"), py::arg("y"), py::arg("seed") = 0,
      "U(x, y) from the closed form.");

  m.def(
      "u_oracle",
      [](const std::string& family, int rank, const py::object& coefficients, py::array_t<double> x,
         py::array_t<double> y, std::uint64_t seed) {
        const System s(family, rank);
        const auto g = build_metric(s.rs, s.killing, to_spec(s, coefficients, seed));
        return to_array(u_oracle(s.table, g, to_mvector(s, x), to_mvector(s, y)));
      },
      py::arg("family"), py::arg("rank"), py::arg("coefficients"), py::arg("x"), py::arg("y"), py::arg("seed") = 0,
      "U(x, y) solved from the defining identity, one basis vector at a time.");

  m.def(
      "u_su3",
      [](double c1, double c2, double c3, py::array_t<double> x, py::array_t<double> y) {
        const System s("A", 2);
        return to_array(su::u_su3(c1, c2, c3, to_mvector(s, x), to_mvector(s, y)));
      },
      py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("x"), py::arg("y"),
      "SU(3) formula in matrix-basis coordinates (labels eps1-eps2, eps1-eps3, eps2-eps3).");

  m.def("su3_coefficients", &su::su3_coefficients, py::arg("c1"), py::arg("c2"), py::arg("c3"));

  m.def(
      "run_checks",
      [](const std::string& family, int rank, const py::object& coefficients, std::vector<std::string> checks,
         double tolerance, std::uint64_t seed) {
        const System s(family, rank);
        JobConfig cfg;
        cfg.family = family;
        cfg.rank = rank;
        cfg.source = CoefficientSource::Explicit;
        const MetricSpec spec = to_spec(s, coefficients, seed);
        for (const auto& [root, c] : spec.entries()) cfg.coefficients.push_back({root, c});
        cfg.checks = std::move(checks);
        cfg.tolerance = tolerance;
        cfg.seed = seed;
        py::list out;
        const JobResult result = execute(cfg);
        for (const auto& r : result.reports) out.append(report_dict(r));
        return out;
      },
      py::arg("family"), py::arg("rank"), py::arg("coefficients") = py::none(),
      py::arg("checks") = std::vector<std::string>{"all"}, py::arg("tolerance") = kDefaultTolerance,
      py::arg("seed") = 0);
}
