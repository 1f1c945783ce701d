#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <sstream>

#include "chipfire/chain.hpp"
#include "chipfire/chip_firing.hpp"
#include "chipfire/paths.hpp"
#include "chipfire/pencil.hpp"
#include "chipfire/symmetry.hpp"
#include "chipfire/verify.hpp"

namespace py = pybind11;
using namespace chipfire;

namespace {

SuiteOptions make_suite_options(const std::string& granularity,
                                const std::optional<std::string>& ell, int jobs,
                                double max_seconds, bool allow_large) {
  SuiteOptions opts;
  opts.granularity = Rational::parse(granularity);
  if (ell) opts.ell = Rational::parse(*ell);
  opts.policy.jobs = jobs;
  if (max_seconds > 0.0) {
    opts.policy.deadline = std::chrono::steady_clock::now() +
                           std::chrono::milliseconds(static_cast<int64_t>(max_seconds * 1000.0));
  }
  opts.allow_large = allow_large;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_chipfire, m) {
  m.doc() = "Chip-firing and linear pencils on metric graphs (chains of loops)";

  py::register_exception<Error>(m, "ChipfireError");

  py::class_<Rational>(m, "Rational")
      .def(py::init<int64_t>(), py::arg("num"))
      .def(py::init<int64_t, int64_t>(), py::arg("num"), py::arg("den"))
      .def(py::init([](const std::string& s) { return Rational::parse(s); }))
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def("__str__", [](const Rational& r) { return r.str(); })
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def("__float__", &Rational::to_double);
  py::implicitly_convertible<py::int_, Rational>();
  py::implicitly_convertible<py::str, Rational>();

  py::class_<MetricPoint>(m, "MetricPoint")
      .def_readonly("vertex", &MetricPoint::vertex)
      .def_readonly("edge", &MetricPoint::edge)
      .def_readonly("offset", &MetricPoint::offset)
      .def_property_readonly("is_vertex", &MetricPoint::is_vertex)
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::class_<ModelGraph>(m, "ModelGraph")
      .def(py::init<>())
      .def("add_vertex", &ModelGraph::add_vertex)
      .def("add_edge",
           py::overload_cast<const std::string&, const std::string&, const std::string&,
                             const Rational&>(&ModelGraph::add_edge),
           py::arg("name"), py::arg("tail"), py::arg("head"), py::arg("length"))
      .def_property_readonly("vertex_count", &ModelGraph::vertex_count)
      .def_property_readonly("edge_count", &ModelGraph::edge_count)
      .def("vertex_name", &ModelGraph::vertex_name)
      .def("degree", &ModelGraph::degree)
      .def("genus", &ModelGraph::genus)
      .def("is_connected", &ModelGraph::is_connected)
      .def("length_gcd", &ModelGraph::length_gcd)
      .def("vertex_point",
           [](const ModelGraph& g, const std::string& name) {
             auto v = g.find_vertex(name);
             if (!v) fail(errc::invalid_parameter, "unknown vertex: " + name);
             return MetricPoint::at_vertex(*v);
           })
      .def("edge_point",
           [](const ModelGraph& g, const std::string& name, const Rational& offset) {
             auto e = g.find_edge(name);
             if (!e) fail(errc::invalid_parameter, "unknown edge: " + name);
             return g.point_on_edge(*e, offset);
           })
      .def("point_name", &ModelGraph::point_name)
      .def("to_text", &ModelGraph::to_text)
      .def_static("parse", [](const std::string& text) { return ModelGraph::parse(text); });

  py::class_<Divisor>(m, "Divisor")
      .def(py::init<>())
      .def("add", &Divisor::add, py::arg("point"), py::arg("count") = 1)
      .def("coefficient", &Divisor::coefficient)
      .def_property_readonly("degree", &Divisor::degree)
      .def_property_readonly("is_effective", &Divisor::is_effective)
      .def("chips",
           [](const Divisor& d) {
             std::vector<std::pair<MetricPoint, int64_t>> out(d.begin(), d.end());
             return out;
           })
      .def("to_text", &Divisor::to_text)
      .def_static("parse", py::overload_cast<const ModelGraph&, const std::string&>(
                               &Divisor::parse))
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__rmul__", [](const Divisor& d, int64_t k) { return k * d; });

  py::class_<RefinedGraph>(m, "RefinedGraph")
      .def_property_readonly("vertex_count", &RefinedGraph::vertex_count)
      .def_property_readonly("granularity", &RefinedGraph::granularity)
      .def_property_readonly("grid", &RefinedGraph::grid)
      .def("model_text", [](const RefinedGraph& rg) { return rg.model().to_text(); });

  m.def("refine", &refine, py::arg("graph"), py::arg("granularity"));
  m.def("canonical_divisor", &canonical_divisor);
  m.def("reduce", &reduce, py::arg("refined"), py::arg("divisor"), py::arg("base"));
  m.def("is_equivalent", &is_equivalent, py::arg("refined"), py::arg("a"), py::arg("b"));
  m.def(
      "emptiness_witness",
      [](const RefinedGraph& rg, const Divisor& d, const Divisor& e) {
        EmptinessResult r = emptiness_witness(rg, d, e);
        return py::make_tuple(r.empty, r.reduced);
      },
      py::arg("refined"), py::arg("divisor"), py::arg("e"));
  m.def(
      "rank",
      [](const RefinedGraph& rg, const Divisor& d, int jobs) {
        ExecPolicy policy;
        policy.jobs = jobs;
        RankResult r = rank(rg, d, policy);
        return py::make_tuple(r.rank, r.witness);
      },
      py::arg("refined"), py::arg("divisor"), py::arg("jobs") = 1);

  py::class_<ChainOfLoops>(m, "ChainOfLoops")
      .def_readonly("graph", &ChainOfLoops::graph)
      .def_readonly("g", &ChainOfLoops::g)
      .def_readonly("ell", &ChainOfLoops::ell)
      .def_readonly("m", &ChainOfLoops::m)
      .def_readonly("genericity_warning", &ChainOfLoops::genericity_warning)
      .def("marked_point", &ChainOfLoops::marked_point)
      .def("prefix_subgraph", &ChainOfLoops::prefix_subgraph);
  m.def(
      "build_chain_of_loops",
      [](int g, const std::optional<Rational>& ell, const Rational& mm) {
        return build_chain_of_loops(g, ell, mm);
      },
      py::arg("g"), py::arg("ell") = std::nullopt, py::arg("m") = Rational(1));

  m.def("enumerate_paths", &enumerate_paths);
  m.def("enumerate_symmetric_paths", &enumerate_symmetric_paths);
  m.def("reverse_path", &reverse_path);
  m.def("is_palindrome", &is_palindrome);
  m.def("catalan_count", &catalan_count);
  m.def("symmetric_count_closed_form", &symmetric_count_closed_form);
  m.def("symmetric_count_by_midheight", &symmetric_count_by_midheight, py::arg("d"), py::arg("m"));
  m.def("binomial", &binomial);

  py::class_<PencilDivisor>(m, "PencilDivisor")
      .def_readonly("path", &PencilDivisor::path)
      .def_readonly("divisor", &PencilDivisor::divisor)
      .def_readonly("ascent_points", &PencilDivisor::ascent_points);
  m.def(
      "path_to_divisor",
      [](const ChainOfLoops& chain, const LatticePath& p, const Rational& granularity) {
        return path_to_divisor(chain, p, granularity);
      },
      py::arg("chain"), py::arg("path"), py::arg("granularity") = Rational(1));

  py::class_<Involution>(m, "Involution")
      .def(py::init<const ChainOfLoops&>())
      .def("map_point", &Involution::map_point)
      .def("map_divisor", &Involution::map_divisor);

  py::class_<PLFunction>(m, "PLFunction").def_readonly("values", &PLFunction::values);
  m.def("build_f_function", &build_f_function, py::arg("chain"), py::arg("refined"),
        py::arg("path"));
  m.def("div_of_pl_function", &div_of_pl_function, py::arg("refined"), py::arg("f"));
  m.def("chip_transport", &chip_transport, py::arg("chain"), py::arg("path"),
        py::arg("granularity") = Rational(1));

  py::class_<CaseResult>(m, "CaseResult")
      .def_readonly("id", &CaseResult::id)
      .def_readonly("pass_", &CaseResult::pass)
      .def_readonly("detail", &CaseResult::detail);
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("suite", &VerificationReport::suite)
      .def_readonly("cases", &VerificationReport::cases)
      .def_readonly("aborted", &VerificationReport::aborted)
      .def("failures", &VerificationReport::failures)
      .def("ok", &VerificationReport::ok)
      .def("to_text", &VerificationReport::to_text, py::arg("tsv") = false);

  m.def(
      "verify_prop2",
      [](int g, const std::string& granularity, const std::optional<std::string>& ell, int jobs,
         double max_seconds, bool allow_large) {
        return verify_prop2(g, make_suite_options(granularity, ell, jobs, max_seconds, allow_large));
      },
      py::arg("g"), py::arg("granularity") = "1", py::arg("ell") = std::nullopt,
      py::arg("jobs") = 1, py::arg("max_seconds") = 0.0, py::arg("allow_large") = false);
  m.def(
      "verify_sigma",
      [](int g, const std::string& granularity, const std::optional<std::string>& ell, int jobs,
         double max_seconds, bool allow_large) {
        return verify_sigma(g, make_suite_options(granularity, ell, jobs, max_seconds, allow_large));
      },
      py::arg("g"), py::arg("granularity") = "1", py::arg("ell") = std::nullopt,
      py::arg("jobs") = 1, py::arg("max_seconds") = 0.0, py::arg("allow_large") = false);
  m.def(
      "verify_bijection",
      [](int g, const std::string& granularity, const std::optional<std::string>& ell, int jobs,
         double max_seconds, bool allow_large) {
        return verify_bijection(g,
                                make_suite_options(granularity, ell, jobs, max_seconds, allow_large));
      },
      py::arg("g"), py::arg("granularity") = "1", py::arg("ell") = std::nullopt,
      py::arg("jobs") = 1, py::arg("max_seconds") = 0.0, py::arg("allow_large") = false);
  m.def(
      "verify_brill_noether",
      [](int g, int r, int d, const std::string& granularity, const std::optional<std::string>& ell,
         int jobs, double max_seconds, bool allow_large) {
        return verify_brill_noether(
            g, r, d, make_suite_options(granularity, ell, jobs, max_seconds, allow_large));
      },
      py::arg("g"), py::arg("r"), py::arg("d"), py::arg("granularity") = "1",
      py::arg("ell") = std::nullopt, py::arg("jobs") = 1, py::arg("max_seconds") = 0.0,
      py::arg("allow_large") = false);
  m.def("brill_noether_rho", &brill_noether_rho);

  py::class_<TableRow>(m, "TableRow")
      .def_readonly("d", &TableRow::d)
      .def_readonly("g", &TableRow::g)
      .def_readonly("lambda_", &TableRow::lambda)
      .def_readonly("lambda_prime", &TableRow::lambda_prime);
  m.def("pencil_table", &pencil_table, py::arg("d_min") = 2, py::arg("d_max") = 10);
  m.def("format_table", &format_table, py::arg("rows"), py::arg("tsv") = false);

#ifdef CHIPFIRE_VERSION
  m.attr("__version__") = CHIPFIRE_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
