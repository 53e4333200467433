#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grestrict/cli.hpp"
#include "grestrict/errors.hpp"
#include "grestrict/group_spec.hpp"

namespace py = pybind11;
using namespace grestrict;

namespace {

py::tuple result(const cli::Output& o) { return py::make_tuple(o.exit_code, o.out, o.err); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph-restrictiveness of intransitive permutation groups";
  m.attr("__version__") = GRESTRICT_VERSION;

  m.def("classify", [](const std::string& spec) { return result(cli::cmd_classify(spec, true)); },
        py::arg("spec"));

  m.def(
      "construct",
      [](const std::string& spec, std::size_t n, std::uint64_t seed,
         std::optional<std::string> out_dir, std::optional<std::uint64_t> max_vertices) {
        cli::ConstructOptions o;
        o.n = n;
        o.seed = seed;
        o.json = true;
        o.caps = cli::caps_from_environment();
        if (max_vertices) o.caps.max_vertices = *max_vertices;
        if (out_dir) o.out_dir = *out_dir;
        cli::Output out;
        {
          py::gil_scoped_release release;
          out = cli::cmd_construct(spec, o);
        }
        return result(out);
      },
      py::arg("spec"), py::arg("n"), py::arg("seed") = 0, py::arg("out_dir") = py::none(),
      py::arg("max_vertices") = py::none());

  m.def(
      "verify",
      [](const std::string& graph_path, const std::string& graph_text, const std::string& group,
         const std::string& local) {
        return result(cli::cmd_verify(graph_path, graph_text, group, local, true));
      },
      py::arg("graph_path"), py::arg("graph_text"), py::arg("group"), py::arg("local"));

  m.def(
      "report",
      [](const std::string& spec, std::size_t n_from, std::size_t n_to, std::uint64_t seed) {
        cli::ReportOptions o;
        o.n_from = n_from;
        o.n_to = n_to;
        o.seed = seed;
        o.json = true;
        o.caps = cli::caps_from_environment();
        return result(cli::cmd_report(spec, o));
      },
      py::arg("spec"), py::arg("n_from"), py::arg("n_to"), py::arg("seed") = 0);

  m.def(
      "group_order",
      [](const std::string& spec) { return parse_group_spec(spec).order().str(); },
      py::arg("spec"));

  py::register_exception<Error>(m, "Error");
}
