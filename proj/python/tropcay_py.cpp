#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "tropcay/commands.hpp"
#include "tropcay/errors.hpp"
#include "tropcay/io.hpp"
#include "tropcay/rational.hpp"

namespace py = pybind11;
using namespace tropcay;

namespace {

// Python ints, Fractions and decimal strings all print in a form the
// rational parser accepts.
RationalVector to_vector(const std::vector<py::object>& items) {
  RationalVector out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(parse_rational(py::str(item).cast<std::string>()));
  return out;
}

std::string json_out(const io::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_tropcay, m) {
  m.doc() = "Exact tropical arrangements, Cayley trick and Ricardian trade";

  auto base = py::register_exception<Error>(m, "TropcayError", PyExc_ValueError);
  auto schema = py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  auto unsupported = py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  (void)schema;
  (void)unsupported;
  (void)precondition;

  m.def("parse_rational", [](const std::string& text) { return to_string(parse_rational(text)); },
        "Canonical p/q string of an exact number");

  m.def("canonical_input", [](const std::string& text) { return json_out(io::parse_input(text).canonical()); });

  m.def(
      "arrangement",
      [](const std::string& text, bool poly, bool cells, bool dual) {
        return json_out(cli::cmd_arrangement(io::parse_input(text), {poly, cells, dual}));
      },
      py::arg("document"), py::arg("poly") = false, py::arg("cells") = false, py::arg("dual") = false);

  m.def(
      "covector",
      [](const std::string& text, const std::vector<py::object>& point) {
        return json_out(cli::cmd_covector(io::parse_input(text), to_vector(point)));
      },
      py::arg("document"), py::arg("point"));

  m.def("tconv", [](const std::string& text) { return json_out(cli::cmd_tconv(io::parse_input(text))); });
  m.def("mixed", [](const std::string& text) { return json_out(cli::cmd_mixed(io::parse_input(text))); });

  m.def(
      "ricardo",
      [](const std::string& text, std::optional<std::vector<py::object>> wages,
         std::optional<std::vector<py::object>> prices, bool equilibrate) {
        cli::RicardoOptions opts;
        if (wages) opts.wages = to_vector(*wages);
        if (prices) opts.prices = to_vector(*prices);
        opts.equilibrate = equilibrate;
        return json_out(cli::cmd_ricardo(io::parse_input(text), opts));
      },
      py::arg("document"), py::arg("wages") = py::none(), py::arg("prices") = py::none(),
      py::arg("equilibrate") = false);

  m.def(
      "plot",
      [](const std::string& text, const std::string& what) {
        if (what == "arrangement") return cli::cmd_plot(io::parse_input(text), cli::PlotKind::Arrangement);
        if (what == "mixed") return cli::cmd_plot(io::parse_input(text), cli::PlotKind::Mixed);
        throw SchemaError("unknown plot kind '" + what + "'");
      },
      py::arg("document"), py::arg("what") = "arrangement");
}
