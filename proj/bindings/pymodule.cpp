#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>
#include <string>
#include <vector>

#include "amf/enumeration.hpp"
#include "amf/lattice.hpp"

namespace py = pybind11;
using namespace amf;

namespace {

// BigCount -> arbitrary-precision python int, via its decimal form.
py::int_ to_py_int(const BigCount& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::vector<int> mask_to_list(Mask m) {
  std::vector<int> out;
  for (int e = 1; m; ++e, m >>= 1)
    if (m & 1) out.push_back(e);
  return out;
}

EnumOptions options_for(int jobs) {
  EnumOptions opts;
  opts.jobs = jobs;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_amf, m) {
  m.doc() = "Interval algebra of antimonotonic boolean functions";

  py::class_<AntiChain>(m, "AntiChain")
      .def(py::init([](const std::string& text, int n, bool normalize) {
             return parse(text, GroundSet::prefix(n), normalize);
           }),
           py::arg("text"), py::arg("n"), py::arg("normalize") = false)
      .def_static("empty", [](int n) { return AntiChain::empty(GroundSet::prefix(n)); },
                  py::arg("n"))
      .def_static("unit", [](int n) { return AntiChain::unit(GroundSet::prefix(n)); },
                  py::arg("n"))
      .def("__str__", [](const AntiChain& a) { return format(a); })
      .def("__repr__",
           [](const AntiChain& a) {
             return "AntiChain('" + format(a) + "', n=" +
                    std::to_string(std::bit_width(a.ground().mask())) + ")";
           })
      .def("__eq__", [](const AntiChain& a, const AntiChain& b) { return a == b; },
           py::is_operator())
      .def("__le__", [](const AntiChain& a, const AntiChain& b) { return leq(a, b); },
           py::is_operator())
      .def("__hash__", [](const AntiChain& a) { return py::hash(py::str(format(a))); })
      .def("is_empty", &AntiChain::is_empty)
      .def("span", [](const AntiChain& a) { return mask_to_list(span(a)); })
      .def("rank", [](const AntiChain& a) { return rank_inclusion_exclusion(a); })
      .def("meet", [](const AntiChain& a, const AntiChain& b) { return meet(a, b); })
      .def("join", [](const AntiChain& a, const AntiChain& b) { return join(a, b); })
      .def("product",
           [](const AntiChain& a, const AntiChain& b) { return external_product(a, b); })
      .def("project", [](const AntiChain& a, const std::vector<int>& part) {
        return project(a, GroundSet::of(part).mask());
      });

  m.def("leq", [](const AntiChain& a, const AntiChain& b) { return leq(a, b); });
  m.def("distance", [](const AntiChain& a, const AntiChain& b) { return distance(a, b); });

  m.def(
      "count_interval",
      [](const AntiChain& lower, const AntiChain& upper, int jobs) {
        return to_py_int(count_interval(lower, upper, options_for(jobs)));
      },
      py::arg("lower"), py::arg("upper"), py::arg("jobs") = 1);
  m.def(
      "interval_members",
      [](const AntiChain& lower, const AntiChain& upper) {
        return interval_members(lower, upper);
      },
      py::arg("lower"), py::arg("upper"));
  m.def(
      "dedekind",
      [](int n, const std::string& method, int jobs) {
        EnumOptions opts = options_for(jobs);
        if (method == "span") return to_py_int(dedekind_span_expansion(n, opts));
        if (method == "one-element") return to_py_int(dedekind_one_element(n, opts));
        if (method == "oracle")
          return to_py_int(BigCount(oracle_enumerate(GroundSet::prefix(n)).size()));
        throw std::invalid_argument("method must be span, one-element, or oracle");
      },
      py::arg("n"), py::arg("method") = "span", py::arg("jobs") = 1);
  m.def(
      "upsilon_count",
      [](int n, int n1, int jobs) { return to_py_int(upsilon_count(n, n1, options_for(jobs))); },
      py::arg("n"), py::arg("n1"), py::arg("jobs") = 1);
}
