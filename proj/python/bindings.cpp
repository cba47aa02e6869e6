/*
   Copyright 2026 The psibounds Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <psibounds/bounds.hpp>
#include <psibounds/errors.hpp>
#include <psibounds/oracle.hpp>
#include <psibounds/polygamma.hpp>
#include <psibounds/verifier.hpp>

namespace py = pybind11;

namespace {

py::tuple interval_tuple(const psib::Interval& iv) {
  return py::make_tuple(iv.lo, iv.hi, iv.lo_strict, iv.hi_strict);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Digamma-family kernels and sharp psi / harmonic-number enclosures";

  py::register_exception<psib::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<psib::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<psib::OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<psib::ResourceError>(m, "ResourceError", PyExc_MemoryError);

  m.attr("EULER_GAMMA") = psib::kEulerGamma;

  m.def("digamma", [](double x) { return psib::digamma(x); }, py::arg("x"));
  m.def("trigamma", [](double x) { return psib::trigamma(x); }, py::arg("x"));
  m.def("tetragamma", [](double x) { return psib::tetragamma(x); }, py::arg("x"));
  m.def("phi", [](double x) { return psib::phi(x); }, py::arg("x"));
  m.def("f", [](double x) { return psib::f_func(x); }, py::arg("x"));
  m.def("fprime", [](double x) { return psib::f_prime(x); }, py::arg("x"));
  m.def("positivity", [](double x) { return psib::positivity_expr(x); }, py::arg("x"));
  m.def("log_expm1_recip", [](double x) { return psib::log_expm1_recip(x); }, py::arg("x"));

  m.def("psi_enclosure", [](double x) { return interval_tuple(psib::psi_enclosure(x)); },
        py::arg("x"), "(lo, hi, lo_strict, hi_strict)");
  m.def("harmonic_enclosure",
        [](std::int64_t n) { return interval_tuple(psib::harmonic_enclosure(n)); }, py::arg("n"),
        "(lo, hi, lo_strict, hi_strict)");
  m.def("harmonic_exact",
        [](std::int64_t n) {
          const auto h = psib::harmonic_exact(n);
          return py::make_tuple(py::int_(py::str(h.numerator().get_str())),
                                py::int_(py::str(h.denominator().get_str())));
        },
        py::arg("n"), "(numerator, denominator) of H_n in lowest terms");

  py::class_<psib::PropertyReport>(m, "PropertyReport")
      .def_readonly("property_name", &psib::PropertyReport::property_name)
      .def_readonly("points_checked", &psib::PropertyReport::points_checked)
      .def_readonly("passed", &psib::PropertyReport::passed)
      .def_readonly("worst_margin", &psib::PropertyReport::worst_margin)
      .def_readonly("violations", &psib::PropertyReport::violations)
      .def_readonly("error", &psib::PropertyReport::error)
      .def("__repr__", &psib::format_report_line);

  m.def(
      "verify",
      [](double start, double stop, std::size_t points, std::uint64_t n_max, unsigned threads) {
        psib::GridSpec grid;
        grid.start = start;
        grid.stop = stop;
        grid.count = points;
        auto config = psib::VerifierConfig::with_grid(grid);
        config.n_max = n_max;
        config.eval.threads = threads;
        py::gil_scoped_release release;
        return psib::run_all(config);
      },
      py::arg("grid_start") = 1e-3, py::arg("grid_stop") = 1e3, py::arg("points") = 100'000,
      py::arg("n_max") = 10'000, py::arg("threads") = 1);
}
