// Copyright 2026 The asg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "asg/backend.hpp"
#include "asg/experiments.hpp"
#include "asg/rational.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace asg;
using namespace asg::experiments;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

py::object to_int(const BigInt& n) { return py::int_(py::str(n.get_str())); }

Rational from_python(const py::handle& v) {
    if (py::isinstance<py::int_>(v) || py::hasattr(v, "numerator")) return parse_rational(py::str(v).cast<std::string>());
    if (py::isinstance<py::float_>(v)) return Rational(v.cast<double>());
    return parse_rational(v.cast<std::string>());
}

Ordering parse_ordering(const std::string& s) {
    if (s == "degree") return Ordering::Degree;
    if (s == "norm") return Ordering::Norm;
    throw py::value_error("ordering must be 'degree' or 'norm'");
}

Weight parse_weight(const std::string& s) {
    if (s == "norm") return Weight::Norm;
    if (s == "phi") return Weight::Phi;
    throw py::value_error("weight must be 'norm' or 'phi'");
}

py::dict report_dict(const ExperimentReport& r) {
    py::list rows;
    for (const auto& row : r.rows) {
        py::dict d;
        d["cutoff"] = row.cutoff;
        d["sum"] = row.sum ? to_fraction(*row.sum) : py::none();
        d["sum_float"] = row.sum_float;
        d["abs_error"] = row.abs_error;
        py::list coeffs;
        for (const auto& c : row.coefficients) coeffs.append(to_int(c));
        d["coefficients"] = coeffs;
        rows.append(d);
    }
    py::dict out;
    out["backend"] = r.backend;
    out["prime_set"] = r.prime_set;
    out["arith"] = r.arith;
    out["weight"] = to_string(r.weight);
    out["target"] = to_fraction(r.target);
    out["target_known"] = r.target_known;
    out["exact"] = r.exact;
    out["rows"] = rows;
    std::ostringstream csv;
    r.write_csv(csv);
    out["csv"] = csv.str();
    return out;
}

py::dict fuzz_dict(const FuzzReport& f) {
    py::dict d;
    d["trials"] = f.trials;
    d["max_abs_residual"] = to_fraction(f.max_abs_residual);
    d["failure"] = f.failure ? py::cast(*f.failure) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_asg, m) {
    m.doc() = "Arithmetical semigroups and Alladi-type partial sums";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::out_of_range& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Backend>(m, "Backend")
        .def_static("poly", [](unsigned q, unsigned max_degree, const std::string& ordering) {
            return Backend::poly(q, max_degree, parse_ordering(ordering));
        }, py::arg("q"), py::arg("max_degree"), py::arg("ordering") = "degree")
        .def_static("integers", &Backend::integers, py::arg("limit"))
        .def_static("gaussian", &Backend::gaussian, py::arg("limit"))
        .def_static("graph", [](const std::string& name, std::size_t max_len, unsigned workers) {
            return Backend::graph(graph::Graph::named(name), max_len, workers);
        }, py::arg("name"), py::arg("max_len"), py::arg("workers") = 1)
        .def_static("graph_from_edges", [](const std::string& edges, std::size_t max_len, const std::string& name) {
            return Backend::graph(graph::Graph::parse_edge_list(edges, name), max_len);
        }, py::arg("edges"), py::arg("max_len"), py::arg("name") = "custom")
        .def_property_readonly("id", &Backend::id)
        .def_property_readonly("horizon", [](const Backend& b) { return b.semigroup().horizon(); })
        .def_property_readonly("prime_count", [](const Backend& b) { return b.semigroup().prime_count(); })
        .def("prime_labels", [](const Backend& b, std::uint64_t max_key) {
            const auto& sg = b.semigroup();
            std::vector<std::string> out;
            for (PrimeId id = 0; id < sg.prime_count() && sg.key(id) <= max_key; ++id)
                out.push_back(sg.label(Element::prime(id)));
            return out;
        }, py::arg("max_key"))
        .def("density", [](const Backend& b, const std::string& set) -> py::object {
            auto s = b.prime_set(set);
            return s.known_density() ? to_fraction(*s.known_density()) : py::none();
        }, py::arg("set"))
        .def("norm", [](const Backend& b, const std::string& element) {
            return to_fraction(b.semigroup().norm(b.parse_element(element)));
        }, py::arg("element"))
        .def("__repr__", [](const Backend& b) { return "<Backend " + b.id() + ">"; });

    m.def("named_graphs", &graph::Graph::named_graphs);

    m.def("alladi_partial_sums",
          [](const Backend& b, std::vector<std::uint64_t> cutoffs, const std::string& set, py::object alpha,
             const std::string& weight, unsigned workers, std::optional<bool> exact) {
              AlladiRequest req;
              req.set = b.prime_set(set);
              req.arith = alpha.is_none() ? ArithSpec::identity() : ArithSpec::power_decay(from_python(alpha));
              req.weight = parse_weight(weight);
              req.cutoffs = std::move(cutoffs);
              req.workers = workers;
              req.exact = exact;
              ExperimentReport r;
              {
                  py::gil_scoped_release release;
                  r = alladi_partial_sums(b, req);
              }
              return report_dict(r);
          },
          py::arg("backend"), py::arg("cutoffs"), py::arg("set") = "all", py::arg("alpha") = py::none(),
          py::arg("weight") = "norm", py::arg("workers") = 1, py::arg("exact") = py::none());

    m.def("duality_fuzz",
          [](const Backend& b, std::uint64_t max_key, std::size_t triples, std::uint64_t seed, unsigned workers) {
              FuzzReport f;
              {
                  py::gil_scoped_release release;
                  f = duality_fuzz(b.semigroup(), max_key, triples, seed, workers);
              }
              return fuzz_dict(f);
          },
          py::arg("backend"), py::arg("max_key"), py::arg("triples") = 1000, py::arg("seed") = 1,
          py::arg("workers") = 1);

    m.def("b_transform_fuzz",
          [](const Backend& b, std::uint64_t max_key, std::size_t trials, std::uint64_t seed, unsigned workers) {
              FuzzReport f;
              {
                  py::gil_scoped_release release;
                  f = b_transform_fuzz(b.shared_semigroup(), max_key, trials, seed, workers);
              }
              return fuzz_dict(f);
          },
          py::arg("backend"), py::arg("max_key"), py::arg("trials") = 1000, py::arg("seed") = 1,
          py::arg("workers") = 1);

    m.def("density_estimate",
          [](const Backend& b, const std::string& set, const std::vector<std::uint64_t>& cutoffs) {
              py::list out;
              for (const auto& row : density_estimate(b.semigroup(), b.prime_set(set), cutoffs))
                  out.append(py::make_tuple(row.cutoff, to_int(row.in_set), to_int(row.total),
                                            row.ratio ? to_fraction(*row.ratio) : py::none()));
              return out;
          },
          py::arg("backend"), py::arg("set"), py::arg("cutoffs"));

    m.def("partial_sum_statistics",
          [](const Backend& b, std::uint64_t n, std::uint64_t m) {
              auto s = partial_sum_statistics(b.semigroup(), n, m);
              py::dict d;
              d["C"] = to_int(s.C);
              d["M"] = to_int(s.M);
              d["R"] = s.R ? to_fraction(*s.R) : py::none();
              d["Phi"] = to_int(s.Phi);
              return d;
          },
          py::arg("backend"), py::arg("n"), py::arg("m") = 0);
}
