#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nsg/classify.hpp"
#include "nsg/cli.hpp"
#include "nsg/constructions.hpp"
#include "nsg/decompose.hpp"
#include "nsg/ordinary.hpp"
#include "nsg/sweep.hpp"

namespace py = pybind11;
using nsg::NumericalSemigroup;

namespace {

py::dict check_dict(const nsg::DecompositionCheck& c) {
  py::dict d;
  d["verdict"] = std::string(nsg::to_string(c.verdict));
  d["reason"] = c.reason;
  d["miss_cover"] = c.miss_cover;
  d["miss_irredundant"] = c.miss_irredundant;
  d["sg_union"] = c.sg_union;
  return d;
}

py::dict choice_dict(const nsg::M6Choice& c) {
  py::dict d;
  d["a2_greater"] = c.a2_greater;
  d["prefer_first"] = c.prefer_first;
  d["prefer_fourth"] = c.prefer_fourth;
  d["tie_dropped_fourth"] = c.tie_dropped_fourth;
  d["tie_dropped_first"] = c.tie_dropped_first;
  d["b1"] = c.b1;
  d["b3"] = c.b3;
  d["b4"] = c.b4;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical semigroups and their decompositions into irreducibles";

  static py::exception<nsg::Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nsg::Error& e) {
      const auto type = py::reinterpret_borrow<py::object>(error_type.ptr());
      py::object instance = type(e.what());
      instance.attr("kind") = std::string(nsg::to_string(e.kind()));
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init<>(), "The semigroup N of all non-negative integers")
      .def_static("from_generators", [](const std::vector<std::int64_t>& g) { return NumericalSemigroup::from_generators(g); },
                  py::arg("generators"))
      .def_static("from_gaps", [](const std::vector<std::int64_t>& g) { return NumericalSemigroup::from_gaps(g); },
                  py::arg("gaps"))
      .def_static("from_apery", [](std::int64_t n, const std::vector<std::int64_t>& w) {
        return NumericalSemigroup::from_apery(n, w);
      }, py::arg("n"), py::arg("elements"))
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("gaps", &NumericalSemigroup::gaps)
      .def_property_readonly("generators", &NumericalSemigroup::minimal_generators)
      .def_property_readonly("apery", [](const NumericalSemigroup& s) {
        std::vector<std::int64_t> out{0};
        out.insert(out.end(), s.apery_vector().begin(), s.apery_vector().end());
        return out;
      })
      .def("is_naturals", &NumericalSemigroup::is_naturals)
      .def("__contains__", &NumericalSemigroup::contains)
      .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; })
      .def("__lt__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a < b; })
      .def("__hash__", [](const NumericalSemigroup& s) { return std::hash<NumericalSemigroup>{}(s); })
      .def("__repr__", [](const NumericalSemigroup& s) { return "NumericalSemigroup(" + s.to_string() + ")"; })
      .def("__str__", &NumericalSemigroup::to_string);

  m.def("intersect", &nsg::intersect);
  m.def("is_subset", &nsg::is_subset);
  m.def("apery", [](const NumericalSemigroup& s, std::int64_t n) { return nsg::apery(s, n).elements; });
  m.def("pseudo_frobenius", &nsg::pseudo_frobenius);
  m.def("special_gaps", &nsg::special_gaps);
  m.def("add_special_gap", &nsg::add_special_gap);
  m.def("is_irreducible", &nsg::is_irreducible);
  m.def("classify", [](const NumericalSemigroup& s) { return std::string(nsg::to_string(nsg::classify(s).kind)); },
        "symmetric, pseudosymmetric or reducible");

  m.def("oversemigroups", [](const NumericalSemigroup& s, std::uint64_t budget) {
    nsg::Budget b(budget);
    return nsg::oversemigroups(s, b);
  }, py::arg("s"), py::arg("budget") = nsg::kDefaultBudget, py::call_guard<py::gil_scoped_release>());
  m.def("irreducibles_with_frobenius", [](std::int64_t f, std::uint64_t budget) {
    nsg::Budget b(budget);
    return nsg::irreducibles_with_frobenius(f, b);
  }, py::arg("f"), py::arg("budget") = nsg::kDefaultBudget, py::call_guard<py::gil_scoped_release>());
  m.def("miss_set", &nsg::miss_set);
  m.def("m_set", &nsg::m_set);
  m.def("is_decomposition", [](const NumericalSemigroup& s, const std::vector<NumericalSemigroup>& parts) {
    return check_dict(nsg::is_decomposition(s, parts));
  });
  m.def("length_spectrum", [](const NumericalSemigroup& s, std::uint64_t budget) {
    nsg::LengthSpectrum spectrum;
    {
      py::gil_scoped_release release;
      nsg::Budget b(budget);
      spectrum = nsg::length_spectrum(s, b);
    }
    py::dict witnesses;
    for (const auto& [len, d] : spectrum.witnesses) witnesses[py::int_(len)] = d.components;
    return py::make_tuple(spectrum.lengths, witnesses);
  }, py::arg("s"), py::arg("budget") = nsg::kDefaultBudget, "(lengths, {length: components})");
  m.def("minimum_decomposition", [](const NumericalSemigroup& s, std::uint64_t budget) {
    nsg::Budget b(budget);
    return nsg::minimum_decomposition(s, b).components;
  }, py::arg("s"), py::arg("budget") = nsg::kDefaultBudget, py::call_guard<py::gil_scoped_release>());

  m.def("m4_cover", &nsg::m4_cover);
  m.def("m6_covers", [](const NumericalSemigroup& s, bool keep_fourth_on_tie) {
    const auto pair = nsg::m6_covers(s, keep_fourth_on_tie);
    return py::make_tuple(pair.T, pair.T_prime, choice_dict(pair.choice_T), choice_dict(pair.choice_T_prime));
  }, py::arg("s"), py::arg("keep_fourth_on_tie") = false);

  m.def("H", &nsg::H);
  m.def("T", &nsg::T_irr);
  m.def("I", &nsg::I_irr);
  m.def("n_min", &nsg::n_min);
  m.def("D", [](std::int64_t m_, std::int64_t ell) { return nsg::D(m_, ell).semigroups(); });
  m.def("d_family_lengths", &nsg::d_family_lengths);

  m.def("semigroups_with_multiplicity", &nsg::semigroups_with_multiplicity,
        py::call_guard<py::gil_scoped_release>());
  m.def("check_interval", [](std::int64_t m_, std::int64_t f_max, unsigned threads, std::uint64_t budget) {
    nsg::IntervalReport report;
    {
      py::gil_scoped_release release;
      nsg::Budget b(budget);
      report = nsg::check_interval(m_, f_max, b, threads);
    }
    py::dict census;
    for (const auto& [lengths, count] : report.census) census[py::tuple(py::cast(lengths))] = count;
    py::list bad;
    for (const auto& [s, lengths] : report.counterexamples) bad.append(py::make_tuple(s, lengths));
    return py::make_tuple(report.semigroups, bad, census);
  }, py::arg("m"), py::arg("f_max"), py::arg("threads") = 1, py::arg("budget") = nsg::kDefaultBudget,
     "(semigroups, counterexamples, census)");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = nsg::cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line interface in process: (exit_code, stdout, stderr)");
}
