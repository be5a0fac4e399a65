#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numsemi/enumeration.hpp"
#include "numsemi/verify.hpp"

namespace py = pybind11;
using numsemi::Factorization;
using numsemi::Int;
using numsemi::LevelCensus;
using numsemi::NumericalSemigroup;
using numsemi::Semimodule;

PYBIND11_MODULE(_core, m) {
  m.doc() = "numerical semigroups, their semimodules, and level counts";

  auto base =
      py::register_exception<numsemi::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<numsemi::EmptyGenerators>(m, "EmptyGenerators",
                                                   base);
  py::register_exception<numsemi::GcdNotOne>(m, "GcdNotOne", base);
  py::register_exception<numsemi::NotAMember>(m, "NotAMember", base);
  py::register_exception<numsemi::GapNotInSemigroup>(m, "GapNotInSemigroup",
                                                     base);
  py::register_exception<numsemi::NotDownClosed>(m, "NotDownClosed", base);
  py::register_exception<numsemi::NotAMinimalGenerator>(
      m, "NotAMinimalGenerator", base);
  py::register_exception<numsemi::AlreadyFull>(m, "AlreadyFull", base);

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init(&NumericalSemigroup::from_generators), py::arg("gens"))
      .def_static("from_generators", &NumericalSemigroup::from_generators,
                  py::arg("gens"))
      .def_property_readonly("minimal_generators",
                             &NumericalSemigroup::minimal_generators)
      .def_property_readonly("multiplicity",
                             &NumericalSemigroup::multiplicity)
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("conductor", &NumericalSemigroup::conductor)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("gaps", &NumericalSemigroup::gaps)
      .def_property_readonly("apery_row", &NumericalSemigroup::apery_row)
      .def_property_readonly("small_elements",
                             &NumericalSemigroup::small_elements)
      .def("contains", &NumericalSemigroup::contains, py::arg("n"))
      .def("__contains__", &NumericalSemigroup::contains)
      .def("nth_element", &NumericalSemigroup::nth_element, py::arg("k"))
      .def("apery_set", &NumericalSemigroup::apery_set, py::arg("m"))
      .def(
          "factorize",
          [](const NumericalSemigroup& s, Int n) {
            return s.factorize(n).coefficients;
          },
          py::arg("n"))
      .def(
          "evaluate",
          [](const NumericalSemigroup& s, std::vector<Int> coefficients) {
            return s.evaluate(Factorization{std::move(coefficients)});
          },
          py::arg("coefficients"))
      .def("children", &NumericalSemigroup::children)
      .def("__eq__", &NumericalSemigroup::operator==)
      .def("__lt__", &NumericalSemigroup::operator<)
      .def("__hash__", &NumericalSemigroup::hash)
      .def("__repr__", [](const NumericalSemigroup& s) {
        return "NumericalSemigroup" + s.to_string();
      });

  py::class_<Semimodule>(m, "Semimodule")
      .def_static("from_gaps", &Semimodule::from_gaps, py::arg("semigroup"),
                  py::arg("gaps"))
      .def_static("from_generators", &Semimodule::from_generators,
                  py::arg("semigroup"), py::arg("alphas"))
      .def_property_readonly("semigroup", &Semimodule::semigroup)
      .def_property_readonly("gap_list", &Semimodule::gap_list)
      .def_property_readonly("codim", &Semimodule::codim)
      .def("contains", &Semimodule::contains, py::arg("n"))
      .def("__contains__", &Semimodule::contains)
      .def("minimal_generators", &Semimodule::minimal_generators)
      .def("remove_generator", &Semimodule::remove_generator,
           py::arg("alpha"))
      .def("add_max_gap", &Semimodule::add_max_gap)
      .def("associated_semigroup", &Semimodule::associated_semigroup)
      .def("monomial_ideal_witness",
           [](const Semimodule& d) {
             std::vector<std::vector<Int>> out;
             for (auto& f : d.monomial_ideal_witness()) {
               out.push_back(std::move(f.coefficients));
             }
             return out;
           })
      .def("__eq__", &Semimodule::operator==)
      .def("__hash__", &Semimodule::hash)
      .def("__repr__", [](const Semimodule& d) {
        return "Semimodule(" + d.to_string() + ")";
      });

  m.def(
      "order_set_of_monomial_ideal",
      [](const NumericalSemigroup& s,
         std::vector<std::vector<Int>> exponents) {
        std::vector<Factorization> fs;
        for (auto& e : exponents) fs.push_back(Factorization{std::move(e)});
        return numsemi::order_set_of_monomial_ideal(s, fs);
      },
      py::arg("semigroup"), py::arg("exponents"));

  py::class_<LevelCensus>(m, "LevelCensus")
      .def_property_readonly(
          "semigroup", [](const LevelCensus& c) { return c.semigroup; })
      .def_readonly("r", &LevelCensus::r)
      .def_readonly("members", &LevelCensus::members)
      .def_property_readonly("count", &LevelCensus::count)
      .def("__len__", &LevelCensus::count);

  m.def("level_zero", &numsemi::level_zero, py::arg("semigroup"));
  m.def("next_level", &numsemi::next_level, py::arg("level"),
        py::arg("threads") = 1);
  m.def("mod_counts", &numsemi::mod_counts, py::arg("semigroup"),
        py::arg("r_max"), py::arg("threads") = 1);
  m.def("j_counts", &numsemi::j_counts, py::arg("semigroup"),
        py::arg("r_max"), py::arg("threads") = 1);
  m.def("j_set", &numsemi::j_set, py::arg("semigroup"), py::arg("r"),
        py::arg("threads") = 1);
  m.def("oracle_enumerate", &numsemi::oracle_enumerate, py::arg("semigroup"),
        py::arg("r"));
  m.def("enumerate_semigroups_by_genus",
        &numsemi::enumerate_semigroups_by_genus, py::arg("g_max"));

  py::class_<numsemi::CrossCheckResult>(m, "CrossCheckResult")
      .def_readonly("ok", &numsemi::CrossCheckResult::ok)
      .def_readonly("r", &numsemi::CrossCheckResult::r)
      .def_readonly("missing_gap_list",
                    &numsemi::CrossCheckResult::missing_gap_list)
      .def_readonly("extra_gap_list",
                    &numsemi::CrossCheckResult::extra_gap_list);

  py::class_<numsemi::VerificationReport>(m, "VerificationReport")
      .def_property_readonly(
          "semigroup",
          [](const numsemi::VerificationReport& r) { return r.semigroup; })
      .def_readonly("window", &numsemi::VerificationReport::window)
      .def_readonly("n_s_used", &numsemi::VerificationReport::n_s_used)
      .def_readonly("j_sequence", &numsemi::VerificationReport::j_sequence)
      .def_readonly("monotone_ok", &numsemi::VerificationReport::monotone_ok)
      .def_readonly("stable_ok", &numsemi::VerificationReport::stable_ok)
      .def_readonly("observed_min_threshold",
                    &numsemi::VerificationReport::observed_min_threshold)
      .def_readonly("oracle_checked",
                    &numsemi::VerificationReport::oracle_checked)
      .def_readonly("oracle", &numsemi::VerificationReport::oracle)
      .def("passed", &numsemi::VerificationReport::passed);

  m.def("verify_conjecture", &numsemi::verify_conjecture,
        py::arg("semigroup"), py::arg("window") = 3,
        py::arg("with_oracle") = false, py::arg("threads") = 1);
  m.def("cross_check", &numsemi::cross_check, py::arg("semigroup"),
        py::arg("r_max"), py::arg("threads") = 1);

  py::class_<numsemi::SweepResult>(m, "SweepResult")
      .def_readonly("genus_max", &numsemi::SweepResult::genus_max)
      .def_readonly("window", &numsemi::SweepResult::window)
      .def_readonly("corpus_size", &numsemi::SweepResult::corpus_size)
      .def_readonly("reports", &numsemi::SweepResult::reports)
      .def_property_readonly("first_failure",
                             [](const numsemi::SweepResult& r)
                                 -> py::object {
                               if (!r.first_failure) return py::none();
                               return py::int_(*r.first_failure);
                             })
      .def("all_passed", &numsemi::SweepResult::all_passed);

  m.def("sweep", &numsemi::sweep, py::arg("g_max"), py::arg("window") = 3,
        py::arg("threads") = 1);
}
