#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "finq/born.hpp"
#include "finq/character_table.hpp"
#include "finq/decomposition.hpp"
#include "finq/errors.hpp"
#include "finq/group.hpp"
#include "finq/mixing.hpp"
#include "finq/representation.hpp"

namespace py = pybind11;
using namespace finq;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

Rational to_rational(const py::handle& h) {
  return parse_rational(py::str(h).cast<std::string>());
}

Cyclotomic to_cyclotomic(const py::handle& h) {
  if (py::isinstance<Cyclotomic>(h)) return h.cast<Cyclotomic>();
  return Cyclotomic(to_rational(h));
}

using PyMatrix = std::vector<std::vector<Cyclotomic>>;

PyMatrix to_lists(const CycMatrix& m) {
  PyMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m.row(i);
  return out;
}

std::vector<Permutation> parse_all(const std::vector<std::string>& gens, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(parse_cycles(g, degree));
  return out;
}

// A generated group kept alive for representation work.
struct PyGroup {
  std::shared_ptr<const FiniteGroup> group;

  PyGroup(std::size_t degree, const std::vector<std::string>& gens, std::size_t cap)
      : group(std::make_shared<const FiniteGroup>(generate(parse_all(gens, degree), cap))) {}
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cyclotomic representation theory of permutation groups";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ArithmeticError);
  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(input_error.ptr(), e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(domain_error.ptr(), e.what());
    } catch (const CapExceeded& e) {
      PyErr_SetString(cap_exceeded.ptr(), e.what());
    } catch (const InvariantViolation& e) {
      PyErr_SetString(invariant.ptr(), e.what());
    }
  });

  py::class_<Cyclotomic>(m, "Cyclotomic")
      .def(py::init<>())
      .def(py::init([](const py::object& x) { return to_cyclotomic(x); }), py::arg("value"),
           "From an int, a fractions.Fraction or a 'p/q' string")
      .def_property_readonly("conductor", &Cyclotomic::conductor)
      .def_property_readonly("coeffs",
                             [](const Cyclotomic& x) {
                               py::list out;
                               for (const auto& c : x.coeffs()) out.append(fraction(c));
                               return out;
                             })
      .def("is_rational", &Cyclotomic::is_rational)
      .def("to_fraction", [](const Cyclotomic& x) { return fraction(x.rational_value()); })
      .def("conj", [](const Cyclotomic& x) { return conj(x); })
      .def("galois", [](const Cyclotomic& x, std::int64_t k) { return galois(x, k); })
      .def("__complex__", [](const Cyclotomic& x) { return to_float(x); })
      .def("__repr__", [](const Cyclotomic& x) { return "Cyclotomic(" + to_string(x) + ")"; })
      .def("__str__", [](const Cyclotomic& x) { return to_string(x); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__add__", [](const Cyclotomic& a, const py::object& b) { return a + to_cyclotomic(b); })
      .def("__radd__", [](const Cyclotomic& a, const py::object& b) { return to_cyclotomic(b) + a; })
      .def("__sub__", [](const Cyclotomic& a, const py::object& b) { return a - to_cyclotomic(b); })
      .def("__rsub__", [](const Cyclotomic& a, const py::object& b) { return to_cyclotomic(b) - a; })
      .def("__mul__", [](const Cyclotomic& a, const py::object& b) { return a * to_cyclotomic(b); })
      .def("__rmul__", [](const Cyclotomic& a, const py::object& b) { return to_cyclotomic(b) * a; })
      .def("__truediv__", [](const Cyclotomic& a, const py::object& b) { return a / to_cyclotomic(b); })
      .def("__eq__", [](const Cyclotomic& a, const py::object& b) { return a == to_cyclotomic(b); })
      .def("__hash__", [](const Cyclotomic& x) { return py::hash(py::str(to_string(minimize_conductor(x)))); });

  m.def("root_of_unity", &root_of_unity, py::arg("n"), py::arg("k") = 1);
  m.def("sqrt_integer", &sqrt_integer, py::arg("d"));

  py::class_<PyGroup>(m, "Group")
      .def(py::init<std::size_t, const std::vector<std::string>&, std::size_t>(), py::arg("degree"),
           py::arg("generators"), py::arg("cap") = kDefaultGroupCap)
      .def_property_readonly("order", [](const PyGroup& g) { return g.group->order(); })
      .def_property_readonly("degree", [](const PyGroup& g) { return g.group->degree(); })
      .def_property_readonly("exponent", [](const PyGroup& g) { return exponent(*g.group); })
      .def_property_readonly("elements", [](const PyGroup& g) {
        std::vector<std::string> out;
        for (const auto& e : g.group->elements()) out.push_back(to_cycles(e));
        return out;
      });

  m.def(
      "character_table",
      [](const PyGroup& g) {
        const auto t = character_table(*g.group);
        py::dict out;
        std::vector<std::size_t> sizes;
        std::vector<std::string> reps;
        for (const auto& c : t.classes.classes) {
          sizes.push_back(c.size());
          reps.push_back(to_cycles(g.group->element(c.representative())));
        }
        out["class_sizes"] = sizes;
        out["representatives"] = reps;
        out["dimensions"] = t.dimensions;
        out["rows"] = t.rows;
        return out;
      },
      py::arg("group"));

  m.def(
      "decompose",
      [](const PyGroup& g, const std::string& action) {
        Representation rep;
        if (action == "natural") {
          rep = permutation_representation(g.group);
        } else if (action == "regular") {
          rep = regular_representation(g.group);
        } else {
          throw InputError("action must be 'natural' or 'regular'");
        }
        const auto dec = decompose_permutation(rep);
        py::dict out;
        py::list blocks;
        for (const auto& b : dec.blocks) {
          py::dict d;
          d["character"] = b.character;
          d["dimension"] = b.dimension;
          d["multiplicity"] = b.multiplicity;
          blocks.append(d);
        }
        out["blocks"] = blocks;
        out["block_sizes"] = dec.block_sizes();
        out["transform"] = to_lists(dec.transform);
        return out;
      },
      py::arg("group"), py::arg("action") = "natural");

  m.def("perm_matrix", [](const std::string& cycles, std::size_t degree) {
    return to_lists(perm_matrix(parse_cycles(cycles, degree)));
  });
  m.def("perm_eigenvalues", [](const std::string& cycles, std::size_t degree) {
    return perm_eigenvalues(cycle_type(parse_cycles(cycles, degree)));
  });

  m.def("born_full", [](const NatState& a, const NatState& b) { return fraction(born_full(a, b)); });
  m.def("born_symmetric", [](const NatState& a, const NatState& b) { return fraction(born_symmetric(a, b)); });
  m.def("complement_inner", [](const NatState& a, const NatState& b) { return fraction(complement_inner(a, b)); });
  m.def("born_complement", [](const NatState& a, const NatState& b) { return fraction(born_complement(a, b)); });
  m.def("c3_born_subspace", [](const NatState& a, const NatState& b) { return fraction(c3_born_subspace(a, b)); });
  m.def(
      "interference_solutions",
      [](std::size_t degree, std::uint64_t bound, unsigned jobs) {
        std::vector<std::pair<NatState, NatState>> out;
        py::gil_scoped_release release;
        for (auto& p : interference_solutions(degree, bound, jobs)) out.emplace_back(std::move(p.m), std::move(p.n));
        return out;
      },
      py::arg("degree"), py::arg("bound"), py::arg("jobs") = 1);

  m.def("tribimaximal", [] { return to_lists(tribimaximal()); });
  m.def(
      "moduli_squared",
      [](const PyMatrix& rows) {
        std::vector<CycVector> r(rows.begin(), rows.end());
        const auto t = moduli_squared(CycMatrix::from_rows(r));
        py::list out;
        for (std::size_t i = 0; i < 3; ++i) {
          py::list row;
          for (std::size_t j = 0; j < 3; ++j) row.append(fraction(t.exact_entry(i, j)));
          out.append(row);
        }
        return out;
      },
      py::arg("matrix"));
  m.def(
      "pattern_check",
      [](const std::vector<std::vector<py::object>>& table, double tolerance) {
        if (table.size() != 3) throw InputError("tables are 3x3");
        RationalGrid grid;
        for (std::size_t i = 0; i < 3; ++i) {
          if (table[i].size() != 3) throw InputError("tables are 3x3");
          for (std::size_t j = 0; j < 3; ++j) grid[i][j] = to_rational(table[i][j]);
        }
        const auto r = pattern_check(MixTable::exact(grid), tolerance);
        return py::make_tuple(r.bimaximal, r.trimaximal, r.e3_absent);
      },
      py::arg("table"), py::arg("tolerance") = 0.0);

}
