#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cucalc/dsl.hpp"
#include "cucalc/error.hpp"
#include "cucalc/oracle.hpp"
#include "cucalc/semiring.hpp"

namespace py = pybind11;
using namespace cucalc;

namespace {

Carrier carrier_from_expr(const std::string& expr) {
  const SpecAst ast = parse("carrier X_ = " + expr + "\n");
  return std::get<Carrier>(ast.statements.at(0).operands.at(0));
}

py::dict axioms_dict(const Carrier& c, std::size_t budget) {
  AxiomBudget b;
  b.samples = budget;
  const AxiomReport rep = check_axioms(c, b);
  py::list rows;
  for (const auto& a : rep.results) {
    py::dict d;
    d["name"] = a.name;
    d["passed"] = a.passed;
    d["checked"] = a.checked;
    d["witness"] = a.witness;
    rows.append(d);
  }
  py::dict out;
  out["carrier"] = rep.carrier;
  out["passed"] = rep.passed();
  out["results"] = rows;
  return out;
}

}  // namespace

PYBIND11_MODULE(cucalc, m) {
  m.doc() = "Cu-semigroups, their internal homs and solid Cu-semirings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Carrier>(m, "Carrier")
      .def_static("parse", &carrier_from_expr, py::arg("expr"), "carrier from a DSL carrier expression")
      .def_static("extnat", &Carrier::extnat, py::arg("k") = 1)
      .def_static("pbar", &Carrier::pbar)
      .def_static("m1", &Carrier::m1)
      .def_static("trunc", &Carrier::trunc)
      .def_static("trunchom", &Carrier::trunc_hom)
      .def_static("z", &Carrier::z)
      .def_property_readonly("name", &Carrier::name)
      .def_property_readonly("dim", &Carrier::dim)
      .def_property_readonly("is_finite", [](const Carrier& c) { return c.kind() == CarrierKind::Finite; })
      .def("grid", [](const Carrier& c, std::size_t budget) {
            std::vector<std::string> out;
            for (const auto& e : c.grid(budget)) out.push_back(c.format(e));
            return out;
          }, py::arg("budget") = 32)
      .def("axioms", &axioms_dict, py::arg("budget") = 48)
      .def("ideals", [](const Carrier& c) {
            std::vector<std::string> out;
            for (const auto& j : ideal_lattice(c)) out.push_back(j.name);
            return out;
          })
      .def("is_simple", [](const Carrier& c) { return is_simple(c).simple; })
      .def("describe", [](const Carrier& c) {
            return c.kind() == CarrierKind::Finite ? describe_finite(c.table()) : c.name();
          })
      .def("__eq__", [](const Carrier& a, const Carrier& b) { return a == b; })
      .def("__repr__", [](const Carrier& c) { return "<Carrier " + c.name() + ">"; });

  m.def("ihom", [](const Carrier& s, const Carrier& t) {
        const auto d = ihom_describe(s, t);
        py::dict out;
        out["name"] = d.name;
        out["carrier"] = d.carrier.name();
        out["order"] = d.order;
        out["addition"] = d.addition;
        out["way_below"] = d.way_below;
        return out;
      }, py::arg("s"), py::arg("t"));

  m.def("solid", [](const std::string& name) {
        const auto r = semiring_by_name(name);
        if (!r) throw py::value_error("unknown semiring '" + name + "'");
        const SolidReport rep = solid_report(*r);
        std::vector<std::string> statuses;
        for (const auto& v : rep.conditions) statuses.emplace_back(verdict_name(v.status));
        py::dict out;
        out["semiring"] = rep.semiring;
        out["conditions"] = statuses;
        out["consistent"] = !rep.implication_violation().has_value();
        out["table"] = format_table(rep);
        return out;
      }, py::arg("semiring"));

  m.def("generate_finite_cu", &generate_finite_cu, py::arg("n"));

  m.def("closed_bijection", [](const Carrier& s, const Carrier& t, const Carrier& p) {
        const auto r = check_closed_bijection(s, t, p);
        py::dict out;
        out["passed"] = r.passed;
        out["homs"] = r.homs;
        out["bimorphisms"] = r.bimorphisms;
        return out;
      }, py::arg("s"), py::arg("t"), py::arg("p"));

  m.def("oracle", [](std::size_t max_size, const std::string& check) {
        const auto c = oracle_check_from_name(check);
        if (!c) throw py::value_error("unknown check '" + check + "'");
        const OracleRun r = run_oracle(max_size, *c);
        py::dict out;
        out["passed"] = r.passed;
        out["carriers"] = r.carriers;
        out["instances"] = r.entries.size();
        return out;
      }, py::arg("max_size") = 3, py::arg("check") = "bijection");

  m.def("canonical", [](const std::string& src) { return print(parse(src)); }, py::arg("source"),
        "canonical text of a program; raises ParseError");

  m.def("run", [](const std::string& src, bool json, std::uint64_t seed, std::size_t budget) {
        const RunOptions o{json, seed, budget};
        const RunResult r = run_source(src, o);
        return py::make_tuple(r.exit_code, json ? render_json(r, o) : render_text(r));
      }, py::arg("source"), py::arg("json") = false, py::arg("seed") = 0, py::arg("budget") = 64,
      "run a program; returns (exit_code, report)");
}
