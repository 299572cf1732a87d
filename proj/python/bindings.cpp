#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cech2/cohomology.hpp"
#include "cech2/error.hpp"
#include "cech2/exactness.hpp"
#include "cech2/io.hpp"
#include "cech2/nerve.hpp"

namespace py = pybind11;
using namespace cech2;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& x : j) out.append(to_py(x));
      return std::move(out);
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return std::move(out);
    }
    default: return py::none();
  }
}

Budget make_budget(std::uint64_t cocycles, std::uint64_t witnesses) { return Budget{cocycles, witnesses}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Čech cohomology with coefficients in finite 2-groups";
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "FiniteGroup")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("table", &FiniteGroup::table)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<FiniteGroup " + g.name() + " of order " + std::to_string(g.order()) + ">"; });

  m.def("group", [](const std::string& name) { return std::const_pointer_cast<FiniteGroup>(builtin_group(name)); },
        py::arg("name"), "Builtin group: Z<n>, S1..S5 or V4.");
  m.def("conjugacy_classes", [](const std::shared_ptr<FiniteGroup>& g) { return conjugacy_classes(*g); });

  py::class_<CrossedModule>(m, "CrossedModule")
      .def_property_readonly("name", &CrossedModule::name)
      .def_property_readonly("G", [](const CrossedModule& x) { return std::const_pointer_cast<FiniteGroup>(x.G()); })
      .def_property_readonly("H", [](const CrossedModule& x) { return std::const_pointer_cast<FiniteGroup>(x.H()); })
      .def_property_readonly("t", [](const CrossedModule& x) { return x.t().map(); })
      .def_property_readonly("alpha", [](const CrossedModule& x) { return x.alpha().perms(); })
      .def("to_json", [](const CrossedModule& x) { return to_py(to_json(x)); })
      .def("__repr__", [](const CrossedModule& x) { return "<CrossedModule " + x.name() + ">"; });

  m.def("coefficients", &parse_coefficients, py::arg("spec"),
        "discrete:G, shift:H, aut:H, hat:SPEC, z2-z4 or a crossed-module JSON file.");
  m.def("crossed_module_from_json", [](const std::string& text) { return crossed_module_from_json(parse_json(text)); });
  m.def("hat", [](const CrossedModule& x) { return hat_construction(x).hat; });
  m.def("hat_iso_check", [](const CrossedModule& x) {
    iso_hat_check(x);
    return validate_ses(hat_construction(x).ses).ok();
  });

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def("simplices", &SimplicialComplex::simplices_of_dim, py::arg("k"))
      .def("euler_characteristic", &SimplicialComplex::euler_characteristic)
      .def("subdivide", [](const SimplicialComplex& c) { return barycentric_subdivide(c); });
  m.def("space", &parse_space, py::arg("spec"), "Standard space name or complex JSON file.");
  m.def("standard_spaces", &standard_space_names);

  m.def(
      "h1",
      [](const SimplicialComplex& space, const CrossedModule& xm, std::uint64_t cocycles, std::uint64_t witnesses) {
        return to_py(to_json(classify_h1(space, xm, make_budget(cocycles, witnesses))));
      },
      py::arg("space"), py::arg("coefficients"), py::arg("cocycle_budget") = 1'000'000,
      py::arg("witness_budget") = 1'000'000, "Classification report for Ȟ¹.");
  m.def(
      "cocycles",
      [](const SimplicialComplex& space, const CrossedModule& xm, std::uint64_t budget) {
        py::list out;
        for (const Cocycle& c : enumerate_cocycles(space, xm, Budget{budget, budget})) out.append(py::make_tuple(c.g, c.h));
        return out;
      },
      py::arg("space"), py::arg("coefficients"), py::arg("budget") = 1'000'000);
  m.def("abelian_oracle_h2", [](const SimplicialComplex& space, const std::shared_ptr<FiniteGroup>& a) {
    return abelian_oracle_h2(space, a);
  });
  m.def(
      "refine_compare",
      [](const SimplicialComplex& space, const CrossedModule& xm) {
        const RefineCounts r = refine_compare(space, xm);
        return py::make_tuple(r.original, r.subdivided);
      },
      py::arg("space"), py::arg("coefficients"));

  m.def(
      "verify_lemma2",
      [](const std::string& ses, const SimplicialComplex& space, std::uint64_t budget) {
        return to_py(to_json(verify_lemma2(parse_group_ses(ses), space, Budget{budget, budget})));
      },
      py::arg("ses"), py::arg("space"), py::arg("budget") = 1'000'000);
  m.def(
      "verify_lemma3",
      [](const std::string& ses, const SimplicialComplex& space, std::uint64_t budget) {
        return to_py(to_json(verify_lemma3(parse_crossed_module_ses(ses), space, Budget{budget, budget})));
      },
      py::arg("ses"), py::arg("space"), py::arg("budget") = 1'000'000);

  m.def(
      "nerve",
      [](const CrossedModule& xm, int levels) {
        NerveOptions options;
        options.levels = levels;
        const TruncatedSimplicialGroup n = nerve_two_group(xm, options);
        py::list orders;
        for (int p = 0; p <= n.top(); ++p) orders.append(n.level(p)->order());
        py::dict out;
        out["level_orders"] = orders;
        out["simplicial"] = to_py(to_json(check_simplicial_identities(n)));
        out["level_iso"] = to_py(to_json(check_level_iso(n, xm)));
        return out;
      },
      py::arg("coefficients"), py::arg("levels") = 4);
}
