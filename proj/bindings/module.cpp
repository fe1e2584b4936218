#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adeq/construction.hpp"
#include "adeq/document.hpp"
#include "adeq/families.hpp"
#include "adeq/search.hpp"
#include "adeq/transversal.hpp"
#include "adeq/verify.hpp"

namespace py = pybind11;
using namespace adeq;

namespace {

ElementSubset subset_from(const FiniteSemigroup& s,
                          const std::vector<int>& members) {
  return ElementSubset::of(s.order(), members);
}

py::dict analysis_dict(const TransversalAnalysis& a) {
  py::dict out;
  out["e_of"] = a.e_of;
  out["bar_of"] = a.bar_of;
  out["f_of"] = a.f_of;
  out["set_I"] = a.set_I.members();
  out["set_Lambda"] = a.set_Lambda.members();
  out["set_E0"] = a.set_E0.members();
  out["set_L"] = a.set_L.members();
  out["set_R"] = a.set_R.members();
  out["quasi_ideal"] = a.quasi_ideal;
  out["multiplicative"] = a.multiplicative;
  out["weakly_multiplicative"] = a.weakly_multiplicative;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite semigroup transversal toolkit";

  py::register_exception<Error>(m, "AdeqError");

  py::class_<FiniteSemigroup>(m, "FiniteSemigroup")
      .def_static("validate",
                  [](const std::vector<std::vector<int>>& rows) {
                    return FiniteSemigroup::validate(rows);
                  })
      .def("order", &FiniteSemigroup::order)
      .def("product",
           py::overload_cast<int, int>(&FiniteSemigroup::product, py::const_))
      .def("rows", &FiniteSemigroup::rows)
      .def("__eq__", [](const FiniteSemigroup& a, const FiniteSemigroup& b) {
        return a == b;
      });

  // Families.
  m.def("semilattice_chain", &semilattice_chain);
  m.def("rectangular_band", &rectangular_band);
  m.def("left_zero", &left_zero);
  m.def("right_zero", &right_zero);
  m.def("cyclic_group", &cyclic_group);
  m.def("monogenic", &monogenic);
  m.def("full_transformation_monoid", &full_transformation_monoid);
  m.def("symmetric_inverse_monoid", &symmetric_inverse_monoid);
  m.def("brandt_b2", &brandt_b2);
  m.def("direct_product", &direct_product);
  m.def("generate", &generate);

  // Core predicates and relations.
  m.def("idempotents",
        [](const FiniteSemigroup& s) { return idempotents(s).members(); });
  m.def("regular_elements", [](const FiniteSemigroup& s) {
    return regular_elements(s).members();
  });
  m.def("r_star_classes",
        [](const FiniteSemigroup& s) { return r_star(s).classes; });
  m.def("l_star_classes",
        [](const FiniteSemigroup& s) { return l_star(s).classes; });
  m.def("is_abundant", &is_abundant);
  m.def("is_adequate", &is_adequate);
  m.def("is_left_adequate", &is_left_adequate);
  m.def("is_right_adequate", &is_right_adequate);
  m.def("find_isomorphism", &find_isomorphism);

  // Transversal analysis and search.
  m.def("analyze_transversal",
        [](const FiniteSemigroup& s, const std::vector<int>& s0) {
          return analysis_dict(analyze_transversal(s, subset_from(s, s0)));
        });
  m.def("search_transversals",
        [](const FiniteSemigroup& s, int max_generators) {
          py::list out;
          for (const auto& f : search_transversals(s, max_generators)) {
            py::dict d = analysis_dict(f.analysis);
            d["members"] = f.subset.members();
            out.append(d);
          }
          return out;
        },
        py::arg("s"), py::arg("max_generators") = 2);

  // Constructions.
  m.def("decompose_and_rebuild",
        [](const FiniteSemigroup& s, const std::vector<int>& s0) {
          const auto a = analyze_transversal(s, subset_from(s, s0));
          auto [sp, rep] = decompose_and_rebuild(s, a);
          py::dict out;
          out["table"] = sp.sg.rows();
          out["pairs"] = sp.pairs;
          out["t0"] = sp.embedded_t0.members();
          out["phi"] = *sp.source_iso;
          out["iso_ok"] = rep.ok();
          return out;
        });
  m.def("chen_degenerate", [](const FiniteSemigroup& s0) {
    const auto res = chen_construct(degenerate_chen_data(s0));
    py::dict out;
    out["table"] = res.sg.rows();
    out["elements"] = res.elements;
    out["t0"] = res.t0.members();
    return out;
  });

  // Documents and reports.
  m.def("parse_table", [](const std::string& text) {
    return parse_document(text).sg;
  });
  m.def("serialize_table", [](const FiniteSemigroup& s) {
    SemigroupDocument doc;
    doc.sg = s;
    return serialize_document(doc);
  });
  m.def("run_verification_suite",
        [](const FiniteSemigroup& s, const std::vector<int>& s0,
           const std::string& instance) {
          const auto rep =
              run_verification_suite(s, subset_from(s, s0), instance);
          py::list rows;
          for (const auto& row : rep.rows) {
            py::dict d;
            d["check"] = row.check;
            d["anchor"] = row.anchor;
            d["pass"] = row.pass;
            d["witness"] = row.witness;
            rows.append(d);
          }
          return rows;
        },
        py::arg("s"), py::arg("s0"), py::arg("instance") = "");
  m.def("builtin_corpus", [] {
    py::list out;
    for (const auto& [name, s] : builtin_corpus())
      out.append(py::make_tuple(name, s));
    return out;
  });
}
