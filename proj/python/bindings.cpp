#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "isotropy/chern_oracle.hpp"
#include "isotropy/cross_validate.hpp"
#include "isotropy/errors.hpp"
#include "isotropy/isotropy_engine.hpp"
#include "isotropy/partition.hpp"
#include "isotropy/schur_eval.hpp"
#include "isotropy/sympoly.hpp"
#include "isotropy/tableau.hpp"

namespace py = pybind11;
using namespace isotropy;

namespace {

py::int_ to_py(const ExactInt& v) {
  const std::string digits = v.get_str(10);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::object to_py(const ExactRatio& v) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(ExactInt(v.get_num())), to_py(ExactInt(v.get_den())));
}

// Accepts "2,1" or any sequence of ints.
Partition to_partition(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_partition(obj.cast<std::string>());
  return Partition(obj.cast<std::vector<int>>());
}

py::tuple to_py(const Partition& p) { return py::cast(p.parts()); }

py::dict expansion_dict(const SchurExpansion& e) {
  py::dict d;
  for (const auto& [mu, c] : e.coefficients) d[to_py(mu)] = to_py(c);
  return d;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["isotropic"] = v.isotropic;
  d["rule"] = std::string(rule_name(v.rule));
  d["threshold_n"] = v.threshold_n ? py::object(to_py(*v.threshold_n)) : py::object(py::none());
  d["detail"] = v.detail;
  return d;
}

py::dict chern_dict(const ChernVerdict& v) {
  py::dict d;
  d["nonzero"] = v.nonzero;
  d["degree"] = to_py(v.degree);
  d["shortcut"] = std::string(shortcut_name(v.shortcut));
  d["surviving"] = expansion_dict(v.surviving);
  return d;
}

OracleLimits limits(std::size_t max_tableaux, std::size_t max_terms) {
  return OracleLimits{max_tableaux, max_terms};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schur-module dimensions, top Chern classes on Grassmannians and the isotropy decision";

  static py::exception<Error> error_type(m, "IsotropyError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  m.def("parse_partition", [](const std::string& text) { return to_py(parse_partition(text)); },
        py::arg("text"));

  m.def("dim", [](const py::object& lam, int n) { return to_py(dim_schur_module(to_partition(lam), n).value); },
        py::arg("lam"), py::arg("n"), "dim S_lambda C^n");
  m.def("hook_content", [](const py::object& lam, int n) { return to_py(schur_ones_hook_content(to_partition(lam), n)); },
        py::arg("lam"), py::arg("n"));
  m.def("recurrence", [](const py::object& lam, int n) { return to_py(schur_ones_recurrence(to_partition(lam), n)); },
        py::arg("lam"), py::arg("n"));
  m.def("count_ssyt", [](const py::object& lam, int k) { return to_py(count_ssyt(to_partition(lam), k)); },
        py::arg("lam"), py::arg("k"));

  m.def("horizontal_strip_predecessors", [](const py::object& lam) {
    py::list out;
    for (const auto& mu : horizontal_strip_predecessors(to_partition(lam))) out.append(to_py(mu));
    return out;
  }, py::arg("lam"));

  m.def("weight_vectors", [](const py::object& lam, int k, std::size_t max_tableaux) {
    py::list out;
    for (const auto& w : weight_vectors(to_partition(lam), k, EnumerationLimits{max_tableaux})) {
      out.append(py::cast(w.counts));
    }
    return out;
  }, py::arg("lam"), py::arg("k"), py::arg("max_tableaux") = 1'000'000);

  m.def("schur_expand_product", [](const py::object& lam, int k) {
    return expansion_dict(top_chern_class_expansion(to_partition(lam), k));
  }, py::arg("lam"), py::arg("k"),
     "Schur expansion of prod_T (sum_i T(i) x_i) over SSYT of the shape with labels <= k");

  m.def("top_chern_nonzero", [](const py::object& lam, int k, int n, std::size_t max_tableaux,
                                std::size_t max_terms) {
    return chern_dict(top_chern_nonzero(to_partition(lam), k, n, limits(max_tableaux, max_terms)));
  }, py::arg("lam"), py::arg("k"), py::arg("n"), py::arg("max_tableaux") = 1'000'000,
     py::arg("max_terms") = 5'000'000);

  m.def("decide", [](const py::object& lam, int k, int n) {
    return verdict_dict(decide(to_partition(lam), k, n));
  }, py::arg("lam"), py::arg("k"), py::arg("n"));

  m.def("threshold_n", [](const py::object& lam, int k) { return to_py(threshold_n(to_partition(lam), k)); },
        py::arg("lam"), py::arg("k"));

  m.def("tevelev_inequalities", [](const py::object& lam, int k, int n) {
    const auto report = tevelev_inequalities(to_partition(lam), k, n);
    py::list rows;
    for (const auto& r : report.rows) {
      py::dict row;
      row["i"] = r.i;
      row["lhs"] = to_py(r.lhs);
      row["rhs"] = to_py(r.rhs);
      row["holds"] = r.holds;
      rows.append(row);
    }
    py::dict d;
    d["rows"] = rows;
    d["all_hold"] = report.all_hold;
    return d;
  }, py::arg("lam"), py::arg("k"), py::arg("n"));

  m.def("proof_chain", [](const py::object& lam, int k, int n) {
    const auto report = verify_proof_chain(to_partition(lam), k, n);
    py::list steps;
    for (const auto& s : report.steps) {
      py::dict step;
      step["label"] = s.label;
      step["lhs"] = to_py(s.lhs);
      step["relation"] = std::string(relation_symbol(s.relation));
      step["rhs"] = to_py(s.rhs);
      steps.append(step);
    }
    py::dict d;
    d["terminal_case"] = report.terminal_case;
    d["steps"] = steps;
    return d;
  }, py::arg("lam"), py::arg("k"), py::arg("n"));

  m.def("cross_validate", [](const py::object& lam, int k, int n) {
    const auto cv = cross_validate(to_partition(lam), k, n);
    py::dict d;
    d["decision"] = verdict_dict(cv.decision);
    d["oracle"] = chern_dict(cv.oracle);
    d["agree"] = cv.agree;
    return d;
  }, py::arg("lam"), py::arg("k"), py::arg("n"));
}
