#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilmult/arith.hpp"
#include "nilmult/baer.hpp"
#include "nilmult/catalog.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/formulas.hpp"
#include "nilmult/verify.hpp"

namespace py = pybind11;
using namespace nilmult;

namespace {

// exact integers cross the boundary as python ints, whatever their size
py::int_ big(const Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list divisor_list(const AbelianGroup& g) {
  py::list out;
  for (const Int& d : g.divisors) out.append(big(d));
  return out;
}

py::dict report_dict(const MultiplierReport& r) {
  py::dict d;
  d["prime"] = big(r.prime);
  d["n"] = r.n;
  d["order"] = big(r.order);
  d["class"] = r.nil_class;
  d["m"] = r.derived_exponent;
  d["abelianization"] = divisor_list(r.abelianization);
  d["c_nil"] = r.c_nil;
  d["multiplier"] = divisor_list(r.multiplier);
  d["mult_exponent"] = r.mult_exponent;
  d["s2"] = r.s2 ? py::cast(*r.s2) : py::none();
  d["cutoff"] = r.cutoff;
  return d;
}

std::string kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Classified: return "classified";
    case ClassKind::Impossible: return "impossible";
    case ClassKind::BoundViolation: return "bound violation";
    case ClassKind::BeyondDefect3: return "beyond defect 3";
  }
  return "";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "2-nilpotent multipliers of finite p-groups";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError",
                                           PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError",
                                        PyExc_RuntimeError);

  m.def(
      "analyze",
      [](const std::string& text, int c_nil, std::optional<int> class_hint) {
        AnalyzeOptions opt;
        opt.c_nil = c_nil;
        opt.class_hint = class_hint;
        return report_dict(analyze(parse_presentation(text), opt));
      },
      py::arg("presentation"), py::arg("c_nil") = 2,
      py::arg("class_hint") = py::none(),
      "Multiplier report for a presentation in the .grp text format.");

  m.def(
      "analyze_spec",
      [](const std::string& spec, int c_nil) {
        CatalogEntry e = build_family(spec);
        AnalyzeOptions opt = e.options;
        opt.c_nil = c_nil;
        py::dict d = report_dict(analyze(e.presentation, opt));
        d["family"] = e.family_tag;
        return d;
      },
      py::arg("spec"), py::arg("c_nil") = 2,
      "Multiplier report for a catalog spec string such as 'd8'.");

  m.def(
      "family_info",
      [](const std::string& spec) {
        CatalogEntry e = build_family(spec);
        py::dict d;
        d["spec"] = print_family(e.spec);
        d["prime"] = big(e.p);
        d["n"] = e.n;
        d["class"] = e.nil_class;
        d["family"] = e.family_tag;
        d["abelianization"] = divisor_list(e.abelianization);
        d["predicted_exponent"] = e.predicted_exponent;
        d["predicted_multiplier"] =
            e.predicted_multiplier
                ? py::object(divisor_list(*e.predicted_multiplier))
                : py::object(py::none());
        d["central_order"] = big(e.central_order);
        return d;
      },
      py::arg("spec"), "Declared catalog metadata, without running analyze.");

  m.def(
      "sweep",
      [](const std::vector<long>& primes, int max_n) {
        std::vector<std::string> out;
        for (const FamilySpec& s : sweep(primes, max_n))
          out.push_back(print_family(s));
        return out;
      },
      py::arg("primes"), py::arg("max_n"),
      "Every catalog spec of order p^n, n <= max_n, in sweep order.");

  m.def(
      "classify",
      [](long p, long n, long e) {
        Classification c = classify(Int(p), n, e);
        py::dict d;
        d["kind"] = kind_name(c.kind);
        d["s2"] = c.s2 ? py::cast(*c.s2) : py::none();
        d["families"] = c.families;
        d["note"] = c.note;
        return d;
      },
      py::arg("p"), py::arg("n"), py::arg("e"),
      "What a non-abelian group of order p^n with multiplier exponent e "
      "must look like.");

  m.def("cubic_base", &cubic_base, py::arg("n"));
  m.def("witt_weight3", &witt_weight3, py::arg("n"));
  m.def("exponent_bound", &exponent_bound, py::arg("n"), py::arg("m"));
  m.def("large_derived_ceiling", &large_derived_ceiling, py::arg("n"));
  m.def("order_p2_derived_ceiling", &order_p2_derived_ceiling, py::arg("n"));

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<long>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r ? static_cast<int>(rows[0].size()) : 0;
        IntMatrix a(r, c);
        for (int i = 0; i < r; ++i) {
          if (static_cast<int>(rows[i].size()) != c)
            throw UnsupportedError("ragged matrix");
          for (int j = 0; j < c; ++j) a.at(i, j) = rows[i][j];
        }
        SmithResult s = smith_normal_form(a);
        auto grid = [](const IntMatrix& m_) {
          py::list out;
          for (int i = 0; i < m_.rows(); ++i) {
            py::list row;
            for (int j = 0; j < m_.cols(); ++j) row.append(big(m_.at(i, j)));
            out.append(row);
          }
          return out;
        };
        return py::make_tuple(grid(s.d), grid(s.u), grid(s.v));
      },
      py::arg("matrix"), "Smith form (d, u, v) with u * matrix * v == d.");

  m.def(
      "run_checks",
      [](const std::string& only) {
        py::list out;
        for (const CheckResult& r : run_checks(only)) {
          py::dict d;
          d["group"] = r.group;
          d["name"] = r.name;
          d["expected"] = r.expected;
          d["computed"] = r.computed;
          d["pass"] = r.pass;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("only") = "",
      "Expected-value check table; empty selector runs every group.");
}
