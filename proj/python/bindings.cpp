#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qshelf/gordon.hpp"
#include "qshelf/partitions.hpp"
#include "qshelf/product_forms.hpp"
#include "qshelf/shelves.hpp"
#include "qshelf/suite.hpp"
#include "qshelf/transfer.hpp"
#include "qshelf/xq.hpp"

namespace py = pybind11;
using namespace qshelf;

namespace {

py::int_ to_py(const mpz_class& z) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10)));
}

mpz_class from_py(const py::int_& v) { return mpz_class(py::cast<std::string>(py::str(static_cast<py::handle>(v)))); }

py::list coefficients(const Series& s) {
  py::list out;
  for (const auto& c : s.coeffs()) out.append(to_py(c));
  return out;
}

Family family_of(const std::string& name) { return parse_family(name); }

Series make_series(Exponent valuation, const std::vector<py::int_>& coeffs,
                   std::optional<Exponent> precision) {
  std::vector<mpz_class> cs;
  for (const auto& c : coeffs) cs.push_back(from_py(c));
  if (!precision) return Series::polynomial(valuation, std::move(cs));
  return Series::from_coeffs(valuation, std::move(cs), *precision);
}

py::dict report_dict(const Report& r) {
  return py::module_::import("json").attr("loads")(render_json(r));
}

}  // namespace

PYBIND11_MODULE(_qshelf, m) {
  m.doc() = "Exact truncated q-series and shelf identity checks";

  auto base = py::register_exception<QSeriesError>(m, "QSeriesError", PyExc_RuntimeError);
  py::register_exception<InsufficientPrecision>(m, "InsufficientPrecision", base.ptr());
  py::register_exception<NegativeExponentResidue>(m, "NegativeExponentResidue", base.ptr());
  py::register_exception<LowestCoefficientNotUnit>(m, "LowestCoefficientNotUnit", base.ptr());
  py::register_exception<ZeroSeries>(m, "ZeroSeries", base.ptr());
  py::register_exception<DivergentProduct>(m, "DivergentProduct", base.ptr());
  py::register_exception<StabilizationFailure>(m, "StabilizationFailure", base.ptr());
  py::register_exception<IdentityMismatch>(m, "IdentityMismatch", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  py::class_<Series>(m, "Series")
      .def(py::init(&make_series), py::arg("valuation"), py::arg("coeffs"),
           py::arg("precision") = py::none(),
           "Laurent series sum coeffs[t] q^(valuation+t); exact when precision is None.")
      .def_static("one", &Series::one)
      .def_static("zero", &Series::zero, py::arg("precision"))
      .def_static("monomial", [](const py::int_& c, Exponent e) { return Series::monomial(from_py(c), e); })
      .def_property_readonly("valuation", &Series::valuation)
      .def_property_readonly("precision",
                             [](const Series& s) -> py::object {
                               if (s.is_exact()) return py::none();
                               return py::int_(s.precision());
                             })
      .def_property_readonly("is_exact", &Series::is_exact)
      .def_property_readonly("coeffs", &coefficients)
      .def("coeff", [](const Series& s, Exponent n) { return to_py(s.coeff(n)); })
      .def("coefficients_to", [](const Series& s, Exponent N) {
        py::list out;
        for (Exponent n = 0; n <= N; ++n) out.append(to_py(s.coeff(n)));
        return out;
      }, py::arg("N"), "Coefficients of q^0 .. q^N.")
      .def("truncated", &Series::truncated)
      .def("dump", [](const Series& s) { return dump(s); })
      .def("__add__", [](const Series& a, const Series& b) { return a + b; })
      .def("__sub__", [](const Series& a, const Series& b) { return a - b; })
      .def("__mul__", [](const Series& a, const Series& b) { return a * b; })
      .def("__neg__", [](const Series& a) { return -a; })
      .def("__eq__", [](const Series& a, const Series& b) { return a == b; })
      .def("__repr__", [](const Series& s) {
        std::string head = "Series(valuation=" + std::to_string(s.valuation()) + ", precision=" +
                           (s.is_exact() ? std::string("exact") : std::to_string(s.precision()));
        return head + ", terms=" + std::to_string(s.coeffs().size()) + ")";
      });

  m.def("shift", &shift);
  m.def("invert_unit", &invert_unit, py::arg("a"), py::arg("precision_cap") = kExact);
  m.def("assert_ordinary", [](const Series& s) { return assert_ordinary(s); });

  m.def("f_series", &f_series, py::arg("N"));
  m.def("product", [](const std::string& family, int k, int i, Exponent N) {
    return congruence_product(family_of(family) == Family::gga ? gga_product_spec(k, i)
                                                               : gordon_product_spec(k, i),
                              N);
  }, py::arg("family"), py::arg("k"), py::arg("i"), py::arg("N"));
  m.def("closed_form", [](const std::string& family, int k, int j, int i, Exponent N) {
    return family_closed_form(family_of(family), {k, j, i}, N);
  }, py::arg("family"), py::arg("k"), py::arg("j"), py::arg("i"), py::arg("N"));
  m.def("shelves", [](const std::string& family, int k, int j_max, Exponent N) {
    const auto shelves = family_of(family) == Family::gga ? gga_shelves(k, j_max, N)
                                                          : gordon_shelves(k, j_max, N);
    std::vector<std::vector<Series>> out;
    for (const auto& s : shelves) out.push_back(s.entries);
    return out;
  }, py::arg("family"), py::arg("k"), py::arg("j_max"), py::arg("N"),
     "Recursion-generated shelves 0..j_max, each a list of k series.");
  m.def("h_infinity", [](const std::string& family, int J, int i, int k, Exponent N) {
    return h_infinity(J, i, k, family_of(family), N);
  }, py::arg("family"), py::arg("J"), py::arg("i"), py::arg("k"), py::arg("N"));
  m.def("j_specialized", [](const std::string& family, int j, int k, int i, Exponent N) {
    return j_specialized({family_of(family), j}, k, i, N);
  }, py::arg("family"), py::arg("j"), py::arg("k"), py::arg("i"), py::arg("N"));
  m.def("pochhammer", &pochhammer, py::arg("y_sign"), py::arg("y_exponent"),
        py::arg("base_exponent"), py::arg("count"), py::arg("N"));

  m.def("partitions", [](const std::string& family, int k, int i, int J, int n) {
    PartitionConstraint c;
    c.family = family_of(family);
    c.k = k;
    c.i = i;
    c.J = J;
    return enumerate(c, n);
  }, py::arg("family"), py::arg("k"), py::arg("i"), py::arg("J"), py::arg("n"));
  m.def("genfun", [](const std::string& family, int k, int i, int J, Exponent N) {
    PartitionConstraint c;
    c.family = family_of(family);
    c.k = k;
    c.i = i;
    c.J = J;
    return genfun(c, N);
  }, py::arg("family"), py::arg("k"), py::arg("i"), py::arg("J"), py::arg("N"));

  m.def("run_suite", [](const std::string& suite, int k_min, int k_max, Exponent order, int j_max,
                        std::vector<int> J_values, int parallelism) {
    SuiteConfig c;
    c.suite = parse_suite(suite);
    c.k_min = k_min;
    c.k_max = k_max;
    c.order = order;
    c.j_max = j_max;
    c.J_values = std::move(J_values);
    c.parallelism = parallelism;
    Report r;
    {
      py::gil_scoped_release release;
      r = run_suite(c);
    }
    return report_dict(r);
  }, py::arg("suite") = "all", py::arg("k_min") = 2, py::arg("k_max") = 4, py::arg("order") = 60,
     py::arg("j_max") = 6, py::arg("J_values") = std::vector<int>{0, 1, 2, 3},
     py::arg("parallelism") = 1, "Runs a verification suite and returns the JSON report as a dict.");
  m.def("emit_series", [](const std::string& what, const std::string& family, int k, int i, int j,
                          int J, int l, Exponent order) {
    return emit_series({what, family_of(family), k, i, j, J, l, order});
  }, py::arg("what"), py::arg("family") = "gga", py::arg("k") = 2, py::arg("i") = 1,
     py::arg("j") = 0, py::arg("J") = 0, py::arg("l") = 1, py::arg("order") = 8);
}
