#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symchar/basic_sets.hpp"
#include "symchar/cache.hpp"
#include "symchar/kschur.hpp"
#include "symchar/linalg.hpp"
#include "symchar/reg_sing.hpp"
#include "symchar/series.hpp"

namespace py = pybind11;
using namespace symchar;

namespace {

py::int_ to_py(const Integer& x) {
  const std::string s = x.get_str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Rational& x) {
  if (x.get_den() == 1) return to_py(Integer(x.get_num()));
  return py::module_::import("fractions").attr("Fraction")(to_py(Integer(x.get_num())), to_py(Integer(x.get_den())));
}

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

template <typename T>
py::list rows_of(const Matrix<T>& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    out.append(row);
  }
  return out;
}

IntMatrix matrix_of(const std::vector<std::vector<py::object>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = from_py(rows[i][j]);
  }
  return m;
}

std::vector<std::string> names(const std::vector<Partition>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l.str());
  return out;
}

py::dict verdict_dict(const Verdict& v) {
  py::list checks;
  for (const auto& c : v.checks) {
    py::dict w;
    for (const auto& x : c.witnesses) w[py::str(x.key)] = x.value;
    py::dict d;
    d["name"] = c.name;
    d["status"] = std::string(to_string(c.status));
    d["evidence"] = std::string(to_string(c.evidence));
    d["statement"] = c.statement;
    d["witnesses"] = w;
    checks.append(d);
  }
  py::dict d;
  d["subject"] = v.subject;
  d["passed"] = v.passed();
  d["checks"] = checks;
  return d;
}

CharTable table(int n) { return load_or_build(n, default_cache_dir()); }

py::dict labeled(const LabeledTable& t) {
  py::dict d;
  d["n"] = t.n;
  d["labels"] = names(t.labels);
  d["rows"] = rows_of(t.values);
  return d;
}

}  // namespace

PYBIND11_MODULE(_symchar, m) {
  m.doc() = "Exact character tables of symmetric groups, cut submatrices, basic sets and Cartan determinants";

  py::register_exception<CapacityError>(m, "CapacityError");
  py::register_exception<KTableError>(m, "KTableError", PyExc_ValueError);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_ArithmeticError);

  m.def("partitions", [](int n, const std::string& set) { return names(enumerate(n, PartSet::parse(set))); },
        py::arg("n"), py::arg("set") = "all", "Partitions of n with parts in the set, ascending");
  m.def("stats", [](const std::string& p) {
        const auto s = stats(Partition::parse(p));
        return py::make_tuple(to_py(s.a), to_py(s.b), to_py(s.z));
      }, py::arg("partition"), "(a, b, z) for a partition");

  m.def("character_table", [](int n) { return labeled(table(n)); }, py::arg("n"));
  m.def("permutation_table", [](int n) { return labeled(build_perm_table(n)); }, py::arg("n"));
  m.def("character_value", [](const std::string& l, const std::string& mu) {
        return to_py(character_value(Partition::parse(l), Partition::parse(mu)));
      }, py::arg("character"), py::arg("cls"));

  m.def("det", [](const std::vector<std::vector<py::object>>& rows) { return to_py(det(matrix_of(rows))); },
        py::arg("rows"));
  m.def("snf", [](const std::vector<std::vector<py::object>>& rows) {
        py::list out;
        for (const auto& f : snf(matrix_of(rows)).invariant_factors) out.append(to_py(f));
        return out;
      }, py::arg("rows"), "Smith invariant factors");

  m.def("split", [](int n, const std::string& alpha) {
        const CharTable x = table(n);
        const SplitReport s = split(x, Cut::parse(alpha, n));
        py::dict d;
        d["small_count"] = s.small_count;
        d["x_small"] = rows_of(s.x_small);
        d["x_large"] = rows_of(s.x_large);
        d["xbar_small"] = rows_of(s.xbar_small);
        d["xbar_large"] = rows_of(s.xbar_large);
        return d;
      }, py::arg("n"), py::arg("alpha"));

  m.def("cartan", [](int n, const std::string& alpha) {
        const CartanReport r = cartan_report(table(n), Cut::parse(alpha, n));
        py::dict d;
        d["d_hat"] = rows_of(r.small.d_hat);
        d["d_hat_dual"] = rows_of(r.large.d_hat);
        d["c_small"] = rows_of(r.c_small);
        d["c_large"] = rows_of(r.c_large);
        d["det_small"] = to_py(r.det_small);
        d["det_large"] = to_py(r.det_large);
        d["predicted"] = to_py(r.predicted);
        return d;
      }, py::arg("n"), py::arg("alpha"));

  m.def("verify", [](int n, std::optional<std::string> alpha) {
        const CharTable x = table(n);
        py::list out;
        const auto cuts = alpha ? std::vector<Cut>{Cut::parse(*alpha, n)} : all_cuts(n);
        for (const auto& cut : cuts) out.append(verdict_dict(verify_cut(x, cut)));
        return out;
      }, py::arg("n"), py::arg("alpha") = py::none(), "Cut verdicts; every cut when alpha is None");

  m.def("series", [](const std::string& set, int p, int order) {
        const PartSet s = PartSet::parse(set);
        auto coeffs = [](const TruncSeries& t) {
          py::list l;
          for (const auto& c : t.coeffs()) l.append(to_py(c));
          return l;
        };
        const AbSeries ab = ab_series(s, p, order);
        py::dict d;
        d["P"] = coeffs(p_series(s, order));
        d["T"] = coeffs(t_series(s, order));
        d["L"] = coeffs(l_series(s, order));
        d["E"] = coeffs(e_series(s, p, order));
        d["F"] = coeffs(f_series(s, p, order));
        d["A"] = coeffs(ab.a);
        d["B"] = coeffs(ab.b);
        return d;
      }, py::arg("set"), py::arg("prime"), py::arg("order") = kDefaultSeriesOrder);
  m.def("verify_series", [](const std::string& set, int p, int order) {
        return verdict_dict(verify_valuation_series(PartSet::parse(set), p, order));
      }, py::arg("set"), py::arg("prime"), py::arg("order") = kDefaultSeriesOrder);

  m.def("verify_regular_singular", [](int n, int ell) { return verdict_dict(verify_regular_singular(table(n), ell)); },
        py::arg("n"), py::arg("ell"));

  m.def("ktable_fixture", [](int n, int k, const std::string& path) { save_ktable(make_trivial_fixture(n, k), path); },
        py::arg("n"), py::arg("k"), py::arg("path"));
  m.def("verify_ktable", [](const std::string& path) {
        const KTable t = load_ktable(path);
        return py::make_tuple(verdict_dict(verify_transition_theorem(t, table(t.n))),
                              verdict_dict(verify_dual_observations(t)));
      }, py::arg("path"), "(transition verdict, dual-table verdict) for a k-table file");
}
