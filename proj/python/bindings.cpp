#include <optional>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "horadam/asymptotics.hpp"
#include "horadam/error.hpp"
#include "horadam/harness.hpp"
#include "horadam/quadratic.hpp"
#include "horadam/recurrence.hpp"
#include "horadam/series.hpp"

namespace py = pybind11;

// Python int <-> mpz_class and fractions.Fraction <-> mpq_class, both through
// decimal strings so arbitrary sizes survive the crossing.
namespace pybind11::detail {

template <>
struct type_caster<horadam::Integer> {
  PYBIND11_TYPE_CASTER(horadam::Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const auto text = str(src).cast<std::string>();
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const horadam::Integer& v, return_value_policy, handle) {
    const std::string text = v.get_str();
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<horadam::Rational> {
  PYBIND11_TYPE_CASTER(horadam::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool convert) {
    if (!src) return false;
    if (PyLong_Check(src.ptr())) {
      type_caster<horadam::Integer> whole;
      if (!whole.load(src, convert)) return false;
      value = horadam::Rational(static_cast<horadam::Integer&>(whole));
      return true;
    }
    if (py::isinstance(src, py::module_::import("fractions").attr("Fraction"))) {
      horadam::Integer num, den;
      if (num.set_str(str(src.attr("numerator")).cast<std::string>(), 10) != 0) return false;
      if (den.set_str(str(src.attr("denominator")).cast<std::string>(), 10) != 0) return false;
      value = horadam::Rational(num, den);
      value.canonicalize();
      return true;
    }
    if (PyUnicode_Check(src.ptr())) {
      try {
        value = horadam::parse_rational(src.cast<std::string>());
        return true;
      } catch (const horadam::Error&) {
        return false;
      }
    }
    return false;
  }

  static handle cast(const horadam::Rational& v, return_value_policy, handle) {
    const auto cls = py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(
        type_caster<horadam::Integer>::cast(v.get_num(), return_value_policy::move, {}));
    py::object den = py::reinterpret_steal<py::object>(
        type_caster<horadam::Integer>::cast(v.get_den(), return_value_policy::move, {}));
    return cls(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace horadam;

py::tuple interval_tuple(const RationalInterval& x) { return py::make_tuple(x.lo(), x.hi()); }

py::dict row_dict(const VerificationRow& r) {
  py::dict d;
  d["n"] = r.n;
  d["sum"] = interval_tuple(r.sum);
  d["inverse"] = interval_tuple(r.inverse);
  d["estimate"] = r.estimate.exact_string();
  d["error"] = interval_tuple(r.error);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Horadam sequences, reciprocal-sum enclosures and asymptotic estimates";

  static py::exception<Error> error_type(m, "HoradamError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("index") = e.index() ? py::cast(*e.index()) : py::none();
      exc.attr("row") = e.row() ? py::cast(*e.row()) : py::none();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<RecurrenceParams>(m, "RecurrenceParams")
      .def(py::init<Integer, Integer, Integer, Integer>(), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"))
      .def_property_readonly("a", &RecurrenceParams::a)
      .def_property_readonly("b", &RecurrenceParams::b)
      .def_property_readonly("p", &RecurrenceParams::p)
      .def_property_readonly("q", &RecurrenceParams::q)
      .def("discriminant", &RecurrenceParams::discriminant)
      .def("__eq__", [](const RecurrenceParams& x, const RecurrenceParams& y) { return x == y; })
      .def("__repr__", [](const RecurrenceParams& x) {
        return "RecurrenceParams(a=" + x.a().get_str() + ", b=" + x.b().get_str() + ", p=" + x.p().get_str() +
               ", q=" + x.q().get_str() + ")";
      });

  py::class_<WeightedSelector>(m, "WeightedSelector")
      .def(py::init<std::int64_t, std::vector<Integer>, std::vector<std::int64_t>>(), py::arg("m"), py::arg("s"),
           py::arg("l"))
      .def_static("block", &WeightedSelector::block, py::arg("m"), py::arg("t"))
      .def_property_readonly("m", &WeightedSelector::stride)
      .def_property_readonly("s", [](const WeightedSelector& s) {
        return std::vector<Integer>(s.weights().begin(), s.weights().end());
      })
      .def_property_readonly("l", [](const WeightedSelector& s) {
        return std::vector<std::int64_t>(s.offsets().begin(), s.offsets().end());
      })
      .def_property_readonly("block_length", &WeightedSelector::block_length);

  m.def("w_iter", &w_iter, py::arg("params"), py::arg("n"));
  m.def("w_fast", &w_fast, py::arg("params"), py::arg("n"));
  m.def("w_range", &w_range, py::arg("params"), py::arg("lo"), py::arg("hi"));
  m.def("weighted_denominator",
        py::overload_cast<const RecurrenceParams&, const WeightedSelector&, std::int64_t>(&weighted_denominator),
        py::arg("params"), py::arg("selector"), py::arg("k"));

  m.def(
      "validity_check",
      [](const RecurrenceParams& params, const WeightedSelector& sel) {
        const auto r = validity_check(params, sel);
        py::dict d;
        d["d_positive"] = r.d_positive;
        d["alpha_gt_one"] = r.alpha_gt_one;
        d["beta_abs_lt_one"] = r.beta_abs_lt_one;
        d["polynomial_condition_holds"] = r.polynomial_condition_holds;
        d["c1_nonzero"] = r.c1_nonzero;
        d["leading_coefficient_nonzero"] = r.leading_coefficient_nonzero;
        d["overall"] = r.overall;
        return d;
      },
      py::arg("params"), py::arg("selector"));

  m.def(
      "sqrt_enclosure", [](const Integer& d, const Rational& eps) { return interval_tuple(sqrt_enclosure(d, eps)); },
      py::arg("radicand"), py::arg("eps"));

  m.def(
      "sum_enclosure",
      [](const RecurrenceParams& params, const WeightedSelector& sel, std::int64_t n, const Rational& eps,
         bool alternating) {
        std::optional<TailEnclosure> tail;
        std::optional<RationalInterval> inverse;
        {
          py::gil_scoped_release release;
          tail = sum_enclosure(SumSpec{params, sel, alternating, n}, eps);
          inverse = inverse_enclosure(*tail);
        }
        py::dict d;
        d["sum"] = interval_tuple(tail->interval);
        d["inverse"] = interval_tuple(*inverse);
        d["terms_used"] = tail->terms_used;
        d["bound"] = tail->bound_kind == BoundKind::geometric ? "geometric" : "alternating";
        return d;
      },
      py::arg("params"), py::arg("selector"), py::arg("n"), py::arg("eps"), py::arg("alternating") = false);

  m.def(
      "partial_sum",
      [](const RecurrenceParams& params, const WeightedSelector& sel, std::int64_t n, std::int64_t K,
         bool alternating) { return partial_sum(SumSpec{params, sel, alternating, n}, K); },
      py::arg("params"), py::arg("selector"), py::arg("n"), py::arg("K"), py::arg("alternating") = false);

  auto estimate = [](EstimateValue v, const Rational& eps) {
    py::dict d;
    d["kind"] = v.is_integer() ? "exact_integer" : "field_valued";
    d["exact"] = v.exact_string();
    if (v.is_integer()) {
      d["value"] = v.integer();
    } else {
      d["value"] = py::make_tuple(v.field().x(), v.field().y(), v.field().radicand());
    }
    d["enclosure"] = interval_tuple(v.enclose(eps));
    return d;
  };
  const Rational default_eps("1/1000000000000000000000000000000");
  m.def(
      "estimate_general",
      [estimate](const RecurrenceParams& p, const WeightedSelector& s, std::int64_t n, bool alternating,
                 const Rational& eps) {
        return estimate(alternating ? estimate_alternating(p, s, n) : estimate_general(p, s, n), eps);
      },
      py::arg("params"), py::arg("selector"), py::arg("n"), py::arg("alternating") = false,
      py::arg("eps") = default_eps);
  m.def(
      "estimate_block",
      [estimate](const RecurrenceParams& p, std::int64_t mm, std::int64_t t, std::int64_t n, bool alternating,
                 const Rational& eps) {
        return estimate(alternating ? estimate_block_alternating(p, mm, t, n) : estimate_block(p, mm, t, n), eps);
      },
      py::arg("params"), py::arg("m"), py::arg("t"), py::arg("n"), py::arg("alternating") = false,
      py::arg("eps") = default_eps);

  m.def(
      "verify_run",
      [](const RecurrenceParams& params, const WeightedSelector& sel, const std::string& family,
         std::int64_t n_first, std::int64_t n_last, const Rational& eps, unsigned threads) {
        std::vector<VerificationRow> rows;
        {
          py::gil_scoped_release release;
          rows = verify_run(params, sel, parse_family(family), n_first, n_last, eps, VerifyOptions{threads, {}});
        }
        py::list out;
        for (const auto& r : rows) out.append(row_dict(r));
        return out;
      },
      py::arg("params"), py::arg("selector"), py::arg("family"), py::arg("n_first"), py::arg("n_last"),
      py::arg("eps"), py::arg("threads") = 1);

  m.def(
      "decay_fit",
      [](const RecurrenceParams& params, const WeightedSelector& sel, const std::string& family,
         std::int64_t n_first, std::int64_t n_last, const Rational& eps) {
        const auto rows = verify_run(params, sel, parse_family(family), n_first, n_last, eps);
        const auto fit = decay_fit(rows, spectral(params), sel.stride());
        py::dict d;
        d["ratio_estimate"] = fit.ratio_estimate;
        d["predicted_ratio"] = interval_tuple(fit.predicted_ratio);
        d["r_squared"] = fit.r_squared;
        d["rows_used"] = fit.rows_used;
        d["agrees_15_percent"] = fit.agrees(Rational(3, 20));
        return d;
      },
      py::arg("params"), py::arg("selector"), py::arg("family"), py::arg("n_first"), py::arg("n_last"),
      py::arg("eps"));

  m.def(
      "round_identity_scan",
      [](const RecurrenceParams& params, const WeightedSelector& sel, const std::string& family, std::int64_t n_max,
         const Rational& eps) { return round_identity_scan(params, sel, parse_family(family), n_max, eps).onset; },
      py::arg("params"), py::arg("selector"), py::arg("family"), py::arg("n_max"), py::arg("eps"));
}
