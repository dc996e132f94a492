#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fuglede/cli.hpp"
#include "fuglede/error.hpp"
#include "fuglede/fourier.hpp"
#include "fuglede/repro.hpp"
#include "fuglede/scene.hpp"
#include "fuglede/spectra.hpp"
#include "fuglede/tiling.hpp"

namespace py = pybind11;
using namespace fuglede;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

Rational rational(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) {
    return parse_rational(py::str(h).cast<std::string>());
  }
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator") &&
      !py::isinstance<py::float_>(h)) {
    return parse_rational(py::str(h.attr("numerator")).cast<std::string>() +
                          "/" +
                          py::str(h.attr("denominator")).cast<std::string>());
  }
  return Rational(h.cast<double>());
}

py::dict zero_dict(const ZeroCertificate& z) {
  py::dict d;
  d["re"] = py::make_tuple(z.enclosure.re_lo, z.enclosure.re_hi);
  d["im"] = py::make_tuple(z.enclosure.im_lo, z.enclosure.im_hi);
  d["winding"] = z.winding;
  d["kind"] = to_string(z.kind);
  d["exact"] = z.exact ? fraction(*z.exact) : py::none();
  d["at_boundary"] = z.at_boundary;
  return d;
}

}  // namespace

PYBIND11_MODULE(_fuglede, m) {
  m.doc() = "Exact and certified checks for spectral sets and tilings";

  py::register_exception<Error>(m, "FugledeError");

  py::class_<StepSet>(m, "StepSet")
      .def(py::init([](const std::string& text) { return parse_step_set(text); }),
           py::arg("text"))
      .def("measure", [](const StepSet& s) { return fraction(s.measure()); })
      .def("intervals",
           [](const StepSet& s) {
             py::list out;
             for (const auto& p : s.intervals()) {
               out.append(py::make_tuple(fraction(p.lo), fraction(p.hi)));
             }
             return out;
           })
      .def("is_symmetric", &StepSet::is_symmetric)
      .def("translate",
           [](const StepSet& s, const py::object& x) {
             return s.translate(rational(x));
           })
      .def("__len__", &StepSet::size)
      .def("__eq__", [](const StepSet& a, const StepSet& b) { return a == b; })
      .def("__str__", &StepSet::to_string)
      .def("__repr__",
           [](const StepSet& s) { return "StepSet('" + s.to_string() + "')"; });
  py::implicitly_convertible<std::string, StepSet>();

  m.def("difference_set",
        [](const StepSet& d) { return difference_set(d).to_string(); });

  m.def(
      "covering_report",
      [](const StepSet& e, const std::string& lambda, const py::object& lo,
         const py::object& hi) {
        const auto rep = covering_report(e, parse_translation_set(lambda),
                                         rational(lo), rational(hi));
        py::dict d;
        d["classification"] = to_string(rep.classification);
        d["min"] = fraction(rep.min_multiplicity);
        d["max"] = fraction(rep.max_multiplicity);
        return d;
      },
      py::arg("e"), py::arg("lam"), py::arg("lo"), py::arg("hi"));

  m.def(
      "weak_tiling_check",
      [](const StepSet& e, const std::string& comb, const py::object& lo,
         const py::object& hi) {
        const auto res =
            weak_tiling_check(e, parse_comb(comb), rational(lo), rational(hi));
        return py::make_tuple(res.pass, fraction(res.max_deviation));
      },
      py::arg("e"), py::arg("mu"), py::arg("lo"), py::arg("hi"));

  m.def(
      "xhat",
      [](const StepSet& e, std::complex<double> z) {
        const auto v = xhat_eval(e, z);
        return py::make_tuple(v.value, v.error_bound);
      },
      py::arg("e"), py::arg("z"));
  m.def(
      "is_exact_zero",
      [](const StepSet& e, const py::object& xi) {
        return is_exact_zero(e, rational(xi));
      },
      py::arg("e"), py::arg("xi"));

  m.def(
      "locate_real_zeros",
      [](const StepSet& e, const py::object& lo, const py::object& hi,
         double tol) {
        const auto zs = locate_real_zeros(e, rational(lo), rational(hi), tol);
        py::list out;
        for (const auto& z : zs.zeros) out.append(zero_dict(z));
        return py::make_tuple(out, zs.inconclusive.size());
      },
      py::arg("e"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-10);

  m.def(
      "certify_zero_free",
      [](const StepSet& e, const py::object& lo, const py::object& hi,
         double resolution) {
        const auto c =
            certify_zero_free(e, rational(lo), rational(hi), resolution);
        py::dict d;
        d["status"] = to_string(c.status);
        d["min_lower_bound"] = c.min_lower_bound;
        d["zero"] = c.zero ? py::object(zero_dict(*c.zero)) : py::none();
        return d;
      },
      py::arg("e"), py::arg("lo"), py::arg("hi"),
      py::arg("resolution") = 1e-10);

  m.def(
      "tiling_factorization",
      [](const StepSet& e) {
        const auto f = tiling_factorization(e);
        return py::make_tuple(f.f, f.max_residual);
      },
      py::arg("e"));

  m.def(
      "jensen_audit",
      [](const StepSet& e, double rho) {
        const auto j = jensen_audit(e, rho);
        py::dict d;
        d["lhs"] = j.lhs;
        d["rhs"] = j.rhs;
        d["lhs_error"] = j.lhs_error;
        d["rhs_error"] = j.rhs_error;
        d["zeros"] = j.zeros_used.size();
        d["bound"] = j.paper_bound ? py::cast(*j.paper_bound) : py::none();
        return d;
      },
      py::arg("e"), py::arg("rho"));

  m.def(
      "growth_contradiction",
      [](int n) {
        const auto g = growth_contradiction(n);
        return py::make_tuple(g.lower, g.upper, g.violated);
      },
      py::arg("n"));
  m.def("smallest_violating_n", &smallest_violating_n, py::arg("n_max") = 100);

  m.def(
      "lemma21_min",
      [](const StepSet& e, const py::object& delta) {
        return fraction(lemma21_min(e, rational(delta)));
      },
      py::arg("e"), py::arg("delta") = "1/100");

  m.def(
      "prop31_reconstruct",
      [](const StepSet& e) {
        const auto tr = prop31_reconstruct(e);
        py::dict d;
        d["r"] = fraction(tr.r);
        d["t"] = fraction(tr.t);
        d["branch"] = tr.branch;
        d["k_min"] = fraction(tr.k_min);
        d["residual_max"] = fraction(tr.residual_max);
        d["pass"] = tr.pass;
        return d;
      },
      py::arg("e"));

  m.def(
      "orthogonality_check",
      [](const StepSet& e, const std::string& lambda, const py::object& r) {
        return orthogonality_check(e, parse_translation_set(lambda),
                                   rational(r))
            .residual;
      },
      py::arg("e"), py::arg("lam"), py::arg("radius"));

  m.def(
      "build_dn",
      [](const py::object& t0, int n) {
        const auto dn = build_dn(rational(t0), n);
        return py::make_tuple(dn.d, dn.d_minus_d.to_string(),
                              dn.d_minus_d == dn.expected);
      },
      py::arg("t0"), py::arg("n"));

  m.def(
      "dset_condition",
      [](const StepSet& e, const StepSet& d) {
        const auto r = dset_condition(e, d);
        py::dict out;
        out["holds"] = r.holds;
        out["branch"] = to_string(r.branch);
        out["measure_d"] = fraction(r.measure_d);
        out["zero"] = r.zero ? py::object(zero_dict(*r.zero)) : py::none();
        return out;
      },
      py::arg("e"), py::arg("d"));

  m.def(
      "parse_scene",
      [](const std::string& text) { return parse_scene(text).print(); },
      py::arg("text"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
