#include "fuglede/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "fuglede/analysis.hpp"
#include "fuglede/error.hpp"
#include "fuglede/fourier.hpp"
#include "fuglede/repro.hpp"
#include "fuglede/scene.hpp"
#include "fuglede/spectra.hpp"
#include "fuglede/tiling.hpp"

namespace fuglede {

namespace {

struct Flags {
  std::string scene_path;
  std::vector<std::string> window;
  std::string tol;
  std::string rho;
  std::string radius;
  std::string trunc;
  std::string grid;
  std::string csv;
  std::string delta;
  std::string imag;
  std::string moduli;
  int n = 8;
  std::vector<std::string> positional;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  Flags flags;
  Scene scene;

  Param number(const std::string& text, const char* what) const {
    if (auto it = scene.params.find(text); it != scene.params.end()) {
      return it->second;
    }
    try {
      return parse_param(text);
    } catch (const Error&) {
      throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
  }

  Rational rational(const std::string& text, const char* what) const {
    const Param p = number(text, what);
    return p.exact ? *p.exact : Rational(p.value);
  }

  double real(const std::string& text, const char* what) const {
    return number(text, what).value;
  }

  double tol_or(double fallback) const {
    return flags.tol.empty() ? fallback : real(flags.tol, "tolerance");
  }

  StepSet set(const std::string& text) const {
    if (auto it = scene.sets.find(text); it != scene.sets.end()) {
      return it->second;
    }
    try {
      return parse_step_set(text);
    } catch (const Error& e) {
      throw UsageError("'" + text + "' is neither a set in the scene nor a "
                       "set literal (" + e.what() + ")");
    }
  }

  TranslationSet lattice(const std::string& text) const {
    if (auto it = scene.lattices.find(text); it != scene.lattices.end()) {
      return it->second;
    }
    try {
      return parse_translation_set(text);
    } catch (const Error& e) {
      throw UsageError("'" + text + "' is neither a translation set in the "
                       "scene nor a literal (" + e.what() + ")");
    }
  }

  DiracComb comb(const std::string& text) const {
    if (auto it = scene.combs.find(text); it != scene.combs.end()) {
      return it->second;
    }
    if (auto it = scene.lattices.find(text); it != scene.lattices.end()) {
      return it->second.to_comb();
    }
    try {
      return parse_comb(text);
    } catch (const Error& e) {
      throw UsageError("'" + text + "' is neither a comb in the scene nor a "
                       "literal (" + e.what() + ")");
    }
  }

  const std::string& arg(std::size_t i, const char* what) const {
    if (i >= flags.positional.size()) {
      throw UsageError(std::string("missing argument: ") + what);
    }
    return flags.positional[i];
  }

  std::optional<std::pair<Rational, Rational>> window() const {
    if (flags.window.empty()) return std::nullopt;
    Rational lo = rational(flags.window[0], "window start");
    Rational hi = rational(flags.window[1], "window end");
    if (!(lo < hi)) throw UsageError("window needs a < b");
    return std::pair{lo, hi};
  }

  template <class Writer>
  void csv(Report& r, Writer&& write) const {
    if (flags.csv.empty()) return;
    std::ofstream out(flags.csv);
    if (!out) throw UsageError("cannot write '" + flags.csv + "'");
    write(out);
    r.set("csv", flags.csv);
  }
};

Status cert_status(CertStatus s) {
  switch (s) {
    case CertStatus::zero_free: return Status::pass;
    case CertStatus::zero_found: return Status::fail;
    case CertStatus::inconclusive: return Status::inconclusive;
  }
  return Status::inconclusive;
}

void put_zero(Report& r, const std::string& key, const ZeroCertificate& z) {
  r.set(key + ".re", format_double(z.enclosure.re_lo) + " " +
                         format_double(z.enclosure.re_hi));
  r.set(key + ".im", format_double(z.enclosure.im_lo) + " " +
                         format_double(z.enclosure.im_hi));
  r.set(key + ".winding", z.winding);
  r.set(key + ".kind", to_string(z.kind));
  if (z.real_by_symmetry) r.set(key + ".real_by_symmetry", true);
  if (z.exact) r.set(key + ".exact", *z.exact);
}

// ------------------------------------------------------------- commands

void cmd_tile_check(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const auto l = c.lattice(c.arg(1, "LAMBDA"));
  const auto w = c.window().value_or(
      default_window(e, l.period().value_or(Rational(1))));
  r.input("set", e.to_string());
  r.input("lambda", l.to_string());
  r.input("window", to_string(w.first) + " " + to_string(w.second));
  const auto rep = covering_report(e, l, w.first, w.second);
  r.set("classification", to_string(rep.classification));
  r.set("min_multiplicity", rep.min_multiplicity);
  r.set("max_multiplicity", rep.max_multiplicity);
  c.csv(r, [&](std::ostream& o) { rep.covering.write_csv(o); });
  r.check("tiling", rep.classification == Classification::tiling
                        ? Status::pass
                        : Status::fail);
}

void cmd_weak_tile(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const auto mu = c.comb(c.arg(1, "COMB"));
  const auto w = c.window().value_or(default_window(
      e, mu.periodic() ? mu.periodic()->period : Rational(1)));
  r.input("set", e.to_string());
  r.input("mu", mu.to_string());
  r.input("window", to_string(w.first) + " " + to_string(w.second));
  const auto res = weak_tiling_check(e, mu, w.first, w.second);
  r.set("max_deviation", res.max_deviation);
  c.csv(r, [&](std::ostream& o) { res.residual.write_csv(o); });
  r.check("weak-tiling", res.pass ? Status::pass : Status::fail);
}

void cmd_xhat(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const auto xi = c.number(c.arg(1, "XI"), "frequency");
  const double y = c.flags.imag.empty() ? 0.0 : c.real(c.flags.imag, "imag");
  r.input("set", e.to_string());
  r.input("xi", to_string(xi));
  if (y != 0.0) r.input("imag", format_double(y));
  const IndicatorTransform f(e);
  const auto v = (xi.exact && y == 0.0) ? f.at(*xi.exact)
                                        : f(Complex(xi.value, y));
  r.set("re", v.value.real());
  r.set("im", v.value.imag());
  r.set("abs", v.abs());
  r.set("error_bound", v.error_bound);
  r.set("exact_zero", v.exact && v.abs() == 0.0);
}

void cmd_zeros(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const auto w = c.window().value_or(std::pair{Rational(0), Rational(4)});
  const double tol = c.tol_or(1e-10);
  r.input("set", e.to_string());
  r.input("window", to_string(w.first) + " " + to_string(w.second));
  r.input("tol", format_double(tol));
  const auto zs = locate_real_zeros(e, w.first, w.second, tol);
  r.set("count", zs.zeros.size());
  for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
    put_zero(r, "zero." + std::to_string(i), zs.zeros[i]);
    if (zs.zeros[i].at_boundary) {
      r.set("zero." + std::to_string(i) + ".at_boundary", true);
    }
  }
  r.set("unresolved", zs.inconclusive.size());
  c.csv(r, [&](std::ostream& o) { write_zero_csv(o, zs.zeros); });
  r.check("resolved", zs.inconclusive.empty() ? Status::pass
                                               : Status::inconclusive);
}

void cmd_zero_free(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const auto w = c.window().value_or(
      std::pair{Rational(-1, 2), Rational(1, 2)});
  const double tol = c.tol_or(1e-10);
  r.input("set", e.to_string());
  r.input("window", to_string(w.first) + " " + to_string(w.second));
  r.input("resolution", format_double(tol));
  const auto cert = certify_zero_free(e, w.first, w.second, tol);
  r.set("certificate", to_string(cert.status));
  r.set("pieces", cert.pieces.size());
  if (cert.status == CertStatus::zero_free) {
    r.set("min_lower_bound", cert.min_lower_bound);
  }
  if (cert.zero) put_zero(r, "zero", *cert.zero);
  r.set("boundary_zeros", cert.boundary_zeros.size());
  r.set("unresolved", cert.unresolved.size());
  r.check("zero-free", cert_status(cert.status));
}

void cmd_factorize(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const double tol = c.tol_or(1e-11);
  r.input("set", e.to_string());
  r.input("tol", format_double(tol));
  try {
    const auto fac = tiling_factorization(e);
    r.set("F", fac.f.to_string());
    r.set("frequencies", fac.frequencies.size());
    r.set("max_residual", fac.max_residual);
    r.check("factorization", fac.max_residual < tol ? Status::pass
                                                    : Status::fail);
  } catch (const NotZTilingError& err) {
    r.set("error", err.what());
    c.csv(r, [&](std::ostream& o) { err.covering().write_csv(o); });
    r.check("z-tiling", Status::fail);
  }
}

void cmd_lemma21(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const Rational delta = c.flags.delta.empty()
                             ? Rational(1, 100)
                             : c.rational(c.flags.delta, "delta");
  r.input("set", e.to_string());
  r.input("delta", to_string(delta));
  const Rational m = lemma21_min(e, delta);
  r.set("min", m);
  r.check("positive", m > 0 ? Status::pass : Status::fail);
  c.csv(r, [&](std::ostream& o) { autocorrelation(e).write_csv(o); });
}

void cmd_prop31(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  r.input("set", e.to_string());
  const auto tr = prop31_reconstruct(e, c.window());
  r.set("shift", tr.shift);
  r.set("normalized", tr.normalized.to_string());
  r.set("r", tr.r);
  r.set("t", tr.t);
  r.set("r_minus_1_minus_t", tr.gap);
  r.set("branch", tr.branch);
  r.set("atom_spacing", tr.step);
  r.set("k_min", tr.k_min);
  r.set("k_interval", "[-" + to_string(1 - tr.k_delta) + ", " +
                          to_string(1 - tr.k_delta) + "]");
  if (tr.g) {
    r.set("g_at_zero", *tr.g_at_zero);
    r.set("g_min", *tr.g_min);
  }
  r.set("mu", tr.mu.to_string());
  r.set("window", to_string(tr.lo) + " " + to_string(tr.hi));
  r.set("residual_max", tr.residual_max);
  r.set("convolution_identity", tr.convolution_identity);
  c.csv(r, [&](std::ostream& o) { tr.residual.write_csv(o); });
  r.check("residual-zero", tr.pass ? Status::pass : Status::fail);
}

void cmd_jensen(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  if (c.flags.rho.empty()) throw UsageError("jensen needs --rho");
  const double rho = c.real(c.flags.rho, "rho");
  const double tol = c.tol_or(1e-6);
  r.input("set", e.to_string());
  r.input("rho", format_double(rho));
  r.input("tol", format_double(tol));
  const auto j = jensen_audit(e, rho);
  r.set("zeros_in_disc", j.zeros_used.size());
  r.set("zeros_on_circle", j.zeros_on_circle);
  r.set("lhs", j.lhs);
  r.set("lhs_error", j.lhs_error);
  r.set("rhs", j.rhs);
  r.set("rhs_error", j.rhs_error);
  r.set("discrepancy", j.discrepancy());
  c.csv(r, [&](std::ostream& o) { write_zero_csv(o, j.zeros_used); });
  r.check("jensen-identity", j.agrees(tol) ? Status::pass : Status::fail);
  if (j.paper_bound) {
    r.set("bound_3rho", *j.paper_bound);
    r.check("rhs-at-most-3rho",
            j.within_bound(tol) ? Status::pass : Status::fail);
  }
}

void cmd_growth(const Context& c, Report& r) {
  const int n = std::stoi(c.arg(0, "N"));
  r.input("N", std::to_string(n));
  std::optional<std::span<const double>> span;
  std::vector<double> moduli;
  if (!c.flags.moduli.empty()) {
    std::stringstream ss(c.flags.moduli);
    std::string item;
    while (std::getline(ss, item, ',')) moduli.push_back(c.real(item, "modulus"));
    span = std::span<const double>(moduli);
    r.input("moduli", c.flags.moduli);
  }
  const auto g = growth_contradiction(n, span);
  r.set("lower", g.lower);
  r.set("upper", g.upper);
  r.set("violated", g.violated);
  r.set("smallest_violating_N", smallest_violating_n(std::max(n, 100)));
}

void cmd_orthogonality(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const auto l = c.lattice(c.arg(1, "LAMBDA"));
  const Rational radius = c.flags.radius.empty()
                              ? Rational(50)
                              : c.rational(c.flags.radius, "radius");
  const double tol = c.tol_or(1e-12);
  r.input("set", e.to_string());
  r.input("lambda", l.to_string());
  r.input("radius", to_string(radius));
  r.input("tol", format_double(tol));
  const auto o = orthogonality_check(e, l, radius);
  r.set("residual", o.residual);
  r.set("error_bound", o.error_bound);
  if (o.residual > 0) r.set("worst_difference", o.worst_difference);
  r.set("points", o.points);
  r.set("differences", o.differences);
  r.set("symbolic_zeros", o.symbolic_zeros);
  r.check("orthogonal", o.residual < tol ? Status::pass : Status::fail);
}

void cmd_completeness(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const auto l = c.lattice(c.arg(1, "LAMBDA"));
  const Rational grid = c.flags.grid.empty()
                            ? Rational(1, 64)
                            : c.rational(c.flags.grid, "grid");
  const Rational radius = c.flags.radius.empty()
                              ? Rational(1000)
                              : c.rational(c.flags.radius, "radius");
  const double tol = c.tol_or(1e-10);
  r.input("set", e.to_string());
  r.input("lambda", l.to_string());
  r.input("grid", to_string(grid));
  r.input("radius", to_string(radius));
  const auto res = completeness_check(e, l, grid, radius);
  r.set("deviation", res.deviation);
  r.set("worst_xi", res.worst_xi);
  r.set("tail_bound", res.tail_bound);
  r.set("error_bound", res.error_bound);
  r.set("grid_points", res.grid_points);
  r.set("terms", res.terms);
  r.check("complete-on-grid",
          res.deviation <= res.tail_bound + res.error_bound + tol
              ? Status::pass
              : Status::fail);
}

void cmd_spectrum(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const auto l = c.lattice(c.arg(1, "LAMBDA"));
  const Rational radius = c.flags.radius.empty()
                              ? Rational(50)
                              : c.rational(c.flags.radius, "radius");
  const Rational trunc = c.flags.trunc.empty()
                             ? Rational(1000)
                             : c.rational(c.flags.trunc, "truncation");
  const Rational grid = c.flags.grid.empty()
                            ? Rational(1, 64)
                            : c.rational(c.flags.grid, "grid");
  const double tol = c.tol_or(1e-10);
  r.input("set", e.to_string());
  r.input("lambda", l.to_string());
  r.input("radius", to_string(radius));
  r.input("truncation", to_string(trunc));
  r.input("grid", to_string(grid));
  r.input("tol", format_double(tol));
  const auto s = spectrum_report(e, l, radius, grid, trunc, tol);
  r.set("orthogonality.residual", s.orthogonality.residual);
  r.set("completeness.deviation", s.completeness.deviation);
  r.set("completeness.tail_bound", s.completeness.tail_bound);
  r.set("verdict", to_string(s.verdict));
  r.check("spectrum", s.verdict == SpectrumVerdict::spectrum_consistent
                          ? Status::pass
                          : Status::fail);
}

void cmd_dn(const Context& c, Report& r) {
  const Rational t0 = c.rational(c.arg(0, "T0"), "t0");
  const int n = std::stoi(c.arg(1, "N"));
  r.input("t0", to_string(t0));
  r.input("n", std::to_string(n));
  const auto dn = build_dn(t0, n);
  r.set("D", dn.d.to_string());
  r.set("measure", dn.measure);
  r.set("D_minus_D", dn.d_minus_d.to_string());
  r.set("expected", dn.expected.to_string());
  r.check("measure-one", dn.measure == 1 ? Status::pass : Status::fail);
  r.check("difference-structure",
          dn.d_minus_d == dn.expected ? Status::pass : Status::fail);
}

void cmd_dset(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const auto d = c.set(c.arg(1, "D"));
  const double tol = c.tol_or(1e-10);
  r.input("set", e.to_string());
  r.input("D", d.to_string());
  const auto res = dset_condition(e, d, tol);
  r.set("measure_D", res.measure_d);
  r.set("D_minus_D", res.d_minus_d.to_string());
  r.set("branch", to_string(res.branch));
  r.set("conclusion", describe(res.branch));
  if (res.zero) put_zero(r, "zero", *res.zero);
  for (std::size_t i = 0; i < res.endpoint_zeros.size(); ++i) {
    r.set("endpoint_zero." + std::to_string(i), res.endpoint_zeros[i]);
  }
  r.check("condition", res.holds ? Status::pass
                       : res.branch == DsetBranch::inconclusive
                           ? Status::inconclusive
                           : Status::fail);
}

void cmd_product(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET_E"));
  const auto f = c.set(c.arg(1, "SET_F"));
  const auto le = c.lattice(c.arg(2, "LAMBDA_E"));
  const auto lf = c.lattice(c.arg(3, "LAMBDA_F"));
  const Rational radius = c.flags.radius.empty()
                              ? Rational(10)
                              : c.rational(c.flags.radius, "radius");
  const double tol = c.tol_or(1e-12);
  r.input("E", e.to_string());
  r.input("F", f.to_string());
  r.input("lambda_E", le.to_string());
  r.input("lambda_F", lf.to_string());
  r.input("radius", to_string(radius));
  const auto p = product_spectrum(le, lf);
  const auto o = product_orthogonality(e, f, p, radius);
  r.set("grid_points", p.enumerate(radius).size());
  r.set("first.residual", o.first.residual);
  r.set("second.residual", o.second.residual);
  r.set("residual", o.residual);
  r.check("first-coordinate", o.first.residual < tol ? Status::pass
                                                     : Status::fail);
  r.check("second-coordinate", o.second.residual < tol ? Status::pass
                                                       : Status::fail);
}

void cmd_prop33_scan(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  const double tol = c.tol_or(1e-10);
  r.input("set", e.to_string());
  r.input("N", std::to_string(c.flags.n));
  const auto s = prop33_witness_scan(e, c.flags.n, tol);
  r.set("scan", to_string(s.status));
  r.set("smallest_violating_N", s.smallest_violating);
  if (s.status == ScanStatus::no_zero_below_one) {
    r.set("conclusion",
          "no zero in (0, 1): D = [0, 1) already satisfies the D-set "
          "condition");
    return;
  }
  put_zero(r, "t0", *s.t0_certificate);
  if (s.status == ScanStatus::t0_out_of_range) {
    r.check("t0-in-(1/2,1)", Status::fail);
    return;
  }
  for (const auto& w : s.findings) {
    const std::string k = "n." + std::to_string(w.n);
    r.set(k + ".found", w.found);
    if (w.zero) r.set(k + ".b", w.zero->center().real());
    if (w.boundary_zeros) r.set(k + ".boundary_zeros", w.boundary_zeros);
    if (w.unresolved) r.set(k + ".unresolved", w.unresolved);
  }
  r.set("first_missing",
        s.first_missing ? std::to_string(*s.first_missing) : "none");
  if (s.prefix_growth) {
    r.set("prefix.N", s.prefix_growth->n);
    r.set("prefix.lower", s.prefix_growth->lower);
    r.set("prefix.upper", s.prefix_growth->upper);
    r.set("prefix.violated", s.prefix_growth->violated);
  }
  if (s.dn) {
    r.set("D", s.dn->d.to_string());
    r.set("D_minus_D", s.dn->d_minus_d.to_string());
  }
  const bool unresolved = std::any_of(
      s.findings.begin(), s.findings.end(),
      [](const WitnessFinding& w) { return !w.found && w.unresolved > 0; });
  r.check("gap-found", s.first_missing ? Status::pass
                       : unresolved    ? Status::inconclusive
                                       : Status::fail);
}

void cmd_autocorr(const Context& c, Report& r) {
  const auto e = c.set(c.arg(0, "SET"));
  r.input("set", e.to_string());
  const auto k = autocorrelation(e);
  r.set("breakpoints", k.breakpoints().size());
  std::string xs, ys;
  for (std::size_t i = 0; i < k.breakpoints().size(); ++i) {
    if (i) {
      xs += " ";
      ys += " ";
    }
    xs += to_string(k.breakpoints()[i]);
    ys += to_string(k.values()[i]);
  }
  r.set("x", xs);
  r.set("K", ys);
  c.csv(r, [&](std::ostream& o) { k.write_csv(o); });
}

void cmd_scene_print(const Context& c, Report& r, std::ostream& out) {
  if (c.flags.scene_path.empty()) throw UsageError("scene-print needs --scene");
  (void)r;
  out << c.scene.print();
}

struct Command {
  const char* name;
  const char* help;
  const char* args;
  std::function<void(const Context&, Report&)> run;
};

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse:
    case ErrorCode::unknown_name:
    case ErrorCode::invalid_argument:
    case ErrorCode::empty_interval:
    case ErrorCode::window:
      return kUsageExit;
    case ErrorCode::inconclusive:
    case ErrorCode::circle_too_close:
      return exit_code(Status::inconclusive);
    default:
      return exit_code(Status::fail);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const std::vector<Command> commands = {
      {"tile-check", "classify E + Lambda as tiling / packing / neither",
       "SET LAMBDA", cmd_tile_check},
      {"weak-tile", "check chi_E * mu = chi_{E^c} exactly", "SET COMB",
       cmd_weak_tile},
      {"xhat", "evaluate the Fourier transform of chi_E", "SET XI", cmd_xhat},
      {"zeros", "certified real zeros in --window", "SET", cmd_zeros},
      {"zero-free", "certify that --window holds no zero", "SET",
       cmd_zero_free},
      {"factorize", "factorization of a Z-tiling inside [0, 3/2)", "SET",
       cmd_factorize},
      {"lemma21", "minimum of m(E cap (E+t)) over [0, 1-delta]", "SET",
       cmd_lemma21},
      {"prop31", "weak-tiling uniqueness trace (r, t, K, g, mu)", "SET",
       cmd_prop31},
      {"jensen", "Jensen formula audit on |z| = rho", "SET", cmd_jensen},
      {"growth", "growth bound 4(N log N - log N!) against 3N", "N",
       cmd_growth},
      {"orthogonality", "pairwise orthogonality within --radius",
       "SET LAMBDA", cmd_orthogonality},
      {"completeness", "tight-frame identity on a grid", "SET LAMBDA",
       cmd_completeness},
      {"spectrum", "orthogonality + completeness verdict", "SET LAMBDA",
       cmd_spectrum},
      {"dn", "build D_n = [0,t0) u [n-1+t0, n)", "T0 N", cmd_dn},
      {"dset", "D-set condition (D - D) cap {xhat = 0} = {}", "SET D",
       cmd_dset},
      {"product", "coordinatewise orthogonality of a product spectrum",
       "SET_E SET_F LAMBDA_E LAMBDA_F", cmd_product},
      {"prop33-scan", "scan (n-1, n) for zeros, n = 1..--n", "SET",
       cmd_prop33_scan},
      {"autocorr", "autocorrelation K(t) = m(E cap (E+t))", "SET",
       cmd_autocorr},
  };

  CLI::App app("Exact and certified checks for spectral sets and tilings",
               "fuglede");
  app.require_subcommand(1);
  Flags flags;
  bool no_timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scene", flags.scene_path, "scene file");
    sub->add_option("--window", flags.window, "window a b")->expected(2);
    sub->add_option("--tol", flags.tol, "tolerance / resolution");
    sub->add_option("--rho", flags.rho, "circle radius");
    sub->add_option("--radius", flags.radius, "enumeration radius R");
    sub->add_option("--trunc", flags.trunc, "truncation radius");
    sub->add_option("--grid", flags.grid, "grid step, e.g. 1/64");
    sub->add_option("--csv", flags.csv, "write CSV data to this path");
    sub->add_option("--delta", flags.delta, "lemma21 margin");
    sub->add_option("--imag", flags.imag, "imaginary part of xi");
    sub->add_option("--moduli", flags.moduli, "b_1,...,b_N");
    sub->add_option("--n", flags.n, "scan length N");
    sub->add_flag("--no-timing", no_timing, "omit elapsed time lines");
    sub->add_option("args", flags.positional, "positional arguments");
  };
  std::string selected;
  for (const auto& cmd : commands) {
    auto* sub = app.add_subcommand(cmd.name, std::string(cmd.help) +
                                                 " (args: " + cmd.args + ")");
    add_common(sub);
    sub->callback([&selected, name = cmd.name] { selected = name; });
  }
  auto* repro = app.add_subcommand("paper-repro", "run every stage in order");
  add_common(repro);
  repro->callback([&] { selected = "paper-repro"; });
  auto* print = app.add_subcommand("scene-print",
                                   "parse --scene and print it canonically");
  add_common(print);
  print->callback([&] { selected = "scene-print"; });

  try {
    // CLI11 splits "[a, b]" into a list. Step sets treat ']' as ')', so
    // rewriting the last bracket keeps such arguments whole.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    for (auto& a : reversed) {
      if (a.size() > 1 && a.front() == '[' && a.back() == ']') a.back() = ')';
    }
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageExit;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report(selected);
  try {
    Context ctx{flags, {}};
    if (!flags.scene_path.empty()) {
      ctx.scene = load_scene(flags.scene_path);
      for (const auto& w : ctx.scene.warnings) err << "warning: " << w << '\n';
      report.input("scene", flags.scene_path);
    }
    if (selected == "scene-print") {
      cmd_scene_print(ctx, report, out);
      return 0;
    }
    if (selected == "paper-repro") {
      report = paper_repro(ReproOptions{});
    } else {
      for (const auto& cmd : commands) {
        if (selected != cmd.name) continue;
        std::istringstream names(cmd.args);
        std::size_t expected = 0;
        for (std::string word; names >> word;) ++expected;
        if (flags.positional.size() > expected) {
          throw UsageError("unexpected argument '" +
                           flags.positional[expected] + "' (expected " +
                           cmd.args + ")");
        }
        cmd.run(ctx, report);
      }
    }
  } catch (const UsageError& e) {
    err << "fuglede " << selected << ": " << e.what() << '\n';
    return kUsageExit;
  } catch (const Error& e) {
    err << "fuglede " << selected << ": " << to_string(e.code()) << ": "
        << e.what() << '\n';
    const int code = exit_for(e);
    report.set("error.code", to_string(e.code()));
    report.set("error.message", e.what());
    report.check("completed", code == exit_code(Status::inconclusive)
                                  ? Status::inconclusive
                                  : Status::fail);
    report.set_elapsed(std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count());
    report.write(out, !no_timing);
    return code;
  }
  report.set_elapsed(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count());
  report.write(out, !no_timing);
  return exit_code(report.status());
}

}  // namespace fuglede
