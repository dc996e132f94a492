#include "fuglede/repro.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <string>

#include "fuglede/error.hpp"
#include "fuglede/fourier.hpp"
#include "fuglede/random.hpp"
#include "fuglede/spectra.hpp"
#include "fuglede/tiling.hpp"

namespace fuglede {

namespace {

Status pass_if(bool ok) { return ok ? Status::pass : Status::fail; }

const StepSet& golden() {
  static const StepSet s = parse_step_set("[0, 1/2) u [1, 3/2)");
  return s;
}

const StepSet& three_piece() {
  static const StepSet s = parse_step_set("[0, 1/8) u [1/4, 1) u [9/8, 5/4)");
  return s;
}

const StepSet& two_thirds_set() {
  static const StepSet s = parse_step_set("[0, 1/2] u [3/4, 5/4]");
  return s;
}

Report stage_golden(const ReproOptions&) {
  Report r("golden-example");
  const auto& e = golden();
  r.input("E", e.to_string());
  const auto half = TranslationSet::lattice({0, Rational(1, 2)}, 2);
  const auto z = TranslationSet::lattice({0}, 1);
  const auto c1 = covering_report(e, half, -4, 4);
  r.set("tiling.lambda", half.to_string());
  r.set("tiling.classification", to_string(c1.classification));
  r.check("tiles-by-half-lattice",
          pass_if(c1.classification == Classification::tiling));
  const auto c2 = covering_report(e, z, -4, 4);
  r.set("z.classification", to_string(c2.classification));
  r.set("z.multiplicities",
        to_string(c2.min_multiplicity) + " " + to_string(c2.max_multiplicity));
  r.check("not-a-z-tiling", pass_if(c2.classification ==
                                    Classification::neither));
  const auto orth = orthogonality_check(e, half, 50);
  r.set("orthogonality.radius", Rational(50));
  r.set("orthogonality.residual", orth.residual);
  r.set("orthogonality.tolerance", 1e-12);
  r.check("spectrum-orthogonal", pass_if(orth.residual < 1e-12));
  const auto comp = completeness_check(e, half, Rational(1, 16), 400);
  r.set("completeness.deviation", comp.deviation);
  r.set("completeness.tail_bound", comp.tail_bound);
  r.check("spectrum-complete-on-grid",
          pass_if(comp.deviation <= comp.tail_bound + comp.error_bound + 1e-10));
  return r;
}

Report stage_lemma21(const ReproOptions& opt) {
  Report r("autocorrelation-positive");
  const Rational delta(1, 100);
  r.set("delta", delta);
  r.set("unit_interval.min", lemma21_min(StepSet::interval(0, 1), delta));
  const Rational m3 = lemma21_min(three_piece(), delta);
  r.set("three_piece.min", m3);
  r.check("three-piece-positive", pass_if(m3 > 0));
  Rng rng(opt.seed);
  Rational smallest = 1;
  for (int i = 0; i < opt.random_sets; ++i) {
    const auto e = random_unit_measure_set_up_to(rng, Rational(7, 5));
    smallest = std::min(smallest, lemma21_min(e, delta));
  }
  r.set("random.count", opt.random_sets);
  r.set("random.smallest_min", smallest);
  r.check("random-positive", pass_if(smallest > 0));
  try {
    lemma21_min(golden(), delta);
    r.check("width-3/2-rejected", Status::fail, "golden set was accepted");
  } catch (const Error& e) {
    r.set("golden.error", e.what());
    r.check("width-3/2-rejected", pass_if(e.code() == ErrorCode::hypothesis));
  }
  return r;
}

Report stage_factorization(const ReproOptions& opt) {
  Report r("factorization");
  const auto& e = three_piece();
  r.input("E", e.to_string());
  const auto fac = tiling_factorization(e);
  r.set("F", fac.f.to_string());
  r.set("frequencies", fac.frequencies.size());
  r.set("max_residual", fac.max_residual);
  r.set("tolerance", 1e-11);
  r.check("factorization", pass_if(fac.max_residual < 1e-11));
  const auto cert =
      certify_zero_free(e, Rational(-1, 2), Rational(1, 2), opt.tol);
  r.set("zero_free.status", to_string(cert.status));
  r.set("zero_free.pieces", cert.pieces.size());
  r.set("zero_free.min_lower_bound", cert.min_lower_bound);
  r.check("zero-free-on-[-1/2,1/2]",
          cert.status == CertStatus::zero_free ? Status::pass
          : cert.status == CertStatus::zero_found ? Status::fail
                                                   : Status::inconclusive);
  return r;
}

Report stage_two_thirds(const ReproOptions& opt) {
  Report r("zero-at-two-thirds");
  const auto& e = two_thirds_set();
  r.input("E", e.to_string());
  const auto z = first_positive_zero(e, opt.tol);
  if (!z) {
    r.check("zero-near-2/3", Status::fail, "no zero certified in (0, 1)");
    return r;
  }
  r.set("zero.re_lo", z->enclosure.re_lo);
  r.set("zero.re_hi", z->enclosure.re_hi);
  r.set("zero.exact", z->exact ? to_string(*z->exact) : "none");
  r.check("zero-near-2/3",
          pass_if(z->enclosure.re_lo >= 2.0 / 3 - 1e-9 &&
                  z->enclosure.re_hi <= 2.0 / 3 + 1e-9));
  r.check("exact-zero-at-2/3", pass_if(is_exact_zero(e, Rational(2, 3))));
  const auto d = dset_condition(e, StepSet::interval(0, 1), opt.tol);
  r.set("dset.branch", to_string(d.branch));
  r.check("unit-interval-condition-fails",
          pass_if(d.branch == DsetBranch::condition_fails));
  return r;
}

Report stage_prop31(const ReproOptions&) {
  Report r("weak-tiling-uniqueness");
  struct Case {
    const char* name;
    StepSet e;
    Rational r, t;
  };
  const Case cases[] = {{"unit_interval", StepSet::interval(0, 1), 1, 0},
                        {"three_piece", three_piece(), Rational(5, 4),
                         Rational(1, 4)}};
  for (const auto& c : cases) {
    const auto tr = prop31_reconstruct(c.e);
    const std::string k = c.name;
    r.set(k + ".r", tr.r);
    r.set(k + ".t", tr.t);
    r.set(k + ".branch", tr.branch);
    r.set(k + ".k_min", tr.k_min);
    r.set(k + ".residual_max", tr.residual_max);
    r.check(k + ".residual-zero", pass_if(tr.pass));
    r.check(k + ".r-t", pass_if(tr.r == c.r && tr.t == c.t));
    r.check(k + ".convolution-identity", pass_if(tr.convolution_identity));
  }
  const auto golden_comb =
      TranslationSet::lattice({0, Rational(1, 2)}, 2).to_comb({0});
  const auto weak = weak_tiling_check(golden(), golden_comb, -4, 4);
  r.set("golden.weak_tiling_measure", golden_comb.to_string());
  r.check("golden-weakly-tiles-complement", pass_if(weak.pass));
  return r;
}

Report stage_dn(const ReproOptions& opt) {
  Report r("dn-structure");
  Rng rng(opt.seed + 6);
  int good = 0;
  for (int i = 0; i < opt.random_sets; ++i) {
    const Rational t0 = random_rational_in(rng, Rational(1, 2), 1, 97);
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto dn = build_dn(t0, n);
    if (dn.measure == 1 && dn.d_minus_d == dn.expected) ++good;
  }
  r.set("random.count", opt.random_sets);
  r.set("random.matching", good);
  r.check("random-structure", pass_if(good == opt.random_sets));
  const auto dn = build_dn(Rational(3, 4), 2);
  r.set("example.D", dn.d.to_string());
  r.set("example.D_minus_D", dn.d_minus_d.to_string());
  r.check("example", pass_if(dn.d_minus_d.to_string() ==
                             "[-2, -1] u [-3/4, 3/4] u [1, 2]"));
  return r;
}

Report stage_jensen(const ReproOptions&) {
  Report r("jensen");
  const auto unit = StepSet::interval(0, 1);
  for (double rho : {2.5, 5.5, 10.5}) {
    const auto j = jensen_audit(unit, rho);
    const std::string k = "unit_interval.rho_" + format_double(rho);
    r.set(k + ".lhs", j.lhs);
    r.set(k + ".rhs", j.rhs);
    r.set(k + ".zeros", j.zeros_used.size());
    r.check(k, pass_if(j.discrepancy() < 1e-6));
  }
  for (double rho : {1.0, 5.0, 10.0}) {
    const auto j = jensen_audit(golden(), rho);
    const std::string k = "golden.rho_" + format_double(rho);
    r.set(k + ".rhs", j.rhs);
    r.set(k + ".bound", j.paper_bound ? *j.paper_bound : NAN);
    r.check(k, pass_if(j.within_bound(1e-6)));
  }
  return r;
}

Report stage_growth(const ReproOptions& opt) {
  Report r("growth");
  const int n = smallest_violating_n(100);
  r.set("smallest_violating_N", n);
  bool below = true, above = true;
  for (int k = 1; k <= 100; ++k) {
    const bool v = growth_contradiction(k).violated;
    if (k <= 7 && v) below = false;
    if (k >= 8 && !v) above = false;
  }
  r.check("smallest-violating-is-8", pass_if(n == 8 && below && above));
  const auto scan = prop33_witness_scan(two_thirds_set(), 8, opt.tol);
  r.set("scan.status", to_string(scan.status));
  r.set("scan.t0", scan.t0 ? to_string(*scan.t0) : "none");
  r.set("scan.first_missing",
        scan.first_missing ? std::to_string(*scan.first_missing) : "none");
  if (scan.dn) r.set("scan.D", scan.dn->d.to_string());
  r.check("scan-finds-gap", pass_if(scan.first_missing.has_value() &&
                                    *scan.first_missing <= 8));
  return r;
}

}  // namespace

Report paper_repro(const ReproOptions& options) {
  using Stage = std::function<Report(const ReproOptions&)>;
  const std::pair<const char*, Stage> stages[] = {
      {"golden-example", stage_golden},
      {"autocorrelation-positive", stage_lemma21},
      {"factorization", stage_factorization},
      {"zero-at-two-thirds", stage_two_thirds},
      {"weak-tiling-uniqueness", stage_prop31},
      {"dn-structure", stage_dn},
      {"jensen", stage_jensen},
      {"growth", stage_growth}};
  Report report("paper-repro");
  report.set("seed", static_cast<long long>(options.seed));
  int k = 0;
  for (const auto& [name, run] : stages) {
    ++k;
    const auto start = std::chrono::steady_clock::now();
    Report stage(name);
    try {
      stage = run(options);
    } catch (const Error& e) {
      stage.set("error", e.what());
      stage.check("completed", e.code() == ErrorCode::inconclusive ||
                                       e.code() == ErrorCode::circle_too_close
                                   ? Status::inconclusive
                                   : Status::fail);
    }
    const std::string prefix = "stage." + std::to_string(k);
    report.set(prefix + ".name", name);
    report.merge(prefix, stage);
    report.set(prefix + ".elapsed_s",
               std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start)
                   .count());
  }
  return report;
}

}  // namespace fuglede
