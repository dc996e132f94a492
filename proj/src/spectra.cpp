#include "fuglede/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "fuglede/error.hpp"

namespace fuglede {

namespace {

constexpr double kPi = std::numbers::pi;

void require_zero(const TranslationSet& lambda) {
  if (!lambda.contains(0)) {
    throw Error(ErrorCode::invalid_argument,
                "translation set " + lambda.to_string() + " must contain 0");
  }
}

}  // namespace

OrthogonalityResult orthogonality_check(const StepSet& e,
                                        const TranslationSet& lambda,
                                        const Rational& radius) {
  require_zero(lambda);
  if (radius < 0) {
    throw Error(ErrorCode::invalid_argument, "radius must be >= 0");
  }
  const auto points = lambda.enumerate(-radius, radius);
  std::set<Rational> diffs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      diffs.insert(points[j] - points[i]);
    }
  }
  OrthogonalityResult out;
  out.points = points.size();
  out.differences = diffs.size();
  const IndicatorTransform f(e);
  // |χ̂_E(-ξ)| = |χ̂_E(ξ)|, so positive differences suffice.
  for (const auto& d : diffs) {
    const auto v = f.at(d);
    if (v.exact) {
      ++out.symbolic_zeros;
      continue;
    }
    if (v.abs() > out.residual) {
      out.residual = v.abs();
      out.error_bound = v.error_bound;
      out.worst_difference = d;
    }
  }
  return out;
}

CompletenessResult completeness_check(const StepSet& e,
                                      const TranslationSet& lambda,
                                      const Rational& grid_step,
                                      const Rational& radius) {
  if (e.empty() || e.measure() != 1) {
    throw Error(ErrorCode::hypothesis, "completeness_check needs m(E) = 1");
  }
  if (grid_step <= 0) {
    throw Error(ErrorCode::invalid_argument, "grid step must be positive");
  }
  if (radius < 0) {
    throw Error(ErrorCode::invalid_argument, "radius must be >= 0");
  }
  CompletenessResult out;
  out.grid_step = grid_step;
  out.radius = radius;

  std::vector<double> grid;
  if (lambda.period()) {
    for (Rational x = 0; x < *lambda.period(); x += grid_step) {
      grid.push_back(to_double(x));
    }
  } else {
    for (Rational x = -1; x <= 1; x += grid_step) grid.push_back(to_double(x));
  }
  std::vector<double> inside;
  for (const auto& l : lambda.enumerate(-radius, radius)) {
    inside.push_back(to_double(l));
  }
  std::vector<double> outside;
  if (!lambda.period()) {
    for (const auto& l : lambda.representatives()) {
      if (abs(l) > radius) outside.push_back(to_double(l));
    }
  }
  out.grid_points = grid.size();
  out.terms = inside.size();

  const IndicatorTransform f(e);
  const double j2 = std::pow(static_cast<double>(e.size()), 2) / (kPi * kPi);
  const double r = to_double(radius);
  for (double xi : grid) {
    double sum = 0.0, err = 0.0;
    for (double l : inside) {
      const auto v = f(Complex(xi - l, 0.0));
      const double a = v.abs();
      sum += a * a;
      err += (2 * a + v.error_bound) * v.error_bound + 4e-16 * a * a;
    }
    double tail = 0.0;
    if (const auto& p = lambda.period()) {
      // Per representative and side: Σ_k 1/(m + kp)² <= 1/m² + 1/(pm).
      const double m = r - std::abs(xi);
      const double n = static_cast<double>(lambda.representatives().size());
      tail = m > 0 ? j2 * 2 * n * (1 / (m * m) + 1 / (to_double(*p) * m))
                   : std::numeric_limits<double>::infinity();
    } else {
      for (double l : outside) {
        const double dist = std::abs(l) - std::abs(xi);
        tail += dist > 0 ? std::min(1.0, j2 / (dist * dist)) : 1.0;
      }
    }
    const double dev = std::abs(sum - 1.0);
    if (dev > out.deviation) {
      out.deviation = dev;
      out.worst_xi = xi;
    }
    out.tail_bound = std::max(out.tail_bound, tail);
    out.error_bound = std::max(out.error_bound, err);
  }
  return out;
}

const char* to_string(SpectrumVerdict v) {
  switch (v) {
    case SpectrumVerdict::spectrum_consistent: return "spectrum-consistent";
    case SpectrumVerdict::orthogonal_but_incomplete:
      return "orthogonal-but-incomplete";
    case SpectrumVerdict::not_orthogonal: return "not-orthogonal";
  }
  return "unknown";
}

SpectrumReport spectrum_report(const StepSet& e, const TranslationSet& lambda,
                               const Rational& orth_radius,
                               const Rational& grid_step,
                               const Rational& trunc_radius, double tol) {
  SpectrumReport out;
  out.tolerance = tol;
  out.orthogonality = orthogonality_check(e, lambda, orth_radius);
  out.completeness = completeness_check(e, lambda, grid_step, trunc_radius);
  const auto& c = out.completeness;
  if (out.orthogonality.residual > tol + out.orthogonality.error_bound) {
    out.verdict = SpectrumVerdict::not_orthogonal;
  } else if (c.deviation <= c.tail_bound + c.error_bound + tol) {
    out.verdict = SpectrumVerdict::spectrum_consistent;
  } else {
    out.verdict = SpectrumVerdict::orthogonal_but_incomplete;
  }
  return out;
}

DnSet build_dn(const Rational& t0, int n) {
  if (!(Rational(1, 2) < t0 && t0 < 1)) {
    throw Error(ErrorCode::invalid_argument,
                "t0 = " + to_string(t0) +
                    " is not in (1/2, 1); the three-piece difference set "
                    "needs 1 - t0 < t0");
  }
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  DnSet out;
  out.t0 = t0;
  out.n = n;
  const Rational nn = n;
  out.d = StepSet::from_pieces({{0, t0}, {nn - 1 + t0, nn}});
  out.measure = out.d.measure();
  out.d_minus_d = difference_set(out.d);
  out.expected =
      DiffSet::from_pieces({{-nn, -nn + 1}, {-t0, t0}, {nn - 1, nn}});
  return out;
}

const char* to_string(DsetBranch b) {
  switch (b) {
    case DsetBranch::transfers_to_f: return "transfers-to-F";
    case DsetBranch::non_spectral: return "non-spectral";
    case DsetBranch::no_conclusion: return "no-conclusion";
    case DsetBranch::condition_fails: return "condition-fails";
    case DsetBranch::inconclusive: return "inconclusive";
  }
  return "unknown";
}

const char* describe(DsetBranch b) {
  switch (b) {
    case DsetBranch::transfers_to_f:
      return "m(D) = 1: if E x F is spectral then F is spectral";
    case DsetBranch::non_spectral:
      return "m(D) > 1: neither E nor E x F is spectral";
    case DsetBranch::no_conclusion:
      return "m(D) < 1: the condition holds but gives no conclusion";
    case DsetBranch::condition_fails:
      return "D - D meets the zero set of the transform of E";
    case DsetBranch::inconclusive:
      return "zero-freeness could not be certified";
  }
  return "";
}

DsetResult dset_condition(const StepSet& e, const StepSet& d,
                          double resolution) {
  if (e.empty()) {
    throw Error(ErrorCode::empty_set, "E must have positive measure");
  }
  DsetResult out;
  out.d_minus_d = difference_set(d);
  out.measure_d = d.measure();
  bool inconclusive = false;
  // D - D and the real zero set of χ̂_E are both symmetric, and
  // χ̂_E(0) = m(E) > 0, so the nonnegative half decides.
  for (const auto& piece : out.d_minus_d.intervals()) {
    if (piece.hi <= 0) continue;
    const Rational lo = piece.lo < 0 ? Rational(0) : piece.lo;
    auto cert = certify_zero_free(e, lo, piece.hi, resolution);
    if (cert.status == CertStatus::zero_found) {
      out.zero = cert.zero;
      out.certificates.push_back(std::move(cert));
      out.branch = DsetBranch::condition_fails;
      return out;
    }
    if (cert.status == CertStatus::inconclusive) {
      if (!cert.unresolved.empty()) inconclusive = true;
      for (const auto& z : cert.boundary_zeros) {
        const bool on_end = z.exact && z.winding == 1 &&
                            ((*z.exact == piece.hi) ||
                             (*z.exact == lo && lo != 0));
        if (on_end) {
          out.endpoint_zeros.push_back(*z.exact);
        } else {
          inconclusive = true;
        }
      }
    }
    out.certificates.push_back(std::move(cert));
  }
  if (inconclusive) {
    out.branch = DsetBranch::inconclusive;
    return out;
  }
  out.holds = true;
  if (out.measure_d == 1) {
    out.branch = DsetBranch::transfers_to_f;
  } else if (out.measure_d > 1) {
    out.branch = DsetBranch::non_spectral;
  } else {
    out.branch = DsetBranch::no_conclusion;
  }
  return out;
}

ProductSpectrum::ProductSpectrum(TranslationSet first, TranslationSet second)
    : first_(std::move(first)), second_(std::move(second)) {
  require_zero(first_);
  require_zero(second_);
}

std::vector<std::pair<Rational, Rational>> ProductSpectrum::enumerate(
    const Rational& radius) const {
  std::vector<std::pair<Rational, Rational>> out;
  const auto xs = first_.enumerate(-radius, radius);
  const auto ys = second_.enumerate(-radius, radius);
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs) {
    for (const auto& y : ys) out.emplace_back(x, y);
  }
  return out;
}

ProductSpectrum product_spectrum(const TranslationSet& lambda_e,
                                 const TranslationSet& lambda_f) {
  return ProductSpectrum(lambda_e, lambda_f);
}

ProductOrthogonality product_orthogonality(const StepSet& e,
                                           const StepSet& f,
                                           const ProductSpectrum& lambda,
                                           const Rational& radius) {
  ProductOrthogonality out;
  out.first = orthogonality_check(e, lambda.first(), radius);
  out.second = orthogonality_check(f, lambda.second(), radius);
  // χ̂_{E x F}(a, b) = χ̂_E(a) χ̂_F(b) and |χ̂_F| <= m(F).
  out.residual = std::max(out.first.residual * to_double(f.measure()),
                          out.second.residual * to_double(e.measure()));
  return out;
}

const char* to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::scanned: return "scanned";
    case ScanStatus::no_zero_below_one: return "no-zero-in-(0,1)";
    case ScanStatus::t0_out_of_range: return "t0-out-of-range";
  }
  return "unknown";
}

WitnessScan prop33_witness_scan(const StepSet& e, int n_max, double tol) {
  if (e.empty() || e.measure() != 1) {
    throw Error(ErrorCode::hypothesis, "prop33_witness_scan needs m(E) = 1");
  }
  if (e.width() >= Rational(3, 2)) {
    throw Error(ErrorCode::hypothesis,
                "prop33_witness_scan needs width(E) < 3/2");
  }
  if (n_max < 1) throw Error(ErrorCode::invalid_argument, "N must be >= 1");
  WitnessScan out;
  out.smallest_violating = smallest_violating_n(std::max(n_max, 100));
  out.t0_certificate = first_positive_zero(e, tol);
  if (!out.t0_certificate) {
    out.status = ScanStatus::no_zero_below_one;
    return out;
  }
  out.t0 = out.t0_certificate->exact;
  const double t0 = out.t0_certificate->center().real();
  if (!(0.5 < t0 && t0 < 1.0)) {
    out.status = ScanStatus::t0_out_of_range;
    return out;
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto zeros = locate_real_zeros(e, n - 1, n, tol);
    WitnessFinding w;
    w.n = n;
    w.unresolved = zeros.inconclusive.size();
    for (const auto& z : zeros.zeros) {
      if (z.at_boundary) {
        ++w.boundary_zeros;
      } else if (!w.found && z.kind == ZeroKind::real) {
        w.found = true;
        w.zero = z;
      }
    }
    if (!w.found && !out.first_missing) out.first_missing = n;
    out.findings.push_back(std::move(w));
  }
  const int prefix = out.first_missing ? *out.first_missing - 1 : n_max;
  if (prefix >= 1) {
    std::vector<double> moduli;
    for (int n = 1; n <= prefix; ++n) {
      moduli.push_back(std::abs(out.findings[n - 1].zero->center().real()));
    }
    out.prefix_growth =
        growth_contradiction(prefix, std::span<const double>(moduli));
  }
  if (out.first_missing && out.t0) out.dn = build_dn(*out.t0, *out.first_missing);
  return out;
}

}  // namespace fuglede
