#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuglede/fourier.hpp"
#include "fuglede/stepset.hpp"
#include "fuglede/tiling.hpp"

namespace fuglede {

struct OrthogonalityResult {
  double residual = 0.0;  // max |χ̂_E(λ - λ')| over distinct pairs
  double error_bound = 0.0;
  Rational worst_difference;
  std::size_t points = 0;       // |Λ ∩ [-R, R]|
  std::size_t differences = 0;  // distinct positive differences
  std::size_t symbolic_zeros = 0;
};

/// Pairwise orthogonality of the exponentials e^{2πiλx}, λ ∈ Λ ∩ [-R, R],
/// in L²(E). Differences at which χ̂_E vanishes exactly contribute 0.
/// Requires 0 ∈ Λ.
OrthogonalityResult orthogonality_check(const StepSet& e,
                                        const TranslationSet& lambda,
                                        const Rational& radius);

struct CompletenessResult {
  double deviation = 0.0;   // max over the grid of |Σ|χ̂_E(ξ - λ)|² - 1|
  double tail_bound = 0.0;  // bound for the omitted terms |λ| > R
  double error_bound = 0.0; // floating-point error of the partial sums
  double worst_xi = 0.0;
  std::size_t grid_points = 0;
  std::size_t terms = 0;
  Rational grid_step, radius;
};

/// Tight-frame test Σ_λ |χ̂_E(ξ - λ)|² = 1 on a grid, truncated to |λ| <= R.
/// The grid covers one period of Λ, or [-1, 1] for a finite Λ. Requires
/// m(E) = 1.
CompletenessResult completeness_check(const StepSet& e,
                                      const TranslationSet& lambda,
                                      const Rational& grid_step,
                                      const Rational& radius);

enum class SpectrumVerdict {
  spectrum_consistent,
  orthogonal_but_incomplete,
  not_orthogonal
};
const char* to_string(SpectrumVerdict v);

struct SpectrumReport {
  OrthogonalityResult orthogonality;
  CompletenessResult completeness;
  double tolerance = 0.0;
  SpectrumVerdict verdict = SpectrumVerdict::not_orthogonal;
};

/// Finite-window verdict: orthogonal up to `tol` on [-R, R] and complete up
/// to tail_bound + tol on the grid.
SpectrumReport spectrum_report(const StepSet& e, const TranslationSet& lambda,
                               const Rational& orth_radius,
                               const Rational& grid_step,
                               const Rational& trunc_radius,
                               double tol = 1e-10);

struct DnSet {
  Rational t0;
  int n = 0;
  StepSet d;
  DiffSet d_minus_d;  // computed from d
  DiffSet expected;   // [-n, -n+1] u [-t0, t0] u [n-1, n]
  Rational measure;
};

/// D_n = [0, t0) u [n - 1 + t0, n) for 1/2 < t0 < 1 and n >= 1.
DnSet build_dn(const Rational& t0, int n);

enum class DsetBranch {
  transfers_to_f,  // m(D) = 1
  non_spectral,    // m(D) > 1
  no_conclusion,   // m(D) < 1
  condition_fails,
  inconclusive
};
const char* to_string(DsetBranch b);
const char* describe(DsetBranch b);

struct DsetResult {
  Rational measure_d;
  DiffSet d_minus_d;
  DsetBranch branch = DsetBranch::inconclusive;
  bool holds = false;
  /// A zero of χ̂_E inside the (closed) difference set.
  std::optional<ZeroCertificate> zero;
  /// Exact simple zeros sitting on an endpoint of a closed piece. They lie
  /// outside the open difference set of D, so they are reported but do not
  /// break the condition.
  std::vector<Rational> endpoint_zeros;
  std::vector<ZeroFreeCertificate> certificates;
};

/// Checks (D - D) ∩ {χ̂_E = 0} = ∅ on the real line and names the branch
/// that applies.
DsetResult dset_condition(const StepSet& e, const StepSet& d,
                          double resolution = 1e-10);

class ProductSpectrum {
 public:
  /// Both factors must contain 0.
  ProductSpectrum(TranslationSet first, TranslationSet second);
  const TranslationSet& first() const noexcept { return first_; }
  const TranslationSet& second() const noexcept { return second_; }
  /// Λ_E x Λ_F within [-R, R]², in lexicographic order.
  std::vector<std::pair<Rational, Rational>> enumerate(
      const Rational& radius) const;

 private:
  TranslationSet first_, second_;
};

ProductSpectrum product_spectrum(const TranslationSet& lambda_e,
                                 const TranslationSet& lambda_f);

struct ProductOrthogonality {
  OrthogonalityResult first, second;
  /// Bound on |χ̂_{E x F}| over distinct pairs of the product grid:
  /// max(res_E m(F), res_F m(E)).
  double residual = 0.0;
};

ProductOrthogonality product_orthogonality(const StepSet& e,
                                           const StepSet& f,
                                           const ProductSpectrum& lambda,
                                           const Rational& radius);

struct WitnessFinding {
  int n = 0;
  bool found = false;  // certified zero strictly inside (n - 1, n)
  std::optional<ZeroCertificate> zero;
  std::size_t boundary_zeros = 0;
  std::size_t unresolved = 0;
};

enum class ScanStatus { scanned, no_zero_below_one, t0_out_of_range };
const char* to_string(ScanStatus s);

struct WitnessScan {
  ScanStatus status = ScanStatus::scanned;
  std::optional<ZeroCertificate> t0_certificate;
  std::optional<Rational> t0;  // exact value when recognized
  std::vector<WitnessFinding> findings;
  /// First n whose interval (n - 1, n) has no certified zero.
  std::optional<int> first_missing;
  /// D_n for the first missing n; its difference set avoids the zeros
  /// found in the scan.
  std::optional<DnSet> dn;
  /// Growth test on the moduli b_1..b_k found before the first gap.
  std::optional<GrowthResult> prefix_growth;
  int smallest_violating = 0;
};

/// For n = 1..N looks for a certified real zero b_n of χ̂_E in (n - 1, n).
/// Requires m(E) = 1 and width(E) < 3/2.
WitnessScan prop33_witness_scan(const StepSet& e, int n_max,
                                double tol = 1e-10);

}  // namespace fuglede
