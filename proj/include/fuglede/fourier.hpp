#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fuglede/analysis.hpp"
#include "fuglede/error.hpp"
#include "fuglede/stepset.hpp"

namespace fuglede {

using Complex = std::complex<double>;

/// χ̂_E(z) with a running absolute error bound. Symbolic short-circuits
/// (z = 0, exact cyclotomic cancellation at rational z) carry bound 0.
struct TransformValue {
  Complex value;
  double error_bound = 0.0;
  bool exact = false;

  double abs() const { return std::abs(value); }
};

/// Evaluator for χ̂_E(z) = ∫_E e^{-2πixz} dx with the interval data
/// pre-converted to double. Cheap to copy.
class IndicatorTransform {
 public:
  explicit IndicatorTransform(StepSet e);

  const StepSet& set() const noexcept { return set_; }

  TransformValue operator()(Complex z) const;
  /// Real rational frequency; tries the exact-zero test first.
  TransformValue at(const Rational& xi) const;
  /// χ̂_E'(z) with an absolute error bound.
  TransformValue derivative(Complex z) const;

  /// Upper bound for |χ̂_E'(z)| on the strip y_lo <= Im z <= y_hi.
  double derivative_bound(double y_lo, double y_hi) const;
  /// Upper bound for |χ̂_E''(z)| on the same strip.
  double second_derivative_bound(double y_lo, double y_hi) const;
  /// Below this |z| the moment (Taylor) series is used.
  double series_threshold() const noexcept { return series_threshold_; }
  /// No zeros satisfy |Im z| > zero_free_height().
  double zero_free_height() const noexcept { return zero_free_height_; }
  /// E is mirror symmetric about the midpoint of its hull.
  bool symmetric() const noexcept { return symmetric_; }

  TransformValue eval_series(Complex z) const;
  TransformValue eval_closed(Complex z) const;

 private:
  StepSet set_;
  std::vector<double> lo_, hi_, center_, length_;
  std::vector<double> moments_;  // M_n = ∫_E x^n dx
  double measure_ = 0.0;
  double series_threshold_ = 0.0;
  double zero_free_height_ = 0.0;
  bool symmetric_ = false;
};

TransformValue xhat_eval(const StepSet& e, Complex z);
TransformValue xhat_eval(const StepSet& e, const Rational& xi);

/// Exact test that χ̂_E(ξ) = 0 at a rational ξ, by checking divisibility of
/// the underlying root-of-unity sum by the cyclotomic polynomial. Returns
/// false when ξ = 0 and E is nonempty, and also when the common denominator
/// is too large to decide (so `true` is always a proof).
bool is_exact_zero(const StepSet& e, const Rational& xi);

/// Axis-parallel rectangle in the complex plane. Coordinates are doubles,
/// i.e. exact dyadic rationals.
struct Box {
  double re_lo, re_hi, im_lo, im_hi;

  double width() const { return re_hi - re_lo; }
  double height() const { return im_hi - im_lo; }
  Complex center() const {
    return {0.5 * (re_lo + re_hi), 0.5 * (im_lo + im_hi)};
  }
  double half_diagonal() const { return 0.5 * std::hypot(width(), height()); }
};

enum class ZeroKind { real, complex_pair };
const char* to_string(ZeroKind kind);

/// A zero enclosure certified by the argument principle: the boundary of
/// `enclosure` winds `winding` times around 0 under χ̂_E.
struct ZeroCertificate {
  Box enclosure;
  int winding = 0;
  ZeroKind kind = ZeroKind::real;
  /// E is mirror symmetric, the box is symmetric about the real axis and the
  /// winding is odd, hence some zero in the box lies exactly on the axis.
  bool real_by_symmetry = false;
  /// Rational point inside the enclosure at which χ̂_E vanishes exactly.
  std::optional<Rational> exact;
  /// Enclosure pokes out of the interval that was searched.
  bool at_boundary = false;

  Complex center() const { return enclosure.center(); }
};

/// Winding number of χ̂_E around the boundary of `box`. Edges are subdivided
/// until a derivative bound proves the image of each piece stays in a disc
/// that excludes 0. Returns nullopt when a zero lies on (or numerically on)
/// the boundary.
std::optional<int> winding_number(const IndicatorTransform& f, const Box& box);

struct ZeroSearch {
  std::vector<ZeroCertificate> zeros;
  std::vector<Box> unresolved;
  bool complete() const { return unresolved.empty(); }
};

/// All zeros in `box`, each enclosed in a sub-box with both sides <= tol.
/// Clusters that no split can separate (multiple zeros, roughly below
/// sqrt(eps)) are returned as one certificate with a larger box. Bisection
/// order is fixed, so results are deterministic.
ZeroSearch find_zeros_in_box(const IndicatorTransform& f, const Box& box,
                             double tol);

enum class CertStatus { zero_free, zero_found, inconclusive };
const char* to_string(CertStatus status);

/// A real segment on which |χ̂_E| >= lower_bound, widened to the rectangle
/// [lo, hi] x [-half_height, half_height] that is also zero-free.
struct CertifiedPiece {
  double lo, hi;
  double lower_bound;
  double half_height;
};

struct ZeroFreeCertificate {
  CertStatus status = CertStatus::inconclusive;
  Rational lo, hi;
  std::vector<CertifiedPiece> pieces;
  double min_lower_bound = 0.0;
  /// Leftmost zero strictly inside the interval, when status is zero_found.
  std::optional<ZeroCertificate> zero;
  /// Zero candidates within tolerance of an interval end.
  std::vector<ZeroCertificate> boundary_zeros;
  std::vector<std::pair<double, double>> unresolved;
};

/// Proves χ̂_E has no zero on [lo, hi], or returns the leftmost zero found.
/// A candidate zero touching an end of the interval yields `inconclusive`,
/// never a false certificate.
ZeroFreeCertificate certify_zero_free(const StepSet& e, const Rational& lo,
                                      const Rational& hi,
                                      double resolution = 1e-10);

struct RealZeroList {
  std::vector<ZeroCertificate> zeros;  // sorted by position
  std::vector<std::pair<double, double>> inconclusive;
};

/// Certified enclosures of width <= tol of all zeros of χ̂_E on [lo, hi]
/// lying within tol of the real axis. Each enclosure is also tested for an
/// exact rational zero with denominator <= 10^4.
RealZeroList locate_real_zeros(const StepSet& e, const Rational& lo,
                               const Rational& hi, double tol);

/// First certified zero in (0, 1), if any.
std::optional<ZeroCertificate> first_positive_zero(const StepSet& e,
                                                   double tol = 1e-10);

struct Factorization {
  StepSet f;                 // [0,1) \ E
  double max_residual = 0.0; // over the sample frequencies
  std::vector<double> frequencies;
};

/// Thrown by tiling_factorization when E does not tile by ℤ; carries the
/// covering function of E + ℤ on [0, 1).
class NotZTilingError : public Error {
 public:
  NotZTilingError(const std::string& what, StepFn covering)
      : Error(ErrorCode::not_z_tiling, what), covering_(std::move(covering)) {}
  const StepFn& covering() const noexcept { return covering_; }

 private:
  StepFn covering_;
};

/// 64 fixed nonzero sample frequencies (±pairs).
std::vector<double> default_factorization_frequencies();

/// For a ℤ-tiling E ⊂ [0, 3/2) of measure 1: F = [0,1) \ E with
/// χ_E = χ_[0,1) - χ_F + χ_{F+1}, and the residual of
/// χ̂_E(ξ) = (e^{-2πiξ} - 1)(χ̂_F(ξ) - 1/(2πiξ)) over the sample grid.
Factorization tiling_factorization(const StepSet& e,
                                   std::span<const double> frequencies = {});

struct JensenOptions {
  double zero_tol = 1e-10;
  double quadrature_tol = 1e-10;
  double margin = 0.3;
};

struct JensenReport {
  double rho = 0.0;
  std::vector<ZeroCertificate> zeros_used;  // zeros in the closed disc
  int zeros_on_circle = 0;
  double lhs = 0.0;  // Σ log(ρ/|a_j|)
  double lhs_error = 0.0;
  double rhs = 0.0;  // (1/2π) ∫ log|χ̂_E(ρe^{iθ})| dθ
  double rhs_error = 0.0;
  /// 3ρ, available when E ⊂ [0, 3/2].
  std::optional<double> paper_bound;

  double discrepancy() const { return std::abs(lhs - rhs); }
  bool agrees(double tol) const {
    return discrepancy() <= tol + lhs_error + rhs_error;
  }
  bool within_bound(double tol) const {
    return paper_bound && rhs <= *paper_bound + tol + rhs_error;
  }
};

/// Both sides of Jensen's formula for χ̂_E on |z| = ρ. Requires m(E) = 1.
/// Zeros near the circle are divided out and their exact circle mean
/// log max(ρ, |a|) added back, so real zeros on the circle are allowed.
JensenReport jensen_audit(const StepSet& e, double rho,
                          const JensenOptions& options = {});

/// Only the boundary mean (1/2π) ∫ log|χ̂_E(ρe^{iθ})| dθ, no zero search.
/// Returns the value and an error estimate.
std::pair<double, double> boundary_log_mean(const StepSet& e, double rho,
                                            double tol = 1e-10);

struct GrowthResult {
  int n = 0;
  double lower = 0.0;
  double upper = 0.0;
  bool violated = false;
};

/// Lower bound 2 Σ_{n<=N} (log(N/n) + log(N/b_n)) for the zero sum against
/// the upper bound 3N. Without moduli the bound 4(N log N - log N!) is used.
/// Throws Error(invalid_argument) if some b_n is outside (n-1, n).
GrowthResult growth_contradiction(int n,
                                  std::optional<std::span<const double>>
                                      moduli = std::nullopt);

/// Smallest N <= n_max with 4(N log N - log N!) > 3N, or 0 if none.
int smallest_violating_n(int n_max);

void write_zero_csv(std::ostream& out,
                    const std::vector<ZeroCertificate>& zeros);

}  // namespace fuglede
