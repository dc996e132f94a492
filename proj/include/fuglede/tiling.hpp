#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuglede/analysis.hpp"
#include "fuglede/rational.hpp"
#include "fuglede/stepset.hpp"

namespace fuglede {

/// Λ = representatives + period·ℤ, or a finite set when there is no period.
class TranslationSet {
 public:
  TranslationSet() = default;
  /// Throws Error(invalid_argument) on a non-positive period, an empty
  /// representative list, or representatives that coincide (mod period).
  TranslationSet(std::vector<Rational> representatives,
                 std::optional<Rational> period);

  static TranslationSet lattice(std::vector<Rational> representatives,
                                const Rational& period) {
    return TranslationSet(std::move(representatives), period);
  }
  static TranslationSet finite(std::vector<Rational> points) {
    return TranslationSet(std::move(points), std::nullopt);
  }

  const std::vector<Rational>& representatives() const noexcept {
    return reps_;
  }
  const std::optional<Rational>& period() const noexcept { return period_; }
  bool contains(const Rational& x) const;

  /// Sorted elements of Λ in [lo, hi].
  std::vector<Rational> enumerate(const Rational& lo,
                                  const Rational& hi) const;
  /// Unit-weight comb Σ_{λ ∈ Λ} δ_λ, minus the listed points.
  DiracComb to_comb(std::vector<Rational> excluded = {}) const;

  /// "lattice {0, 1/2} + 2 Z" or "finite {0, 1/3}".
  std::string to_string() const;
  friend bool operator==(const TranslationSet&, const TranslationSet&) =
      default;

 private:
  std::vector<Rational> reps_;
  std::optional<Rational> period_;
};

enum class Classification { tiling, packing_not_tiling, neither };
const char* to_string(Classification c);

struct CoveringReport {
  Rational lo, hi;  // window
  StepFn covering;  // Σ_λ χ_E(x - λ) on [lo, hi]
  Rational min_multiplicity;
  Rational max_multiplicity;
  Classification classification = Classification::neither;
};

/// Exact multiplicity sweep of E + Λ over [lo, hi]. Every translate that
/// meets the window is included, so the result holds on the whole window.
/// Throws Error(window) if a periodic Λ's period exceeds the window length.
CoveringReport covering_report(const StepSet& e, const TranslationSet& lambda,
                               const Rational& lo, const Rational& hi);

/// Window [inf E - margin, sup E + margin] with margin = ceil(width) + period.
std::pair<Rational, Rational> default_window(const StepSet& e,
                                             const Rational& period = 1);

struct WeakTilingResult {
  bool pass = false;
  StepFn covering;  // χ_E * μ on the window
  StepFn residual;  // χ_E * μ - χ_{E^c}
  Rational max_deviation;
};

/// Exact check of χ_E * μ = χ_{E^c} a.e. on [lo, hi].
WeakTilingResult weak_tiling_check(const StepSet& e, const DiracComb& mu,
                                   const Rational& lo, const Rational& hi);

/// Exact min of K(t) = m(E ∩ (E + t)) over [0, 1 - delta]. Requires
/// m(E) = 1, width(E) < 3/2 and 0 < delta < 1.
Rational lemma21_min(const StepSet& e, const Rational& delta);

struct Prop31Trace {
  Rational shift;          // added to E so that inf E = 0
  StepSet normalized;      // E + shift
  Rational r;              // sup of the normalized set
  Rational t;              // esssup([0, r - 1] ∩ E^c), 0 when that is null
  Rational gap;            // r - 1 - t
  std::string branch;      // "t < r-1" or "t = r-1"
  Rational step;           // r - t, the spacing forced on the atoms of μ
  Rational k_delta;        // K is bounded below on [-(1 - k_delta), 1 - k_delta]
  Rational k_min;
  /// Only for t < r - 1: g(x) = m(E ∩ ((t, r-1) + x)).
  std::optional<ContPL> g;
  std::optional<Rational> g_at_zero;  // must equal r - t - 1
  std::optional<Rational> g_min;      // on [1 + d, r - t - d]
  DiracComb mu;                       // Σ_{k≠0} δ_k
  Rational lo, hi;                    // window
  StepFn residual;                    // χ_E * μ - χ_{E^c}
  Rational residual_max;
  bool convolution_identity = false;  // μ * K = 1 - K on the window
  bool pass = false;
};

/// Constructive check of the conclusion μ = Σ_{k≠0} δ_k for a measure-1 set
/// E of width < 3/2, together with the intermediate quantities r, t, K, g.
/// Passes iff the residual is identically 0, i.e. iff E tiles by ℤ.
Prop31Trace prop31_reconstruct(const StepSet& e,
                               std::optional<std::pair<Rational, Rational>>
                                   window = std::nullopt);

}  // namespace fuglede
