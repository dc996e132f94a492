#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fuglede/rational.hpp"
#include "fuglede/stepset.hpp"

namespace fuglede {

/// Continuous piecewise-linear function with exact rational breakpoints.
///
/// Linear between consecutive breakpoints and identically zero outside
/// [front, back]. Values are stored per breakpoint, so continuity inside the
/// support holds by construction. A function whose end values are nonzero is
/// a window restriction (it jumps to zero at the window edges).
class ContPL {
 public:
  ContPL() = default;
  ContPL(std::vector<Rational> breakpoints, std::vector<Rational> values);

  const std::vector<Rational>& breakpoints() const noexcept { return xs_; }
  const std::vector<Rational>& values() const noexcept { return ys_; }
  bool empty() const noexcept { return xs_.empty(); }

  Rational operator()(const Rational& x) const;
  /// True when the function is continuous on the whole line.
  bool vanishes_at_ends() const;
  /// Exact minimum over the closed interval [lo, hi].
  Rational min_over(const Rational& lo, const Rational& hi) const;
  Rational max_abs() const;

  /// Pointwise sum and scalar multiple; the support is the union hull.
  friend ContPL operator+(const ContPL& f, const ContPL& g);
  friend ContPL operator*(const Rational& c, const ContPL& f);
  friend bool operator==(const ContPL&, const ContPL&) = default;

  void write_csv(std::ostream& out) const;

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
};

/// Piecewise-constant function: `values[i]` holds on the open piece
/// (breakpoints[i], breakpoints[i+1]); `outside` holds beyond the ends.
class StepFn {
 public:
  StepFn() = default;
  StepFn(std::vector<Rational> breakpoints, std::vector<Rational> values,
         Rational outside = 0);

  const std::vector<Rational>& breakpoints() const noexcept { return xs_; }
  const std::vector<Rational>& values() const noexcept { return vs_; }
  const Rational& outside() const noexcept { return outside_; }

  /// Value on the piece containing x, using the right-continuous
  /// representative at breakpoints.
  Rational operator()(const Rational& x) const;
  Rational min_value() const;
  Rational max_value() const;
  /// ∫ over the breakpoint span.
  Rational integral() const;
  bool is_identically(const Rational& c) const;

  /// Pointwise difference on the common span (spans must coincide).
  friend StepFn operator-(const StepFn& f, const StepFn& g);
  friend bool operator==(const StepFn&, const StepFn&) = default;

  void write_csv(std::ostream& out) const;

 private:
  void merge_equal_neighbours();

  std::vector<Rational> xs_;
  std::vector<Rational> vs_;
  Rational outside_ = 0;
};

/// Indicator of S restricted to [lo, hi], as a StepFn on that span.
StepFn indicator_on(const StepSet& s, const Rational& lo, const Rational& hi);

struct Atom {
  Rational location;
  Rational weight;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Positive, locally finite atomic measure: finitely many free atoms plus an
/// optional periodic part Σ_{r ∈ reps, k ∈ ℤ} w δ_{r + kp}, from which a
/// finite list of points may be excluded.
class DiracComb {
 public:
  struct Periodic {
    std::vector<Rational> representatives;
    Rational period;
    Rational weight = 1;
    std::vector<Rational> excluded;
    friend bool operator==(const Periodic&, const Periodic&) = default;
  };

  DiracComb() = default;
  DiracComb(std::vector<Atom> atoms, std::optional<Periodic> periodic);

  static DiracComb single(const Rational& location, const Rational& weight = 1);
  /// Σ_{k ∈ ℤ} δ_{k·period + r} over the given representatives.
  static DiracComb lattice(std::vector<Rational> representatives,
                           const Rational& period,
                           std::vector<Rational> excluded = {});

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::optional<Periodic>& periodic() const noexcept {
    return periodic_;
  }

  /// Every atom with location in [lo, hi], sorted by location; coincident
  /// atoms are merged.
  std::vector<Atom> atoms_in(const Rational& lo, const Rational& hi) const;

  std::string to_string() const;
  friend bool operator==(const DiracComb&, const DiracComb&) = default;

 private:
  std::vector<Atom> atoms_;
  std::optional<Periodic> periodic_;
};

/// t ↦ m(E ∩ (E + t)). Even, equal to m(E) at 0, supported in [-w, w] with
/// w = sup E - inf E.
ContPL autocorrelation(const StepSet& e);

/// x ↦ m(E ∩ (x - I)) = (χ_E * χ_I)(x). Equals autocorrelation(E) when
/// I = -E. Either set empty gives the zero function.
ContPL cross_correlation(const StepSet& e, const StepSet& i);

/// Σ_atoms w f(x - loc) restricted to [lo, hi]. `f` must vanish at the ends
/// of its support (throws Error(invalid_argument) otherwise).
ContPL comb_convolve(const ContPL& f, const DiracComb& mu, const Rational& lo,
                     const Rational& hi);

/// Σ_atoms w χ_E(x - loc) on [lo, hi]. Only atoms that can reach the window
/// are enumerated, so the result is exact on the whole window.
StepFn covering_function(const StepSet& e, const DiracComb& mu,
                         const Rational& lo, const Rational& hi);

}  // namespace fuglede
