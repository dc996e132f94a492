#include "fuglede/tiling.hpp"

#include <algorithm>

#include "fuglede/error.hpp"

namespace fuglede {

namespace {

Rational residue(const Rational& x, const Rational& period) {
  return x - Rational(floor_div(x / period)) * period;
}

void require_unit_measure(const StepSet& e, const char* what) {
  if (e.empty() || e.measure() != 1) {
    throw Error(ErrorCode::hypothesis,
                std::string(what) + " needs m(E) = 1, got m(E) = " +
                    to_string(e.empty() ? Rational(0) : e.measure()));
  }
}

void require_narrow(const StepSet& e, const char* what) {
  const Rational w = e.width();
  if (w >= Rational(3, 2)) {
    throw Error(ErrorCode::hypothesis,
                std::string(what) + " needs width(E) < 3/2 after shifting "
                "inf E to 0, got " + to_string(w) +
                    "; the bound 3/2 is optimal: E = [0, 1/2) u [1, 3/2) has "
                    "m(E ∩ (E + 1/2)) = 0");
  }
}

}  // namespace

TranslationSet::TranslationSet(std::vector<Rational> representatives,
                               std::optional<Rational> period)
    : reps_(std::move(representatives)), period_(std::move(period)) {
  if (reps_.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "translation set needs at least one point");
  }
  if (period_ && *period_ <= 0) {
    throw Error(ErrorCode::invalid_argument, "period must be positive");
  }
  std::vector<Rational> keys;
  for (const auto& r : reps_) {
    keys.push_back(period_ ? residue(r, *period_) : r);
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (keys[i] == keys[j]) {
        throw Error(ErrorCode::invalid_argument,
                    period_ ? "representatives " + fuglede::to_string(reps_[j]) +
                                  " and " + fuglede::to_string(reps_[i]) +
                                  " coincide modulo the period"
                            : "duplicate point " + fuglede::to_string(reps_[i]),
                    i);
      }
    }
  }
}

bool TranslationSet::contains(const Rational& x) const {
  return std::any_of(reps_.begin(), reps_.end(), [&](const Rational& r) {
    return period_ ? residue(x - r, *period_) == 0 : x == r;
  });
}

std::vector<Rational> TranslationSet::enumerate(const Rational& lo,
                                                const Rational& hi) const {
  std::vector<Rational> out;
  if (!period_) {
    for (const auto& r : reps_) {
      if (lo <= r && r <= hi) out.push_back(r);
    }
  } else {
    for (const auto& r : reps_) {
      const BigInt k0 = ceil_div((lo - r) / *period_);
      const BigInt k1 = floor_div((hi - r) / *period_);
      for (BigInt k = k0; k <= k1; ++k) {
        out.push_back(r + Rational(k) * *period_);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiracComb TranslationSet::to_comb(std::vector<Rational> excluded) const {
  for (std::size_t i = 0; i < excluded.size(); ++i) {
    if (!contains(excluded[i])) {
      throw Error(ErrorCode::invalid_argument,
                  "excluded point " + fuglede::to_string(excluded[i]) +
                      " is not in the translation set",
                  i);
    }
  }
  if (period_) return DiracComb::lattice(reps_, *period_, std::move(excluded));
  std::vector<Atom> atoms;
  for (const auto& r : reps_) {
    if (std::find(excluded.begin(), excluded.end(), r) == excluded.end()) {
      atoms.push_back({r, 1});
    }
  }
  return DiracComb(std::move(atoms), std::nullopt);
}

std::string TranslationSet::to_string() const {
  std::string s = period_ ? "lattice {" : "finite {";
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (i) s += ", ";
    s += fuglede::to_string(reps_[i]);
  }
  s += "}";
  if (period_) s += " + " + fuglede::to_string(*period_) + " Z";
  return s;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::tiling: return "tiling";
    case Classification::packing_not_tiling: return "packing-not-tiling";
    case Classification::neither: return "neither";
  }
  return "unknown";
}

CoveringReport covering_report(const StepSet& e, const TranslationSet& lambda,
                               const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::window, "window must have lo < hi");
  if (lambda.period() && hi - lo < *lambda.period()) {
    throw Error(ErrorCode::window,
                "window [" + to_string(lo) + ", " + to_string(hi) +
                    "] is shorter than one period " +
                    to_string(*lambda.period()));
  }
  CoveringReport out;
  out.lo = lo;
  out.hi = hi;
  out.covering = covering_function(e, lambda.to_comb(), lo, hi);
  out.min_multiplicity = out.covering.min_value();
  out.max_multiplicity = out.covering.max_value();
  if (out.max_multiplicity > 1) {
    out.classification = Classification::neither;
  } else if (out.min_multiplicity == 1) {
    out.classification = Classification::tiling;
  } else {
    out.classification = Classification::packing_not_tiling;
  }
  return out;
}

std::pair<Rational, Rational> default_window(const StepSet& e,
                                             const Rational& period) {
  if (e.empty()) return {-period, period};
  const auto [inf, sup] = e.extremes();
  const Rational margin = Rational(ceil_div(sup - inf)) + period;
  return {inf - margin, sup + margin};
}

WeakTilingResult weak_tiling_check(const StepSet& e, const DiracComb& mu,
                                   const Rational& lo, const Rational& hi) {
  WeakTilingResult out;
  out.covering = covering_function(e, mu, lo, hi);
  const StepFn complement = StepFn({lo, hi}, {1}) - indicator_on(e, lo, hi);
  out.residual = out.covering - complement;
  out.max_deviation =
      std::max(abs(out.residual.min_value()), abs(out.residual.max_value()));
  out.pass = out.residual.is_identically(0);
  return out;
}

Rational lemma21_min(const StepSet& e, const Rational& delta) {
  require_unit_measure(e, "lemma21_min");
  require_narrow(e, "lemma21_min");
  if (!(0 < delta && delta < 1)) {
    throw Error(ErrorCode::invalid_argument, "delta must lie in (0, 1)");
  }
  return autocorrelation(e).min_over(0, 1 - delta);
}

Prop31Trace prop31_reconstruct(
    const StepSet& e, std::optional<std::pair<Rational, Rational>> window) {
  require_unit_measure(e, "prop31_reconstruct");
  require_narrow(e, "prop31_reconstruct");
  Prop31Trace tr;
  tr.shift = -e.extremes().first;
  tr.normalized = e.translate(tr.shift);
  tr.r = tr.normalized.extremes().second;

  const StepSet gaps =
      tr.r > 1 ? subtract(StepSet::interval(0, tr.r - 1), tr.normalized)
               : StepSet();
  tr.t = gaps.empty() ? Rational(0) : gaps.extremes().second;
  tr.gap = tr.r - 1 - tr.t;
  tr.branch = tr.gap > 0 ? "t < r-1" : "t = r-1";
  tr.step = tr.r - tr.t;

  const ContPL k = autocorrelation(tr.normalized);
  tr.k_delta = Rational(1, 100);
  tr.k_min = k.min_over(0, 1 - tr.k_delta);

  if (tr.gap > 0) {
    tr.g = cross_correlation(tr.normalized,
                             StepSet::interval(1 - tr.r, -tr.t));
    tr.g_at_zero = (*tr.g)(0);
    const Rational d = tr.gap / 4;
    tr.g_min = tr.g->min_over(1 + d, tr.r - tr.t - d);
  }

  tr.mu = DiracComb::lattice({0}, 1, {0});
  const auto [lo, hi] = window ? *window : default_window(tr.normalized);
  tr.lo = lo;
  tr.hi = hi;
  const auto weak = weak_tiling_check(tr.normalized, tr.mu, lo, hi);
  tr.residual = weak.residual;
  tr.residual_max = weak.max_deviation;

  const ContPL conv = comb_convolve(k, tr.mu, lo, hi);
  const ContPL total = conv + k;
  std::vector<Rational> probes{lo, hi};
  for (const auto& x : total.breakpoints()) {
    if (lo <= x && x <= hi) probes.push_back(x);
  }
  tr.convolution_identity =
      std::all_of(probes.begin(), probes.end(),
                  [&](const Rational& x) { return total(x) == 1; });
  tr.pass = weak.pass;
  return tr;
}

}  // namespace fuglede
