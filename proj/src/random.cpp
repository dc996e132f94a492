#include "fuglede/random.hpp"

#include <algorithm>
#include <vector>

#include "fuglede/error.hpp"

namespace fuglede {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Random composition of `total` into `parts` positive integers.
std::vector<std::int64_t> composition(Rng& rng, std::int64_t total,
                                      int parts) {
  std::vector<std::int64_t> cuts;
  while (static_cast<int>(cuts.size()) < parts - 1) {
    const std::int64_t c = uniform(rng, 1, total - 1);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) {
      cuts.push_back(c);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::int64_t> out;
  std::int64_t prev = 0;
  for (auto c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

}  // namespace

Rational random_rational_in(Rng& rng, const Rational& lo, const Rational& hi,
                            std::int64_t den) {
  if (!(lo < hi)) {
    throw Error(ErrorCode::invalid_argument, "random_rational_in: lo >= hi");
  }
  const BigInt d = boost::multiprecision::lcm(denominator(lo),
                                              denominator(hi)) * den;
  const BigInt a = numerator(lo * Rational(d));
  const BigInt b = numerator(hi * Rational(d));
  const auto span = static_cast<std::int64_t>(b - a);
  const std::int64_t k = uniform(rng, 1, span - 1);
  return Rational(a + k, d);
}

StepSet random_unit_measure_set(Rng& rng, const Rational& width,
                                int max_pieces, std::int64_t den) {
  if (width < 1) {
    throw Error(ErrorCode::invalid_argument, "width must be >= 1");
  }
  const Rational scaled = width * den;
  if (denominator(scaled) != 1) {
    throw Error(ErrorCode::invalid_argument,
                "width must be a multiple of 1/den");
  }
  const auto total = static_cast<std::int64_t>(numerator(scaled));
  const std::int64_t gap_total = total - den;
  if (gap_total == 0) return StepSet::interval(0, 1);
  const int pieces = static_cast<int>(std::min<std::int64_t>(
      uniform(rng, 2, std::max(2, max_pieces)), std::min(den, gap_total + 1)));
  const auto lengths = composition(rng, den, pieces);
  const auto gaps = composition(rng, gap_total, pieces - 1);
  std::vector<std::pair<Rational, Rational>> out;
  std::int64_t x = 0;
  for (int i = 0; i < pieces; ++i) {
    out.emplace_back(Rational(x, den), Rational(x + lengths[i], den));
    x += lengths[i];
    if (i + 1 < pieces) x += gaps[i];
  }
  return StepSet::from_pieces(out);
}

StepSet random_unit_measure_set_up_to(Rng& rng, const Rational& max_width,
                                      int max_pieces, std::int64_t den) {
  const auto top = static_cast<std::int64_t>(
      floor_div(max_width * den));
  const std::int64_t w = uniform(rng, den, top);
  return random_unit_measure_set(rng, Rational(w, den), max_pieces, den);
}

StepSet random_two_interval_set(Rng& rng, const Rational& bound,
                                std::int64_t den) {
  const auto top = static_cast<std::int64_t>(floor_div(bound * den));
  std::vector<std::int64_t> cuts;
  while (cuts.size() < 4) {
    const std::int64_t c = uniform(rng, 0, top);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) {
      cuts.push_back(c);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  return StepSet::from_pieces({{Rational(cuts[0], den), Rational(cuts[1], den)},
                               {Rational(cuts[2], den), Rational(cuts[3], den)}});
}

StepSet z_tiling_from(const StepSet& f) {
  return unite(subtract(StepSet::interval(0, 1), f), f.translate(1));
}

StepSet random_step_set(Rng& rng, int max_pieces, std::int64_t span,
                        std::int64_t den) {
  const int pieces = static_cast<int>(uniform(rng, 1, std::max(1, max_pieces)));
  std::vector<std::pair<Rational, Rational>> out;
  for (int i = 0; i < pieces; ++i) {
    const std::int64_t a = uniform(rng, -span * den, span * den - 1);
    const std::int64_t len = uniform(rng, 1, den);
    out.emplace_back(Rational(a, den), Rational(a + len, den));
  }
  return StepSet::from_pieces(out);
}

}  // namespace fuglede
