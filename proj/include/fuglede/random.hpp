#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "fuglede/stepset.hpp"

namespace fuglede {

using Rng = std::mt19937_64;

/// Random rational in the open interval (lo, hi) with denominator dividing
/// `den` times the common denominator of lo and hi.
Rational random_rational_in(Rng& rng, const Rational& lo, const Rational& hi,
                            std::int64_t den = 64);

/// Step set with inf 0, sup exactly `width`, measure exactly 1 and at most
/// `max_pieces` pieces (width = 1 forces [0, 1)). Endpoints are multiples
/// of 1/den. Requires 1 <= width.
StepSet random_unit_measure_set(Rng& rng, const Rational& width,
                                int max_pieces = 4, std::int64_t den = 60);

/// Same, with the width itself drawn from [1, max_width].
StepSet random_unit_measure_set_up_to(Rng& rng, const Rational& max_width,
                                      int max_pieces = 4,
                                      std::int64_t den = 60);

/// Two disjoint intervals inside [0, bound] with endpoints in (1/den)ℤ.
StepSet random_two_interval_set(Rng& rng, const Rational& bound,
                                std::int64_t den = 100);

/// ([0, 1) \ F) u (F + 1), which tiles by ℤ.
StepSet z_tiling_from(const StepSet& f);

/// Step set with 1..max_pieces pieces in [-span, span], endpoints in
/// (1/den)ℤ; may be empty only if max_pieces == 0.
StepSet random_step_set(Rng& rng, int max_pieces = 4, std::int64_t span = 3,
                        std::int64_t den = 12);

}  // namespace fuglede
