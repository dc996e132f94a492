#include <doctest.h>

#include "fuglede/analysis.hpp"
#include "fuglede/error.hpp"
#include "fuglede/random.hpp"
#include "oracles.hpp"

using namespace fuglede;

namespace {
Rational q(const char* s) { return parse_rational(s); }
StepSet S(const char* s) { return parse_step_set(s); }

oracle::GridValue grid_check(const StepSet& e, const StepSet& i,
                             const Rational& x) {
  return oracle::grid_cross_correlation(e, i, to_double(x), 4096);
}

Rational tent(const Rational& x) {
  const Rational a = x < 0 ? -x : x;
  return a < 1 ? 1 - a : Rational(0);
}
}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("autocorrelation of the unit interval is the tent") {
    const auto k = autocorrelation(S("[0,1)"));
    for (const char* x : {"-2", "-1", "-1/2", "0", "1/3", "1", "7/5"}) {
      CHECK(k(q(x)) == tent(q(x)));
    }
    CHECK(k.vanishes_at_ends());
  }

  TEST_CASE("cross-correlation examples") {
    CHECK(cross_correlation(S("[0,1)"), S("[-1,0)")) ==
          autocorrelation(S("[0,1)")));
    // x -> m(E ∩ (x - I)) for I = [-1/2, 0): 0 at -1/2, 1/2 on [0, 1/2],
    // 0 again at 1.
    const auto g = cross_correlation(S("[0,1)"), S("[-1/2,0)"));
    CHECK(g(q("-1/2")) == 0);
    CHECK(g(q("-1/4")) == q("1/4"));
    CHECK(g(0) == q("1/2"));
    CHECK(g(q("1/2")) == q("1/2"));
    CHECK(g(q("3/4")) == q("1/4"));
    CHECK(g(1) == 0);
    // The mirrored orientation x -> m(E ∩ (I + x)) is the trapezoid that
    // vanishes at 0, is 1/2 on [1/2, 1] and vanishes at 3/2.
    const auto h = cross_correlation(S("[0,1)"), S("[0,1/2)"));
    for (const char* x : {"0", "1/4", "1/2", "3/4", "1", "5/4", "3/2"}) {
      const auto shifted = intersect(S("[0,1)"), S("[-1/2,0)").translate(q(x)));
      CHECK(h(q(x)) == shifted.measure());
    }
    CHECK(h(0) == 0);
    CHECK(h(q("3/4")) == q("1/2"));
    CHECK(h(q("3/2")) == 0);
    for (int i = -12; i <= 12; ++i) {
      const Rational x(i, 8);
      const auto brute = grid_check(S("[0,1)"), S("[-1/2,0)"), x);
      CHECK(std::abs(brute.value - to_double(g(x))) <= brute.bound);
    }
    CHECK(cross_correlation(StepSet(), S("[0,1)")).empty());
  }

  TEST_CASE("comb convolution") {
    const auto k = autocorrelation(S("[0,1)"));
    const auto mu = DiracComb::lattice({0}, 1, {0});
    const auto conv = comb_convolve(k, mu, -2, 2);
    for (int i = -16; i <= 16; ++i) {
      const Rational x(i, 8);
      CHECK(conv(x) == 1 - k(x));
    }
    const auto id = comb_convolve(k, DiracComb::single(0), -2, 2);
    const auto shifted = comb_convolve(k, DiracComb::single(1, 2), -2, 3);
    for (int i = -16; i <= 16; ++i) {
      const Rational x(i, 8);
      CHECK(id(x) == k(x));
      CHECK(shifted(x) == 2 * k(x - 1));
    }
  }

  TEST_CASE("comb convolution is linear") {
    const auto f = autocorrelation(S("[0,1/2) u [1,3/2)"));
    const auto g = autocorrelation(S("[0,1)"));
    const auto mu = DiracComb::lattice({0, q("1/3")}, 2);
    const auto nu = DiracComb::single(q("1/5"), 3);
    const auto both = DiracComb({{q("1/5"), 3}},
                                DiracComb::Periodic{{0, q("1/3")}, 2, 1, {}});
    const auto lhs = comb_convolve(f + g, mu, -3, 3);
    const auto rhs = comb_convolve(f, mu, -3, 3) + comb_convolve(g, mu, -3, 3);
    const auto split =
        comb_convolve(f, mu, -3, 3) + comb_convolve(f, nu, -3, 3);
    const auto joint = comb_convolve(f, both, -3, 3);
    for (int i = -24; i <= 24; ++i) {
      const Rational x(i, 8);
      CHECK(lhs(x) == rhs(x));
      CHECK(split(x) == joint(x));
    }
  }

  TEST_CASE("covering functions") {
    const auto z = DiracComb::lattice({0}, 1);
    CHECK(covering_function(S("[0,1)"), z, -3, 3).is_identically(1));
    const auto golden = S("[0,1/2) u [1,3/2)");
    CHECK(covering_function(golden, DiracComb::lattice({0, q("1/2")}, 2), -4,
                            4)
              .is_identically(1));
    const auto c = covering_function(golden, z, -2, 2);
    CHECK(c(q("1/4")) == 2);
    CHECK(c(q("3/4")) == 0);
    CHECK(c(q("-7/4")) == 2);
    CHECK(c(q("-5/4")) == 0);
  }

  TEST_CASE("covering integral over a period") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const auto e = random_step_set(rng, 4);
      const auto mu = DiracComb::lattice({0, q("1/3")}, 2);
      const auto c = covering_function(e, mu, 0, 2);
      CHECK(c.min_value() >= 0);
      CHECK(c.integral() == 2 * e.measure());
    }
  }

  TEST_CASE("autocorrelation properties and grid oracle") {
    Rng rng(3);
    for (int trial = 0; trial < 12; ++trial) {
      const auto e = random_step_set(rng, 4);
      CAPTURE(e.to_string());
      const auto k = autocorrelation(e);
      const auto [lo, hi] = e.extremes();
      const Rational w = hi - lo;
      CHECK(k(0) == e.measure());
      CHECK(k(w) == 0);
      CHECK(k(-w - q("1/7")) == 0);
      for (int i = 0; i < 10; ++i) {
        const auto t = random_rational_in(rng, -w, w, 997);
        CHECK(k(t) == k(-t));
        CHECK(k(t) == oracle::overlap(e, t));
        const auto grid =
            oracle::grid_autocorrelation(e, to_double(t), 10000);
        CHECK(std::abs(grid.value - to_double(k(t))) <= grid.bound);
      }
    }
  }

  TEST_CASE("step function arithmetic") {
    const StepFn f({0, 1, 2}, {1, 3});
    const StepFn g({0, 2}, {1});
    const auto d = f - g;
    CHECK(d(q("1/2")) == 0);
    CHECK(d(q("3/2")) == 2);
    CHECK(f.integral() == 4);
    CHECK(f.max_value() == 3);
  }
}
