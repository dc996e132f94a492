#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "fuglede/fourier.hpp"
#include "fuglede/random.hpp"
#include "oracles.hpp"

using namespace fuglede;

namespace {
Rational q(const char* s) { return parse_rational(s); }
StepSet S(const char* s) { return parse_step_set(s); }
const double pi = std::numbers::pi;

const char* const kTwoThirds = "[0,1/2] u [3/4,5/4]";
const char* const kThreePiece = "[0,1/8) u [1/4,1) u [9/8,5/4)";
const char* const kGolden = "[0,1/2) u [1,3/2)";

std::vector<Rational> exact_zeros(const RealZeroList& list) {
  std::vector<Rational> out;
  for (const auto& z : list.zeros) {
    REQUIRE(z.exact.has_value());
    out.push_back(*z.exact);
  }
  return out;
}
}  // namespace

TEST_SUITE("fourier") {
  TEST_CASE("transform values") {
    const auto unit = S("[0,1)");
    CHECK(xhat_eval(unit, Complex(0)).value == Complex(1));
    for (int k : {-3, -1, 1, 2, 5}) {
      CHECK(std::abs(xhat_eval(unit, Complex(k)).value) < 1e-15);
      CHECK(is_exact_zero(unit, Rational(k)));
    }
    const auto half = xhat_eval(unit, Complex(0.5)).value;
    CHECK(std::abs(half - Complex(0, -2 / pi)) < 1e-15);
    CHECK(std::abs(xhat_eval(S(kTwoThirds), Complex(2.0 / 3)).value) < 1e-14);
    CHECK(is_exact_zero(S(kTwoThirds), q("2/3")));
    CHECK_FALSE(is_exact_zero(S(kTwoThirds), q("1/2")));
    CHECK_FALSE(is_exact_zero(unit, 0));
  }

  TEST_CASE("closed form agrees with a long double oracle off the axis") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const auto e = random_step_set(rng, 5);
      const IndicatorTransform f(e);
      for (double re : {-7.3, -1.1, 0.37, 2.9, 11.5}) {
        for (double im : {-0.6, 0.0, 0.25}) {
          const Complex z(re, im);
          const auto got = f(z);
          const auto want = oracle::closed_transform(e, {re, im});
          const double diff =
              std::abs(got.value - Complex(static_cast<double>(want.real()),
                                           static_cast<double>(want.imag())));
          CHECK(diff <= got.error_bound + 1e-15);
          CHECK(got.error_bound < 1e-8);
        }
      }
    }
  }

  TEST_CASE("series and closed form agree at the switch") {
    for (const char* text : {"[0,1)", kGolden, kThreePiece, "[-3,-2) u [5,7)"}) {
      const IndicatorTransform f(S(text));
      const double r = f.series_threshold();
      for (double theta : {0.0, 0.7, 2.0, 3.1}) {
        const Complex below = std::polar(r * (1 - 1e-13), theta);
        const Complex above = std::polar(r * (1 + 1e-13), theta);
        CHECK(std::abs(f.eval_series(below).value -
                       f.eval_closed(above).value) < 1e-12);
        CHECK(std::abs(f(below).value - f(above).value) < 1e-12);
        CHECK(std::abs(f.eval_series(above).value -
                       f.eval_closed(above).value) < 1e-12);
      }
    }
  }

  TEST_CASE("conjugate symmetry and translation covariance") {
    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      const auto e = random_step_set(rng, 4);
      const auto h = random_rational_in(rng, -5, 5, 13);
      for (double xi : {0.13, 0.5, 1.7, 4.25, 9.9}) {
        const auto plus = xhat_eval(e, Complex(xi));
        const auto minus = xhat_eval(e, Complex(-xi));
        CHECK(std::abs(plus.value - std::conj(minus.value)) <=
              plus.error_bound + minus.error_bound + 1e-15);
        const auto moved = xhat_eval(e.translate(h), Complex(xi));
        CHECK(std::abs(moved.abs() - plus.abs()) <=
              moved.error_bound + plus.error_bound + 1e-14);
      }
    }
  }

  TEST_CASE("derivative against finite differences") {
    const IndicatorTransform f(S(kThreePiece));
    for (double re : {0.01, 0.4, 3.3}) {
      const Complex z(re, 0.2);
      const double h = 1e-6;
      const Complex fd = (f(z + h).value - f(z - h).value) / (2 * h);
      CHECK(std::abs(f.derivative(z).value - fd) < 1e-6);
      CHECK(std::abs(f.derivative(z).value) <= f.derivative_bound(0.2, 0.2));
    }
  }

  TEST_CASE("Parseval spot check") {
    const auto e = S(kThreePiece);
    const double T = 1000;
    const double j = static_cast<double>(e.size());
    // Symmetric in ξ, so integrate over [0, T] and double.
    const int cells = 4'000'000;
    const double h = T / cells;
    double sum = 0;
    const IndicatorTransform f(e);
    for (int k = 0; k < cells; ++k) {
      sum += std::norm(f(Complex((k + 0.5) * h)).value);
    }
    const double integral = 2 * sum * h;
    CHECK(std::abs(integral - to_double(e.measure())) <=
          2 * j * j / (pi * pi * T) + 1e-6);
  }

  TEST_CASE("real zero location") {
    CHECK(exact_zeros(locate_real_zeros(S("[0,1)"), q("1/2"), q("5/2"),
                                        1e-9)) ==
          std::vector<Rational>{1, 2});
    // (1 - e^{-πiξ})(1 + e^{-2πiξ}) / (2πiξ): zeros at 2Z \ {0} and 1/2 + Z.
    CHECK(exact_zeros(locate_real_zeros(S(kGolden), q("1/4"), 1, 1e-9)) ==
          std::vector<Rational>{q("1/2")});
    CHECK(exact_zeros(locate_real_zeros(S(kGolden), q("1/4"), q("9/4"), 1e-9)) ==
          std::vector<Rational>{q("1/2"), q("3/2"), 2});
    const auto two = locate_real_zeros(S(kTwoThirds), q("1/100"), q("99/100"),
                                        1e-9);
    CHECK(exact_zeros(two) == std::vector<Rational>{q("2/3")});
    const auto& box = two.zeros.front().enclosure;
    CHECK(box.re_lo >= 2.0 / 3 - 1e-9);
    CHECK(box.re_hi <= 2.0 / 3 + 1e-9);
    CHECK(two.zeros.front().winding == 1);
  }

  TEST_CASE("real zeros come in symmetric pairs") {
    const auto e = S(kTwoThirds);
    const auto pos = locate_real_zeros(e, q("1/10"), 9, 1e-9);
    const auto neg = locate_real_zeros(e, -9, q("-1/10"), 1e-9);
    REQUIRE(pos.zeros.size() == neg.zeros.size());
    for (std::size_t i = 0; i < pos.zeros.size(); ++i) {
      const auto& a = pos.zeros[i];
      const auto& b = neg.zeros[neg.zeros.size() - 1 - i];
      CHECK(a.winding == b.winding);
      REQUIRE(a.exact);
      REQUIRE(b.exact);
      CHECK(*a.exact == -*b.exact);
    }
  }

  TEST_CASE("double zeros have winding two") {
    const auto list = locate_real_zeros(S(kTwoThirds), q("3/2"), q("5/2"), 1e-9);
    REQUIRE(list.zeros.size() == 1);
    CHECK(list.zeros.front().winding == 2);
    CHECK(list.zeros.front().exact == Rational(2));
  }

  TEST_CASE("winding number of a box around a known zero") {
    const IndicatorTransform f(S("[0,1)"));
    CHECK(winding_number(f, {0.9, 1.1, -0.1, 0.1}) == 1);
    CHECK(winding_number(f, {0.9, 2.1, -0.1, 0.1}) == 2);
    CHECK(winding_number(f, {1.2, 1.8, -0.3, 0.3}) == 0);
    CHECK_FALSE(winding_number(f, {1.0, 1.5, -0.1, 0.1}).has_value());
  }

  TEST_CASE("zero-free certification") {
    CHECK(certify_zero_free(S("[0,1)"), q("-1/2"), q("1/2")).status ==
          CertStatus::zero_free);
    CHECK(certify_zero_free(S(kThreePiece), q("-1/2"), q("1/2")).status ==
          CertStatus::zero_free);
    const auto found = certify_zero_free(S(kTwoThirds), 0, 1);
    REQUIRE(found.status == CertStatus::zero_found);
    REQUIRE(found.zero);
    CHECK(found.zero->exact == q("2/3"));
    CHECK(certify_zero_free(S("[0,1)"), q("1/2"), 1).status ==
          CertStatus::inconclusive);
  }

  TEST_CASE("first positive zero") {
    CHECK_FALSE(first_positive_zero(S("[0,1)")).has_value());
    const auto z = first_positive_zero(S(kTwoThirds));
    REQUIRE(z);
    CHECK(z->exact == q("2/3"));
  }

  TEST_CASE("factorization") {
    const auto unit = tiling_factorization(S("[0,1)"));
    CHECK(unit.f.empty());
    CHECK(unit.max_residual < 1e-15);
    const auto three = tiling_factorization(S(kThreePiece));
    CHECK(three.f == S("[1/8,1/4)"));
    CHECK(three.max_residual < 1e-12);
    CHECK(three.frequencies.size() == 64);
    try {
      tiling_factorization(S(kGolden));
      FAIL("expected an error");
    } catch (const NotZTilingError& err) {
      CHECK(err.covering()(q("1/4")) == 2);
      CHECK(err.covering()(q("3/4")) == 0);
    }
  }

  TEST_CASE("factorization identity against the oracle") {
    const auto e = S(kThreePiece);
    const auto f = S("[1/8,1/4)");
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    const oracle::LComplex i(0, 1);
    for (double xi : default_factorization_frequencies()) {
      const oracle::LComplex z(xi);
      const auto lhs = oracle::closed_transform(e, z);
      const auto rhs = (std::exp(-i * two_pi * z) - 1.0L) *
                       (oracle::closed_transform(f, z) - 1.0L / (i * two_pi * z));
      CHECK(std::abs(lhs - rhs) < 1e-15L);
    }
  }

  TEST_CASE("Jensen on the unit interval") {
    const auto small = jensen_audit(S("[0,1)"), 0.5);
    CHECK(small.zeros_used.empty());
    CHECK(std::abs(small.lhs) == 0);
    CHECK(std::abs(small.rhs) < 1e-9);
    for (double rho : {2.5, 3.0, 5.5}) {
      const auto j = jensen_audit(S("[0,1)"), rho);
      double lhs = 0;
      for (int k = 1; k <= static_cast<int>(rho); ++k) {
        lhs += 2 * std::log(rho / k);
      }
      CHECK(std::abs(j.lhs - lhs) < 1e-9);
      CHECK(j.agrees(1e-8));
    }
    CHECK(std::abs(jensen_audit(S("[0,1)"), 2.5).lhs -
                   2 * (std::log(2.5) + std::log(1.25))) < 1e-12);
  }

  TEST_CASE("Jensen bound on an admissible set") {
    const auto j = jensen_audit(S(kGolden), 5);
    REQUIRE(j.paper_bound);
    CHECK(*j.paper_bound == 15);
    CHECK(j.within_bound(1e-6));
    CHECK(j.agrees(1e-6));
    CHECK_FALSE(jensen_audit(S("[0,1/4) u [7/4,5/2)"), 2).paper_bound);
  }

  TEST_CASE("growth bound") {
    const auto one = growth_contradiction(1);
    CHECK(one.lower == 0);
    CHECK(one.upper == 3);
    CHECK_FALSE(one.violated);
    CHECK(std::abs(growth_contradiction(7).lower - 20.38) < 0.01);
    CHECK_FALSE(growth_contradiction(7).violated);
    CHECK(std::abs(growth_contradiction(8).lower - 24.12) < 0.01);
    CHECK(growth_contradiction(8).violated);
    CHECK(smallest_violating_n(100) == 8);
    CHECK(smallest_violating_n(7) == 0);
    double prev = 0;
    for (int n = 1; n <= 60; ++n) {
      const auto g = growth_contradiction(n);
      CHECK(g.lower >= prev);
      prev = g.lower;
      const long double want = 4 * (n * std::log(static_cast<long double>(n)) -
                                    oracle::log_factorial(n));
      CHECK(std::abs(g.lower - static_cast<double>(want)) < 1e-9);
    }
    std::vector<double> b;
    for (int n = 1; n <= 8; ++n) b.push_back(n - 0.5);
    CHECK(growth_contradiction(8, b).violated);
    b[3] = 4.5;
    CHECK_THROWS_AS(growth_contradiction(8, b), Error);
  }

  TEST_CASE("zero CSV") {
    std::ostringstream out;
    write_zero_csv(out, locate_real_zeros(S("[0,1)"), q("1/2"), q("3/2"),
                                          1e-9)
                            .zeros);
    std::istringstream in(out.str());
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].rfind("index,re_lo,re_hi", 0) == 0);
    CHECK(lines[2].find(",1,real,1,") != std::string::npos);
  }
}
