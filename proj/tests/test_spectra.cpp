#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fuglede/error.hpp"
#include "fuglede/random.hpp"
#include "fuglede/spectra.hpp"
#include "oracles.hpp"

using namespace fuglede;

namespace {
Rational q(const char* s) { return parse_rational(s); }
StepSet S(const char* s) { return parse_step_set(s); }

const char* const kTwoThirds = "[0,1/2] u [3/4,5/4]";
const char* const kThreePiece = "[0,1/8) u [1/4,1) u [9/8,5/4)";
const char* const kGolden = "[0,1/2) u [1,3/2)";

const TranslationSet kZ = TranslationSet::lattice({0}, 1);
const TranslationSet kGoldenLattice =
    TranslationSet::lattice({0, Rational(1, 2)}, 2);

std::vector<std::pair<Rational, Rational>> as_pairs(const DiffSet& d) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& p : d.intervals()) out.emplace_back(p.lo, p.hi);
  return out;
}
}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("orthogonality") {
    const auto unit = orthogonality_check(S("[0,1)"), kZ, 50);
    CHECK(unit.residual == 0);
    CHECK(unit.symbolic_zeros == unit.differences);
    CHECK(unit.points == 101);
    CHECK(orthogonality_check(S(kGolden), kGoldenLattice, 50).residual <
          1e-12);
    const auto third =
        orthogonality_check(S("[0,1)"), TranslationSet::finite({0, q("1/3")}), 1);
    CHECK(std::abs(third.residual - 3 * std::sqrt(3.0) / (2 * std::numbers::pi)) <
          1e-14);
    CHECK(third.worst_difference == q("1/3"));
    CHECK_THROWS_AS(
        orthogonality_check(S("[0,1)"), TranslationSet::finite({1, 2}), 3),
        Error);
  }

  TEST_CASE("inner products against grid integration") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      const auto e = random_step_set(rng, 3, 2, 12);
      const auto a = random_rational_in(rng, -4, 4, 7);
      const auto b = random_rational_in(rng, -4, 4, 7);
      if (a == b) continue;
      const auto lambda = TranslationSet::finite({0, b - a});
      const auto r = orthogonality_check(e, lambda, (a < b ? b - a : a - b) + 1);
      const auto grid = oracle::grid_transform(e, to_double(a - b), 1e-4);
      CHECK(std::abs(r.residual - static_cast<double>(std::abs(grid.value))) <=
            std::min(grid.bound + r.error_bound, 1e-3));
    }
  }

  TEST_CASE("completeness") {
    const auto unit = completeness_check(S("[0,1)"), kZ, q("1/64"), 1000);
    CHECK(unit.deviation <= unit.tail_bound + unit.error_bound);
    CHECK(unit.tail_bound < 1e-3);
    const auto even = completeness_check(S("[0,1)"),
                                         TranslationSet::lattice({0}, 2),
                                         q("1/64"), 1000);
    CHECK(even.deviation > 0.1);
    CHECK(even.deviation > even.tail_bound + even.error_bound);
    const auto lone = completeness_check(
        S(kGolden), TranslationSet::finite({0}), q("1/16"), 0);
    CHECK(lone.deviation > 0.1);

    double prev = 1e9;
    for (int radius : {10, 40, 160, 640}) {
      const auto c = completeness_check(S("[0,1)"), kZ, q("1/32"), radius);
      CHECK(c.deviation <= prev + 1e-15);
      CHECK(c.deviation <= c.tail_bound + c.error_bound);
      prev = c.deviation;
    }
  }

  TEST_CASE("spectrum verdicts") {
    CHECK(spectrum_report(S(kGolden), kGoldenLattice, 20, q("1/32"), 400)
              .verdict == SpectrumVerdict::spectrum_consistent);
    CHECK(spectrum_report(S("[0,1)"), TranslationSet::lattice({0}, 2), 20,
                          q("1/32"), 400)
              .verdict == SpectrumVerdict::orthogonal_but_incomplete);
    CHECK(spectrum_report(S("[0,1)"), TranslationSet::lattice({0}, q("1/2")),
                          20, q("1/32"), 400)
              .verdict == SpectrumVerdict::not_orthogonal);
  }

  TEST_CASE("D_n sets") {
    const auto d2 = build_dn(q("3/4"), 2);
    CHECK(d2.d == S("[0,3/4) u [7/4,2)"));
    CHECK(d2.d_minus_d.to_string() == "[-2, -1] u [-3/4, 3/4] u [1, 2]");
    CHECK(d2.d_minus_d == d2.expected);
    CHECK(d2.measure == 1);
    const auto d1 = build_dn(q("3/4"), 1);
    CHECK(d1.d == S("[0,1)"));
    CHECK(d1.d_minus_d.to_string() == "[-1, 1]");
    CHECK_THROWS_AS(build_dn(q("1/2"), 2), Error);
    CHECK_THROWS_AS(build_dn(q("3/4"), 0), Error);
  }

  TEST_CASE("D_n against brute force") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
      const auto t0 = random_rational_in(rng, q("1/2"), 1, 97);
      const int n = 1 + static_cast<int>(rng() % 12);
      const auto dn = build_dn(t0, n);
      CHECK(dn.d.measure() == 1);
      CHECK(as_pairs(dn.d_minus_d) == oracle::brute_difference_set(dn.d));
      CHECK(dn.d_minus_d == difference_set(dn.d));
    }
  }

  TEST_CASE("D-set condition") {
    const auto unit = dset_condition(S("[0,1)"), S("[0,1)"));
    CHECK(unit.holds);
    CHECK(unit.branch == DsetBranch::transfers_to_f);
    CHECK(unit.measure_d == 1);
    CHECK(unit.endpoint_zeros == std::vector<Rational>{1});

    const auto two = dset_condition(S(kTwoThirds), S("[0,1)"));
    CHECK_FALSE(two.holds);
    CHECK(two.branch == DsetBranch::condition_fails);
    REQUIRE(two.zero);
    CHECK(two.zero->exact == q("2/3"));

    const auto three = dset_condition(S(kThreePiece), S("[-1/4,1/4)"));
    CHECK(three.holds);
    CHECK(three.measure_d == q("1/2"));
    CHECK(three.branch == DsetBranch::no_conclusion);

    const auto big = dset_condition(S("[0,1)"), S("[0,1/2) u [5/4,7/4)"));
    CHECK(big.holds == false);
  }

  TEST_CASE("product spectra") {
    const auto zz = product_spectrum(kZ, kZ);
    CHECK(zz.enumerate(1).size() == 9);
    const auto golden = product_spectrum(kGoldenLattice, kZ);
    const auto po =
        product_orthogonality(S(kGolden), S("[0,1)"), golden, 20);
    CHECK(po.first.residual < 1e-12);
    CHECK(po.second.residual < 1e-12);
    CHECK(po.residual < 1e-12);
    const auto bad = product_orthogonality(
        S("[0,1)"), S("[0,1)"),
        product_spectrum(TranslationSet::finite({0, q("1/3")}), kZ), 5);
    CHECK(bad.first.residual > 0.8);
    CHECK(bad.second.residual == 0);
    CHECK_THROWS_AS(
        product_spectrum(TranslationSet::finite({1}), kZ), Error);
  }

  TEST_CASE("witness scan") {
    const auto unit = prop33_witness_scan(S("[0,1)"), 8);
    CHECK(unit.status == ScanStatus::no_zero_below_one);

    const auto two = prop33_witness_scan(S(kTwoThirds), 8);
    CHECK(two.status == ScanStatus::scanned);
    REQUIRE(two.t0);
    CHECK(*two.t0 == q("2/3"));
    REQUIRE(two.first_missing);
    CHECK(*two.first_missing <= 8);
    REQUIRE(two.dn);
    CHECK(two.dn->n == *two.first_missing);
    CHECK(two.smallest_violating == 8);
  }
}
