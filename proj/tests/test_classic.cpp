#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "tailbound/classic.hpp"
#include "tailbound/verify.hpp"

using namespace tailbound;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt3 = std::numbers::sqrt3;
}  // namespace

TEST_CASE("canonicalize swaps and flags") {
  const auto swapped = canonicalize({3.0, 1.0});
  CHECK(swapped.u == 1.0);
  CHECK(swapped.v == 3.0);
  CHECK(swapped.swapped);

  const auto identity = canonicalize({1.0, 1.0});
  CHECK(identity.u == 1.0);
  CHECK(identity.v == 1.0);
  CHECK_FALSE(identity.swapped);

  const auto one_sided = canonicalize({2.0, kInf});
  CHECK(one_sided.u == 2.0);
  CHECK(std::isinf(one_sided.v));
  CHECK_FALSE(one_sided.swapped);

  CHECK_THROWS_AS(canonicalize({0.0, 1.0}), NonPositiveDeviation);
  CHECK_THROWS_AS(canonicalize({1.0, -2.0}), NonPositiveDeviation);
  CHECK_THROWS_AS(canonicalize({kInf, kInf}), BothInfinite);
}

TEST_CASE("normalize_deviation") {
  CHECK(normalize_deviation(2.0, {MomentKind::SecondMoment, 4.0}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(normalize_deviation(3.0, {MomentKind::FirstAbsolute, 1.5}) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(normalize_deviation(1.0, {MomentKind::SecondMoment, 1.0}) == 1.0);
  CHECK_THROWS_AS(normalize_deviation(1.0, {MomentKind::SecondMoment, 0.0}),
                  NonPositiveMoment);
  CHECK_THROWS_AS(normalize_deviation(1.0, {MomentKind::SecondMoment, -1.0}),
                  NonPositiveMoment);
}

TEST_CASE("chebyshev_bound") {
  CHECK(chebyshev_bound(2.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(chebyshev_bound(1.0) == 1.0);
  CHECK(chebyshev_bound(0.5) == 1.0);  // raw ratio 4 capped
  CHECK_THROWS_AS(chebyshev_bound(0.0), NonPositiveDeviation);
}

TEST_CASE("gauss_bound pieces") {
  const double knot = 2.0 / kSqrt3;
  const auto at_knot = gauss_bound(knot);
  CHECK(at_knot.bound == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::fabs(4.0 / (9.0 * knot * knot) - (1.0 - knot / kSqrt3)) < 1e-12);

  const auto wide = gauss_bound(2.0);
  CHECK(wide.bound == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(wide.region == Region::GaussPiece1);

  const auto narrow = gauss_bound(1e-9);
  CHECK(narrow.bound == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(narrow.region == Region::GaussPiece2);
}

TEST_CASE("markov_gauss_bound pieces") {
  const auto at_knot = markov_gauss_bound(1.0);
  CHECK(at_knot.bound == doctest::Approx(0.5).epsilon(1e-15));
  const auto wide = markov_gauss_bound(2.0);
  CHECK(wide.bound == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(wide.region == Region::MarkovPiece1);
  CHECK(markov_gauss_bound(1e-9).bound == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("gauss_extremal") {
  const auto mix = gauss_extremal(2.0);
  REQUIRE(mix.components.size() == 1);
  CHECK(mix.components[0].half_width == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(mix.components[0].weight == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(mix.zero_mass == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(mixture_tail(mix, 2.0, 2.0) ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-14));

  const auto narrow = gauss_extremal(1.0);
  CHECK(narrow.components[0].half_width ==
        doctest::Approx(kSqrt3).epsilon(1e-15));
  CHECK(narrow.zero_mass == 0.0);
  CHECK(mixture_tail(narrow, 1.0, 1.0) ==
        doctest::Approx(1.0 - 1.0 / kSqrt3).epsilon(1e-14));

  const double knot = 2.0 / kSqrt3;
  const auto at_knot = gauss_extremal(knot);
  CHECK(at_knot.components[0].half_width ==
        doctest::Approx(kSqrt3).epsilon(1e-14));
  CHECK(at_knot.components[0].half_width ==
        doctest::Approx(1.5 * knot).epsilon(1e-14));
  CHECK(at_knot.zero_mass == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("markov_gauss_extremal") {
  const auto mix = markov_gauss_extremal(2.0);
  REQUIRE(mix.components.size() == 1);
  CHECK(mix.components[0].half_width == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(mix.components[0].weight == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mix.zero_mass == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mixture_tail(mix, 2.0, 2.0) == doctest::Approx(0.25).epsilon(1e-14));

  const auto narrow = markov_gauss_extremal(0.5);
  CHECK(narrow.components[0].half_width == 2.0);
  CHECK(narrow.zero_mass == 0.0);
  CHECK(mixture_tail(narrow, 0.5, 0.5) ==
        doctest::Approx(0.75).epsilon(1e-14));

  const auto at_knot = markov_gauss_extremal(1.0);
  CHECK(at_knot.components[0].half_width == 2.0);
  CHECK(at_knot.zero_mass == 0.0);
}

TEST_CASE("scale invariance of raw-moment inputs") {
  for (const double lambda : {1e-3, 0.5, 2.0, 7.0, 1e3}) {
    for (const double v : {0.3, 1.0, 2.5, 8.0}) {
      const MomentSpec second{MomentKind::SecondMoment, 1.0};
      const MomentSpec second_scaled{MomentKind::SecondMoment,
                                     lambda * lambda};
      CHECK(gauss_bound(normalize_deviation(v, second)).bound ==
            doctest::Approx(
                gauss_bound(normalize_deviation(lambda * v, second_scaled))
                    .bound)
                .epsilon(1e-12));
      const MomentSpec first{MomentKind::FirstAbsolute, 1.0};
      const MomentSpec first_scaled{MomentKind::FirstAbsolute, lambda};
      CHECK(markov_gauss_bound(normalize_deviation(v, first)).bound ==
            doctest::Approx(markov_gauss_bound(
                                normalize_deviation(lambda * v, first_scaled))
                                .bound)
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("bounds are probabilities, nonincreasing, Gauss below Chebyshev") {
  double prev_gauss = 1.0, prev_markov = 1.0, prev_cheb = 1.0;
  for (int i = 0; i < 1000; ++i) {
    const double v = 0.01 + 10.0 * i / 999.0;
    const double g = gauss_bound(v).bound;
    const double m = markov_gauss_bound(v).bound;
    const double c = chebyshev_bound(v);
    CHECK(g >= 0.0);
    CHECK(g <= 1.0);
    CHECK(m >= 0.0);
    CHECK(m <= 1.0);
    CHECK(c <= 1.0);
    CHECK(g <= prev_gauss + 1e-15);
    CHECK(m <= prev_markov + 1e-15);
    CHECK(c <= prev_cheb + 1e-15);
    CHECK(g <= c + 1e-15);
    prev_gauss = g;
    prev_markov = m;
    prev_cheb = c;
  }
}

TEST_CASE("extremal mixtures: unit moment, tail equal to the bound") {
  for (int i = 0; i < 1000; ++i) {
    const double v = 0.02 + 10.0 * i / 999.0;
    const auto g = gauss_bound(v);
    CHECK(mixture_moment(g.extremal, MomentKind::SecondMoment) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mixture_tail(g.extremal, v, v) ==
          doctest::Approx(g.bound).epsilon(1e-12));
    const auto m = markov_gauss_bound(v);
    CHECK(mixture_moment(m.extremal, MomentKind::FirstAbsolute) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mixture_tail(m.extremal, v, v) ==
          doctest::Approx(m.bound).epsilon(1e-12));
  }
}

TEST_CASE("infinite deviation gives zero bound") {
  CHECK(gauss_bound(kInf).bound == 0.0);
  CHECK(markov_gauss_bound(kInf).bound == 0.0);
  CHECK(chebyshev_bound(kInf) == 0.0);
}
