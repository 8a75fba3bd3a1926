#include "tailbound/classic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tailbound {

namespace {

constexpr double kTwoOverSqrt3 = 2.0 / std::numbers::sqrt3;

void require_positive(double v) {
  if (!(v > 0.0)) throw NonPositiveDeviation("deviation must be positive");
}

}  // namespace

double chebyshev_bound(double v) {
  require_positive(v);
  return std::min(1.0, 1.0 / (v * v));
}

SymmetricUniformMixture gauss_extremal(double v) {
  require_positive(v);
  SymmetricUniformMixture mix;
  if (std::isinf(v)) {  // limiting case: any unit-moment law has zero tail
    mix.components.push_back({std::numbers::sqrt3, 1.0});
    return mix;
  }
  const double c = std::max(1.5 * v, std::numbers::sqrt3);
  mix.zero_mass = std::max(1.0 - 4.0 / (3.0 * v * v), 0.0);
  mix.components.push_back({c, 1.0 - mix.zero_mass});
  return mix;
}

SymmetricUniformMixture markov_gauss_extremal(double v) {
  require_positive(v);
  SymmetricUniformMixture mix;
  if (std::isinf(v)) {
    mix.components.push_back({2.0, 1.0});
    return mix;
  }
  const double c = 2.0 * std::max(v, 1.0);
  mix.zero_mass = std::max(1.0 - 2.0 / c, 0.0);
  mix.components.push_back({c, 1.0 - mix.zero_mass});
  return mix;
}

BoundResult gauss_bound(double v) {
  require_positive(v);
  BoundResult result;
  if (v >= kTwoOverSqrt3) {
    result.uncapped = 4.0 / (9.0 * v * v);
    result.region = Region::GaussPiece1;
  } else {
    result.uncapped = 1.0 - v / std::numbers::sqrt3;
    result.region = Region::GaussPiece2;
  }
  result.bound = std::min(1.0, result.uncapped);
  result.extremal = gauss_extremal(v);
  return result;
}

BoundResult markov_gauss_bound(double v) {
  require_positive(v);
  BoundResult result;
  if (v >= 1.0) {
    result.uncapped = 1.0 / (2.0 * v);
    result.region = Region::MarkovPiece1;
  } else {
    result.uncapped = 1.0 - 0.5 * v;
    result.region = Region::MarkovPiece2;
  }
  result.bound = std::min(1.0, result.uncapped);
  result.extremal = markov_gauss_extremal(v);
  return result;
}

}  // namespace tailbound
