#include "tailbound/types.hpp"

#include <cmath>

namespace tailbound {

void MomentSpec::validate() const {
  if (!(value > 0.0) || !std::isfinite(value))
    throw NonPositiveMoment("moment value must be positive and finite");
}

DeviationInterval canonicalize(DeviationInterval interval) {
  if (!(interval.u > 0.0) || !(interval.v > 0.0))
    throw NonPositiveDeviation("deviations must be positive");
  if (std::isinf(interval.u) && std::isinf(interval.v))
    throw BothInfinite("at most one of u, v may be infinite");
  interval.swapped = interval.u > interval.v;
  if (interval.swapped) std::swap(interval.u, interval.v);
  return interval;
}

double normalize_deviation(double v, const MomentSpec& spec) {
  spec.validate();
  if (!(v > 0.0)) throw NonPositiveDeviation("deviation must be positive");
  return spec.kind == MomentKind::SecondMoment ? v / std::sqrt(spec.value)
                                               : v / spec.value;
}

void SymmetricUniformMixture::validate() const {
  double mass = zero_mass;
  if (zero_mass < -1e-12 || zero_mass > 1.0 + 1e-12)
    throw InvalidMixture("zero_mass outside [0, 1]");
  double prev = 0.0;
  for (const auto& c : components) {
    if (!(c.half_width > 0.0) || !std::isfinite(c.half_width))
      throw InvalidMixture("component half-width must be positive and finite");
    if (c.half_width <= prev)
      throw InvalidMixture("half-widths must be strictly increasing");
    if (!(c.weight > 0.0) || c.weight > 1.0 + 1e-12)
      throw InvalidMixture("component weight outside (0, 1]");
    prev = c.half_width;
    mass += c.weight;
  }
  if (std::fabs(mass - 1.0) > 1e-12)
    throw InvalidMixture("masses do not sum to 1");
}

const char* region_name(Region r) {
  switch (r) {
    case Region::S1: return "S1";
    case Region::S2: return "S2";
    case Region::S3: return "S3";
    case Region::S4: return "S4";
    case Region::S5: return "S5";
    case Region::A1: return "A1";
    case Region::A2: return "A2";
    case Region::A3: return "A3";
    case Region::A4: return "A4";
    case Region::GaussPiece1: return "GaussPiece1";
    case Region::GaussPiece2: return "GaussPiece2";
    case Region::MarkovPiece1: return "MarkovPiece1";
    case Region::MarkovPiece2: return "MarkovPiece2";
    case Region::Chebyshev: return "Chebyshev";
  }
  return "?";
}

}  // namespace tailbound
