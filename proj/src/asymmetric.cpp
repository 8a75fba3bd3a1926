#include "tailbound/asymmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tailbound/classic.hpp"

namespace tailbound {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kTwoOverSqrt3 = 2.0 / kSqrt3;
constexpr double kFourOverSqrt3 = 4.0 / kSqrt3;
constexpr double kS2Slope = 2.0 * std::numbers::sqrt2 - 1.0;

void require_canonical(double u, double v) {
  if (!(u > 0.0) || !(v > 0.0))
    throw NonPositiveDeviation("deviations must be positive");
  if (std::isinf(u)) throw NotCanonical("u must be finite");
  if (!(u <= v)) throw NotCanonical("canonical form requires u <= v");
}

// Upper boundary of S4 / lower boundary of S5.
double s4_upper_curve(double u) {
  return (std::pow(1.0 + 2.0 / (kSqrt3 * u), 1.5) - 1.0) * u;
}

}  // namespace

double psi_semenikhin(double u) {
  if (!(u > 0.0) || u > 3.0)
    throw DomainError("psi_semenikhin: need 0 < u <= 3");
  const double t = u / 3.0;
  const double t2 = t * t;
  if (t2 == 0.0) return kTwoOverSqrt3 - u;  // below double underflow of t^2
  const double root = std::sqrt((1.0 - t) * (1.0 + t));
  const double d = t2 / (1.0 + root);  // 1 - sqrt(1 - t^2), cancellation-free
  const double t23 = std::cbrt(t2);
  const double d13 = std::cbrt(d);
  return kTwoOverSqrt3 - u + kSqrt3 * t23 * (d13 + t23 / d13);
}

Region classify_region_second(double u, double v) {
  require_canonical(u, v);
  if (std::isinf(v)) return u >= kTwoOverSqrt3 ? Region::S3 : Region::S5;

  if (u > kTwoOverSqrt3) {
    // S1, S4 and S5 live left of u = 2/sqrt(3); only S2/S3 remain, and
    // v >= 4/sqrt(3) - u holds automatically here.
    return v <= kS2Slope * u ? Region::S2 : Region::S3;
  }

  const double psi = psi_semenikhin(u);
  const double s1_cap = kFourOverSqrt3 - u;
  const double s2_cap = kS2Slope * u;
  const double s45 = s4_upper_curve(u);
  // first match in fixed order; the piecewise formulas agree wherever two
  // closures meet, so boundary assignment is value-neutral
  if (v <= std::min(psi, s1_cap)) return Region::S1;
  if (s1_cap <= v && v <= s2_cap) return Region::S2;
  if (u >= kTwoOverSqrt3 && v >= s2_cap) return Region::S3;
  if (std::max(psi, s2_cap) <= v && v <= s45) return Region::S4;
  if (v >= s45) return Region::S5;

  // The curve comparisons above can disagree by an ulp right at the corner
  // where psi, 4/sqrt(3)-u and (2sqrt(2)-1)u meet; retry with slack.
  const double eps = 1e-9 * (1.0 + v);
  if (v <= std::min(psi, s1_cap) + eps) return Region::S1;
  if (s1_cap - eps <= v && v <= s2_cap + eps) return Region::S2;
  if (std::max(psi, s2_cap) - eps <= v && v <= s45 + eps) return Region::S4;
  if (v >= s45 - eps) return Region::S5;
  throw std::logic_error("classify_region_second: point not covered");
}

Region classify_region_first(double u, double v) {
  require_canonical(u, v);
  if (std::isinf(v)) return u <= 1.0 ? Region::A2 : Region::A4;
  if (v <= 2.0 - u) return Region::A1;
  if (u <= 1.0) {
    const double a23 = 2.0 + u * u / (2.0 - u);
    return v > a23 ? Region::A2 : Region::A3;
  }
  return v <= 3.0 * u ? Region::A3 : Region::A4;
}

double semenikhin_piece_value(Region r, double u, double v) {
  switch (r) {
    case Region::S1:
      return 1.0 - (u + v) / (2.0 * kSqrt3);
    case Region::S2:
      return 16.0 / (9.0 * (u + v) * (u + v));
    case Region::S3:
      return 2.0 / (9.0 * u * u);
    case Region::S4: {
      const double u23 = std::cbrt(u * u);
      const double delta = std::cbrt((u + v) * (u + v)) - u23;
      return 0.5 *
             (1.0 - u23 / delta + 4.0 / (9.0 * delta * delta * delta));
    }
    case Region::S5:
      return 0.5 * (1.0 - u / kSqrt3);
    default:
      throw DomainError("semenikhin_piece_value: not an S-region");
  }
}

double markov_asym_piece_value(Region r, double u, double v) {
  switch (r) {
    case Region::A1:
      return 1.0 - 0.25 * (u + v);
    case Region::A2:
      return 0.5 - 0.25 * u;
    case Region::A3:
      return 1.0 / (u + v);
    case Region::A4:
      return 1.0 / (4.0 * u);
    default:
      throw DomainError("markov_asym_piece_value: not an A-region");
  }
}

SymmetricUniformMixture semenikhin_extremal(double u, double v) {
  const Region region = classify_region_second(u, v);
  SymmetricUniformMixture mix;
  switch (region) {
    case Region::S1:
    case Region::S5:
      mix.components.push_back({kSqrt3, 1.0});
      break;
    case Region::S2: {
      const double weight = 16.0 / (3.0 * (u + v) * (u + v));
      mix.zero_mass = 1.0 - weight;
      mix.components.push_back({0.75 * (u + v), weight});
      break;
    }
    case Region::S3: {
      const double weight = 4.0 / (3.0 * u * u);
      mix.zero_mass = 1.0 - weight;
      mix.components.push_back({1.5 * u, weight});
      break;
    }
    case Region::S4: {
      const double u13 = std::cbrt(u);
      const double uv13 = std::cbrt(u + v);
      const double delta = uv13 * uv13 - u13 * u13;
      const double narrow = 1.5 * u13 * delta;
      const double wide = 1.5 * uv13 * delta;
      double p = (4.0 - 3.0 * u13 * u13 * delta * delta) /
                 (3.0 * delta * delta * delta);
      if (p < -1e-10 || p > 1.0 + 1e-10)
        throw InvalidWeight("S4 mixing weight outside [0, 1]");
      p = std::clamp(p, 0.0, 1.0);
      if (p >= 1.0 - 1e-14) {
        mix.components.push_back({wide, 1.0});
      } else if (p <= 1e-14) {
        mix.components.push_back({narrow, 1.0});
      } else {
        mix.components.push_back({narrow, 1.0 - p});
        mix.components.push_back({wide, p});
      }
      break;
    }
    default:
      break;  // unreachable
  }
  return mix;
}

SymmetricUniformMixture markov_asym_extremal(double u, double v) {
  const Region region = classify_region_first(u, v);
  SymmetricUniformMixture mix;
  switch (region) {
    case Region::A1:
    case Region::A2:
      mix.components.push_back({2.0, 1.0});
      break;
    case Region::A3: {
      const double weight = 2.0 / (u + v);
      if (weight > 1.0 + 1e-12)
        throw InvalidWeight("A3 weight exceeds 1");
      mix.zero_mass = std::max(1.0 - weight, 0.0);
      mix.components.push_back({u + v, std::min(weight, 1.0)});
      break;
    }
    case Region::A4: {
      const double weight = 1.0 / u;
      if (weight > 1.0 + 1e-12)
        throw InvalidWeight("A4 weight exceeds 1");
      mix.zero_mass = std::max(1.0 - weight, 0.0);
      mix.components.push_back({2.0 * u, std::min(weight, 1.0)});
      break;
    }
    default:
      break;  // unreachable
  }
  return mix;
}

BoundResult semenikhin_bound(double u, double v) {
  const Region region = classify_region_second(u, v);
  BoundResult result;
  result.region = region;
  result.uncapped = semenikhin_piece_value(region, u, v);
  result.bound = std::min(1.0, result.uncapped);
  result.extremal = semenikhin_extremal(u, v);
  return result;
}

BoundResult markov_asym_bound(double u, double v) {
  const Region region = classify_region_first(u, v);
  BoundResult result;
  result.region = region;
  result.uncapped = markov_asym_piece_value(region, u, v);
  result.bound = std::min(1.0, result.uncapped);
  result.extremal = markov_asym_extremal(u, v);
  return result;
}

BoundResult general_unimodal_bound(double u, double v, const MomentSpec& spec) {
  require_canonical(u, v);
  const double un = normalize_deviation(u, spec);
  BoundResult result = spec.kind == MomentKind::SecondMoment
                           ? gauss_bound(un)
                           : markov_gauss_bound(un);
  // attained by putting all mass on the side of the nearer deviation
  result.extremal.one_sided = true;
  return result;
}

}  // namespace tailbound
