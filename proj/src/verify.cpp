#include "tailbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tailbound/asymmetric.hpp"

namespace tailbound {

namespace {

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

double moment_of_atom(double y, MomentKind kind) {
  return kind == MomentKind::SecondMoment ? y * y : y;
}

}  // namespace

double mixture_tail(const SymmetricUniformMixture& mix, double u, double v) {
  mix.validate();
  if (!(u > 0.0) || !(v > 0.0))
    throw NonPositiveDeviation("mixture_tail: deviations must be positive");
  double total = 0.0;
  for (const auto& comp : mix.components) {
    const double below = positive_part(1.0 - u / comp.half_width);
    if (mix.one_sided) {
      total += comp.weight * below;
    } else {
      const double above = positive_part(1.0 - v / comp.half_width);
      total += comp.weight * 0.5 * (below + above);
    }
  }
  return total;
}

double mixture_moment(const SymmetricUniformMixture& mix, MomentKind kind) {
  mix.validate();
  double total = 0.0;
  for (const auto& comp : mix.components) {
    const double c = comp.half_width;
    total += comp.weight *
             (kind == MomentKind::SecondMoment ? c * c / 3.0 : 0.5 * c);
  }
  return total;
}

void OracleConfig::validate() const {
  if (grid_points_per_axis < 64)
    throw std::invalid_argument("oracle: grid_points_per_axis >= 64");
  if (refine_iterations < 2)
    throw std::invalid_argument("oracle: refine_iterations >= 2");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("oracle: tolerance must be positive");
}

double two_atom_oracle(double u, double v, MomentKind kind,
                       const OracleConfig& cfg) {
  cfg.validate();
  if (!(u > 0.0) || !(v > 0.0) || std::isinf(u) || !(u <= v))
    throw NotCanonical("two_atom_oracle: need canonical 0 < u <= v");

  const double target = kind == MomentKind::SecondMoment ? 3.0 : 2.0;
  const double single_atom =
      kind == MomentKind::SecondMoment ? std::sqrt(3.0) : 2.0;
  const double v_finite = std::isfinite(v) ? v : u;
  const double limit =
      cfg.atom_upper_limit > 0.0
          ? cfg.atom_upper_limit
          : 4.0 * std::max({u, v_finite, single_atom});

  auto phi = [&](double y) {
    if (!(y > 0.0)) return 0.0;
    const double below = positive_part(1.0 - u / y);
    const double above = std::isfinite(v) ? positive_part(1.0 - v / y) : 0.0;
    return 0.5 * (below + above);
  };

  const int n = cfg.grid_points_per_axis;
  auto build_axis = [&](double lo, double hi) {
    std::vector<double> ys;
    ys.reserve(static_cast<std::size_t>(n) + 4);
    for (int i = 0; i < n; ++i)
      ys.push_back(lo + (hi - lo) * i / (n - 1));
    // bracket the kinks of phi and the one-atom feasible point explicitly
    for (double extra : {u, v, single_atom})
      if (std::isfinite(extra) && extra > lo && extra < hi)
        ys.push_back(extra);
    return ys;
  };

  double lo1 = 0.0, hi1 = limit, lo2 = 0.0, hi2 = limit;
  // the one-atom law at m(y) = target is always feasible
  double best = phi(single_atom);
  double best_y1 = single_atom, best_y2 = single_atom;

  for (int round = 0; round <= cfg.refine_iterations; ++round) {
    const std::vector<double> axis1 = build_axis(lo1, hi1);
    const std::vector<double> axis2 = build_axis(lo2, hi2);
    std::vector<double> phi2(axis2.size()), m2(axis2.size());
    for (std::size_t j = 0; j < axis2.size(); ++j) {
      phi2[j] = phi(axis2[j]);
      m2[j] = moment_of_atom(axis2[j], kind);
    }
    for (const double y1 : axis1) {
      const double m1 = moment_of_atom(y1, kind);
      if (m1 > target) continue;
      const double p1 = phi(y1);
      for (std::size_t j = 0; j < axis2.size(); ++j) {
        if (m2[j] < target) continue;
        const double den = m2[j] - m1;
        double value;
        if (den <= 0.0) {  // both atoms sit exactly at the moment target
          value = std::max(p1, phi2[j]);
        } else {
          const double q = (target - m1) / den;  // weight on the outer atom
          value = p1 + q * (phi2[j] - p1);
        }
        if (value > best) {
          best = value;
          best_y1 = y1;
          best_y2 = axis2[j];
        }
      }
    }
    const double w1 = 2.0 * (hi1 - lo1) / (n - 1);
    const double w2 = 2.0 * (hi2 - lo2) / (n - 1);
    lo1 = std::max(0.0, best_y1 - w1);
    hi1 = std::min(limit, best_y1 + w1);
    lo2 = std::max(0.0, best_y2 - w2);
    hi2 = std::min(limit, best_y2 + w2);
  }

  if (std::max(best_y1, best_y2) >= 0.99 * limit)
    throw HorizonHit("two_atom_oracle: maximizer within 1% of atom_upper_limit");
  return best;
}

EmpiricalTail::Estimate EmpiricalTail::tail(double u, double v) const {
  if (!(u > 0.0) || !(v > 0.0))
    throw NonPositiveDeviation("empirical tail: deviations must be positive");
  const auto low =
      std::upper_bound(samples_.begin(), samples_.end(), -u) -
      samples_.begin();
  const auto high =
      samples_.end() - std::lower_bound(samples_.begin(), samples_.end(), v);
  Estimate est;
  est.frequency = static_cast<double>(low + high) /
                  static_cast<double>(samples_.size());
  est.std_error = std::sqrt(est.frequency * (1.0 - est.frequency) /
                            static_cast<double>(samples_.size()));
  return est;
}

EmpiricalTail sample_mixture(const SymmetricUniformMixture& mix, std::size_t n,
                             std::uint64_t seed) {
  mix.validate();
  if (n < 1) throw std::invalid_argument("sample_mixture: n >= 1");
  Xoshiro256pp rng(seed);
  EmpiricalTail result;
  result.samples_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = rng.uniform01();
    double x = 0.0;
    double acc = mix.zero_mass;
    if (r >= acc && !mix.components.empty()) {
      std::size_t chosen = mix.components.size() - 1;
      for (std::size_t k = 0; k < mix.components.size(); ++k) {
        acc += mix.components[k].weight;
        if (r < acc) {
          chosen = k;
          break;
        }
      }
      const double c = mix.components[chosen].half_width;
      const double p = rng.uniform01();
      x = mix.one_sided ? -c * p : c * (2.0 * p - 1.0);
    }
    result.samples_.push_back(x);
  }
  std::sort(result.samples_.begin(), result.samples_.end());
  return result;
}

SymmetricUniformMixture random_unit_mixture(MomentKind kind,
                                            Xoshiro256pp& rng) {
  const int k = std::min(3, 1 + static_cast<int>(rng.uniform01() * 3.0));
  std::vector<double> widths(k);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& w : widths) w = rng.uniform(0.2, 5.0);
    std::sort(widths.begin(), widths.end());
    bool distinct = true;
    for (int i = 1; i < k; ++i)
      if (widths[i] - widths[i - 1] < 1e-4) distinct = false;
    if (distinct) break;
  }
  const double zero = rng.uniform(0.0, 0.5);
  std::vector<double> raw(k);
  double raw_sum = 0.0;
  for (auto& g : raw) {
    g = 0.05 + rng.uniform01();
    raw_sum += g;
  }
  SymmetricUniformMixture mix;
  mix.zero_mass = zero;
  for (int i = 0; i < k; ++i)
    mix.components.push_back({widths[i], (1.0 - zero) * raw[i] / raw_sum});
  const double moment = mixture_moment(mix, kind);
  const double scale =
      kind == MomentKind::SecondMoment ? std::sqrt(moment) : moment;
  for (auto& comp : mix.components) comp.half_width /= scale;
  return mix;
}

SharpnessReport sharpness_report(double u, double v, MomentKind kind,
                                 const OracleConfig& cfg) {
  SharpnessReport report;
  const BoundResult closed = kind == MomentKind::SecondMoment
                                 ? semenikhin_bound(u, v)
                                 : markov_asym_bound(u, v);
  report.closed_form_bound = closed.bound;
  report.region = closed.region;
  report.extremal_tail = mixture_tail(closed.extremal, u, v);
  report.oracle_value = two_atom_oracle(u, v, kind, cfg);
  report.pass = true;
  std::ostringstream why;
  if (std::fabs(report.extremal_tail - closed.bound) > 1e-9) {
    report.pass = false;
    why << "extremal tail deviates from bound;";
  }
  if (report.oracle_value > closed.bound + cfg.tolerance) {
    report.pass = false;
    why << "oracle exceeds bound;";
  }
  if (report.oracle_value < closed.bound - 10.0 * cfg.tolerance) {
    report.pass = false;
    why << "oracle falls short of bound;";
  }
  report.failure = why.str();
  return report;
}

std::vector<std::pair<double, double>> interior_region_points(Region region,
                                                              int count) {
  const bool second = region == Region::S1 || region == Region::S2 ||
                      region == Region::S3 || region == Region::S4 ||
                      region == Region::S5;
  auto classify = [&](double u, double v) {
    return second ? classify_region_second(u, v) : classify_region_first(u, v);
  };
  const double margin = 0.02;
  std::vector<std::pair<double, double>> candidates;
  for (int i = 1; i <= 78; ++i) {
    const double u = 0.05 * i;
    for (double v = u + 2.0 * margin; v <= 7.95; v += 0.05) {
      if (classify(u, v) != region) continue;
      bool interior = true;
      for (const double du : {-margin, 0.0, margin}) {
        for (const double dv : {-margin, 0.0, margin}) {
          const double uu = u + du;
          const double vv = v + dv;
          if (!(uu > 0.0) || uu > vv || classify(uu, vv) != region)
            interior = false;
        }
      }
      if (interior) candidates.emplace_back(u, v);
    }
  }
  // spread the picks across the whole region instead of one corner
  std::vector<std::pair<double, double>> points;
  if (candidates.empty()) return points;
  const std::size_t want = static_cast<std::size_t>(count);
  for (std::size_t i = 0; i < want && i < candidates.size(); ++i)
    points.push_back(candidates[i * candidates.size() / want]);
  return points;
}

}  // namespace tailbound
