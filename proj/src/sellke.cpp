#include "tailbound/sellke.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <memory>
#include <sstream>

#include "tailbound/quadrature.hpp"

namespace tailbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double horizon(const WeightFunction& g, double v) {
  return g.upper_eval_limit > 0.0 ? g.upper_eval_limit : 1e8 * v;
}

// Grid validation of the WeightFunction invariants: nonnegative and
// nondecreasing, with a little slack for float noise in user evaluators.
void spot_check(const WeightFunction& g, double v, double limit) {
  double prev = 0.0;
  bool first = true;
  auto visit = [&](double x) {
    const double y = g.eval(x);
    if (!(y >= -1e-12 * (1.0 + std::fabs(y))) || std::isnan(y))
      throw InvalidWeightFunction("weight function is negative at a sample");
    if (!first && y < prev - 1e-10 * (1.0 + std::fabs(prev)))
      throw InvalidWeightFunction("weight function decreases at a sample");
    prev = y;
    first = false;
  };
  for (int i = 0; i <= 512; ++i) visit(4.0 * v * i / 512.0);
  // geometric tail out to the horizon
  for (double x = 8.0 * v; x < limit; x *= 2.0) visit(x);
}

// g must be positive somewhere in (0, v); distinguishes a weight that only
// wakes up beyond v from one that is identically zero.
void require_positive_below_v(const WeightFunction& g, double v,
                              double limit) {
  for (int i = 1; i <= 1024; ++i)
    if (g.eval(v * i / 1024.0) > 0.0) return;
  for (double x = v; x < limit; x *= 2.0)
    if (g.eval(x) > 0.0)
      throw WeightNotPositiveOnInterval(
          "weight function vanishes on (0, v)");
  throw DegenerateWeight("weight function is zero on the sampled domain");
}

}  // namespace

double chi(const WeightFunction& g, double x, double v) {
  if (x < 0.0) throw std::invalid_argument("chi: x must be nonnegative");
  if (!(v > 0.0)) throw NonPositiveDeviation("chi: v must be positive");
  if (x == 0.0) return 0.0;
  const double integral = integrate(g.eval, 0.0, x);
  return integral - g.eval(x) * (x - v);
}

XvResult find_xv_info(const WeightFunction& g, double v) {
  if (!(v > 0.0)) throw NonPositiveDeviation("find_xv: v must be positive");
  const double limit = horizon(g, v);
  spot_check(g, v, limit);
  require_positive_below_v(g, v, limit);

  // chi(v) = int_0^v g > 0 here, and chi is nonincreasing on [v, inf):
  // double until the sign flips, then bisect.
  double lo = v;
  double hi = 2.0 * v;
  while (hi < limit && chi(g, hi, v) >= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  if (hi >= limit) {
    if (chi(g, limit, v) >= 0.0) return {kInf, true};
    lo = std::max(lo, v);
    hi = limit;
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (chi(g, mid, v) >= 0.0 ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), false};
}

double find_xv(const WeightFunction& g, double v) {
  return find_xv_info(g, v).x;
}

double sellke_bound(const WeightFunction& g, double v, double eg) {
  if (eg < 0.0) throw std::invalid_argument("sellke_bound: Eg must be >= 0");
  const XvResult xv = find_xv_info(g, v);
  double denom;
  if (std::isinf(xv.x)) {
    denom = g.eval(horizon(g, v));
  } else {
    // left limit: approach from below, monotone refinement of the offset
    double delta = 1e-9 * std::max(1.0, xv.x);
    denom = 0.0;
    for (int i = 0; i < 8; ++i, delta *= 0.5)
      denom = std::max(denom, g.eval(xv.x - delta));
  }
  if (!(denom > 0.0)) throw ZeroDenominator("sellke_bound: g(x_v-) = 0");
  return std::min(1.0, eg / denom);
}

VolkovReport volkov_check(const VolkovInstance& inst, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("volkov_check: tol > 0");
  if (!(inst.upper > 0.0) || !std::isfinite(inst.upper))
    throw InvalidInstance("support upper limit must be positive and finite");

  double prev_psi = 0.0;
  double prev_f = 0.0;
  for (int i = 0; i <= 1024; ++i) {
    const double x = inst.upper * i / 1024.0;
    const double p = inst.psi(x);
    const double f = inst.density(x);
    if (p < x - 1e-12 * (1.0 + std::fabs(x)))
      throw InvalidInstance("psi(x) >= x fails at a sampled point");
    if (i > 0 && p < prev_psi - 1e-12 * (1.0 + std::fabs(prev_psi)))
      throw InvalidInstance("psi decreases at a sampled point");
    if (f < -1e-12)
      throw InvalidInstance("density is negative at a sampled point");
    if (i > 0 && f > prev_f + 1e-9 * (1.0 + std::fabs(prev_f)))
      throw InvalidInstance("density increases at a sampled point");
    prev_psi = p;
    prev_f = f;
  }
  const double mass = integrate(inst.density, 0.0, inst.upper, 1e-10);
  if (std::fabs(mass - 1.0) > 1e-8)
    throw InvalidInstance("density does not integrate to 1");

  VolkovReport report;
  const double start = inst.psi(0.0);
  report.lhs = start >= inst.upper
                   ? 0.0
                   : integrate(inst.density, std::max(start, 0.0), inst.upper);
  report.rhs = integrate(
      [&](double x) { return inst.psi_derivative(x) * inst.density(x); }, 0.0,
      inst.upper);
  report.holds = report.lhs <= report.rhs + tol;
  return report;
}

WeightFunction tabulated_weight(std::vector<double> xs,
                                std::vector<double> gs) {
  if (xs.size() != gs.size() || xs.size() < 2)
    throw InvalidWeightFunction("table needs at least two (x, g) rows");
  if (xs.front() != 0.0)
    throw InvalidWeightFunction("table must start at x = 0");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && !(xs[i] > xs[i - 1]))
      throw InvalidWeightFunction("table x values must be strictly increasing");
    if (!(gs[i] >= 0.0))
      throw InvalidWeightFunction("table g values must be nonnegative");
    if (i > 0 && gs[i] < gs[i - 1])
      throw InvalidWeightFunction("table g values must be nondecreasing");
  }
  auto data = std::make_shared<std::pair<std::vector<double>,
                                         std::vector<double>>>(std::move(xs),
                                                               std::move(gs));
  WeightFunction g;
  g.declared_bounded = true;  // constant continuation beyond the last node
  g.eval = [data](double x) {
    const auto& nodes = data->first;
    const auto& values = data->second;
    if (x <= 0.0) return values.front();
    if (x >= nodes.back()) return values.back();
    const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - nodes.begin());
    const double t = (x - nodes[hi - 1]) / (nodes[hi] - nodes[hi - 1]);
    return values[hi - 1] + t * (values[hi] - values[hi - 1]);
  };
  return g;
}

WeightFunction load_weight_table(std::istream& in) {
  std::vector<double> xs, gs;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream row(line);
    double x, g;
    if (!(row >> x >> g))
      throw InvalidWeightFunction("table row is not two numbers: " + line);
    xs.push_back(x);
    gs.push_back(g);
  }
  return tabulated_weight(std::move(xs), std::move(gs));
}

}  // namespace tailbound
