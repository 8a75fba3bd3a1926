#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "tailbound/types.hpp"

namespace tailbound {

// Nonnegative nondecreasing weight g on [0, inf).  Monotonicity and sign are
// validated statistically on grids at the point of use, not symbolically.
struct WeightFunction {
  std::function<double(double)> eval;
  bool declared_bounded = false;
  double upper_eval_limit = 0.0;  // 0 means auto: 1e8 * v at the call site
};

// chi(x) = int_0^x g(y) dy - g(x) (x - v).  Nonnegative on [0, v] and
// nonincreasing on [v, inf); its last nonnegative point defines x_v.
double chi(const WeightFunction& g, double x, double v);

struct XvResult {
  double x = 0.0;           // +inf when no sign change occurs
  bool horizon_hit = false; // doubling search reached upper_eval_limit
};

// Largest x with chi(x) >= 0: bracket by doubling from v, then bisect to
// relative width 1e-12.  Returns +inf if chi stays nonnegative up to the
// evaluation horizon, which can only happen for bounded g.
XvResult find_xv_info(const WeightFunction& g, double v);
double find_xv(const WeightFunction& g, double v);

// min(1, Eg / g(x_v-)) where g(x_v-) is the left limit, approximated by
// evaluation just below x_v with monotone refinement.  Eg = E g(|X - nu|) is
// supplied by the caller.
double sellke_bound(const WeightFunction& g, double v, double eg);

// A nonincreasing density on [0, upper] together with a nondecreasing
// absolutely continuous psi with psi(x) >= x and its derivative.
struct VolkovInstance {
  std::function<double(double)> density;
  std::function<double(double)> psi;
  std::function<double(double)> psi_derivative;
  double upper = 1.0;  // support truncation for the quadratures
};

struct VolkovReport {
  double lhs = 0.0;  // P(X >= psi(0))
  double rhs = 0.0;  // E psi'(X)
  bool holds = false;
};

// Evaluates both sides by quadrature; rejects instances whose preconditions
// fail on a sampled grid.  A property-test harness, not a bound generator.
VolkovReport volkov_check(const VolkovInstance& inst, double tol);

// Piecewise-linear weight through (x_i, g_i); constant continuation beyond
// the last node.  Requires x_0 = 0, strictly increasing x, nonnegative
// nondecreasing g.
WeightFunction tabulated_weight(std::vector<double> xs, std::vector<double> gs);

// Two whitespace-separated columns, lines starting with '#' ignored.
WeightFunction load_weight_table(std::istream& in);

}  // namespace tailbound
