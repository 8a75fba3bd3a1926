#include "tailbound/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tailbound/types.hpp"

namespace tailbound {

namespace {

// Kronrod-15 abscissae (positive half) with Kronrod and embedded Gauss-7
// weights; the usual QUADPACK constants.
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000,
};
constexpr double kKronrod[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
constexpr double kGauss[8] = {
    0.0, 0.129484966168870, 0.0, 0.279705391489277,
    0.0, 0.381830050505119, 0.0, 0.417959183673469,
};

struct Segment {
  double a, b, value, error;
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double k15 = 0.0;
  double g7 = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(mid + dx) + f(mid - dx);
    k15 += kKronrod[i] * pair;
    g7 += kGauss[i] * pair;
  }
  const double center = f(mid);
  k15 += kKronrod[7] * center;
  g7 += kGauss[7] * center;
  k15 *= half;
  g7 *= half;
  return {a, b, k15, std::fabs(k15 - g7)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor, int max_intervals) {
  if (!(a <= b)) throw std::invalid_argument("integrate: need a <= b");
  if (a == b) return 0.0;

  std::vector<Segment> pending;
  pending.push_back(evaluate(f, a, b));
  const double whole_estimate = std::fabs(pending.front().value);
  const double span = b - a;
  const double width_floor = 1e-14 * (1.0 + span + std::fabs(a));

  double sum = 0.0;
  int used = 1;
  while (!pending.empty()) {
    const Segment seg = pending.back();
    pending.pop_back();
    const double width = seg.b - seg.a;
    const double share = width / span;
    const double tol =
        std::max({abs_floor * share, rel_tol * whole_estimate * share,
                  rel_tol * std::fabs(seg.value)});
    if (seg.error <= tol || width <= width_floor) {
      sum += seg.value;
      continue;
    }
    if (used + 2 > max_intervals)
      throw QuadratureFailure("integrate: interval budget exhausted");
    const double mid = 0.5 * (seg.a + seg.b);
    pending.push_back(evaluate(f, seg.a, mid));
    pending.push_back(evaluate(f, mid, seg.b));
    used += 2;
  }
  return sum;
}

}  // namespace tailbound
