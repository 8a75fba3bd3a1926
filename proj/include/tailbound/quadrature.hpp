#pragma once

#include <functional>

namespace tailbound {

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] with interval
// halving.  A segment is accepted once its error estimate drops below
// rel_tol times the integral magnitude (abs_floor guards near-zero
// integrals).  Throws QuadratureFailure when the interval budget runs out
// before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_floor = 1e-15,
                 int max_intervals = 20000);

}  // namespace tailbound
