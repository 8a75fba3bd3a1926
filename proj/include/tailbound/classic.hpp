#pragma once

#include "tailbound/types.hpp"

namespace tailbound {

// Classic bounds for the symmetric interval (-v, v) around the mode, at unit
// moment (use normalize_deviation for raw inputs).  All results are capped at
// one; the uncapped ratio is kept alongside.

// min(1, 1/v^2); holds for arbitrary distributions with unit second moment.
double chebyshev_bound(double v);

// Sharp unimodal bound: 4/(9v^2) for v >= 2/sqrt(3), else 1 - v/sqrt(3).
BoundResult gauss_bound(double v);

// First-absolute-moment analogue: 1/(2v) for v >= 1, else 1 - v/2.
BoundResult markov_gauss_bound(double v);

// Attaining law: uniform on (-c, c) with c = max(3v/2, sqrt(3)) plus a point
// mass at 0 of max(1 - 4/(3v^2), 0).  Second moment is exactly 1.
SymmetricUniformMixture gauss_extremal(double v);

// Attaining law: uniform on (-c, c) with c = 2*max(v, 1) plus a point mass at
// 0 of max(1 - 2/c, 0).  First absolute moment is exactly 1.
SymmetricUniformMixture markov_gauss_extremal(double v);

}  // namespace tailbound
