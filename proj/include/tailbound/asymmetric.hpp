#pragma once

#include "tailbound/types.hpp"

namespace tailbound {

// Sharp bounds on P(X <= -u or X >= v) for symmetric unimodal X with mode 0
// and unit moment, on the canonical half-quadrant 0 < u <= v (v may be +inf).
// The plane splits into closed-form pieces: S1..S5 for the second-moment
// family, A1..A4 for the first-absolute-moment family.

// Boundary curve separating S1 from S4.  Defined for 0 < u <= 3; evaluated
// with the rewrite 1 - sqrt(1-t^2) = t^2/(1+sqrt(1-t^2)), which stays
// accurate for small u where the textbook expression cancels.
double psi_semenikhin(double u);

Region classify_region_second(double u, double v);
Region classify_region_first(double u, double v);

// Raw piecewise formulas, evaluable at any (u, v) regardless of which region
// is active; used to test agreement across region boundaries.
double semenikhin_piece_value(Region r, double u, double v);
double markov_asym_piece_value(Region r, double u, double v);

// Second-moment bound (unit value) with the attaining mixture attached.
BoundResult semenikhin_bound(double u, double v);
SymmetricUniformMixture semenikhin_extremal(double u, double v);

// First-absolute-moment bound (unit value).
BoundResult markov_asym_bound(double u, double v);
SymmetricUniformMixture markov_asym_extremal(double u, double v);

// For the wider class of possibly asymmetric unimodal laws the sharp bound
// degenerates to the symmetric-interval bound at the smaller deviation u,
// attained by a one-sided uniform plus point mass.
BoundResult general_unimodal_bound(double u, double v, const MomentSpec& spec);

}  // namespace tailbound
