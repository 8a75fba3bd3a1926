#pragma once

#include <stdexcept>
#include <vector>

namespace tailbound {

// Which moment of |X - nu| pins down the distribution class.
enum class MomentKind { SecondMoment, FirstAbsolute };

// ---- error taxonomy -------------------------------------------------------

struct NonPositiveDeviation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BothInfinite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonPositiveMoment : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotCanonical : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidMixture : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct QuadratureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WeightNotPositiveOnInterval : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegenerateWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidWeightFunction : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidInstance : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct HorizonHit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidWeight : std::logic_error {
  using std::logic_error::logic_error;
};

// ---- domain types ----------------------------------------------------------

struct MomentSpec {
  MomentKind kind = MomentKind::SecondMoment;
  double value = 1.0;  // E((X-nu)^2) or E|X-nu|
  void validate() const;
};

// Deviations below (u) and above (v) the mode.  Canonical form has u <= v;
// the tail event for symmetric laws is invariant under swapping the sides,
// so canonicalize() just exchanges them and records that it did.
struct DeviationInterval {
  double u = 1.0;
  double v = 1.0;
  double mode = 0.0;  // nu; subtracted before any computation
  bool swapped = false;
};

DeviationInterval canonicalize(DeviationInterval interval);

// v / sqrt(value) for SecondMoment, v / value for FirstAbsolute.  Bounds at
// the normalized deviation equal bounds at the raw deviation with raw moment.
double normalize_deviation(double v, const MomentSpec& spec);

struct MixtureComponent {
  double half_width = 1.0;  // c > 0
  double weight = 1.0;      // in (0, 1]
};

// Mixture of uniform distributions on (-c_i, c_i) plus a point mass at 0.
// With one_sided set, each component occupies (-c_i, 0] instead: the moments
// of |X| are unchanged but only the lower tail carries mass.  That variant
// represents the attaining law for the general (possibly asymmetric)
// unimodal class.
struct SymmetricUniformMixture {
  std::vector<MixtureComponent> components;  // strictly increasing half-widths
  double zero_mass = 0.0;
  bool one_sided = false;
  void validate() const;
};

enum class Region {
  S1, S2, S3, S4, S5,            // second-moment family
  A1, A2, A3, A4,                // first-absolute-moment family
  GaussPiece1, GaussPiece2,      // 4/(9v^2) and 1 - v/sqrt(3)
  MarkovPiece1, MarkovPiece2,    // 1/(2v) and 1 - v/2
  Chebyshev,
};

const char* region_name(Region r);

struct BoundResult {
  double bound = 1.0;     // capped at 1
  double uncapped = 1.0;  // raw formula value, reported alongside
  Region region = Region::Chebyshev;
  SymmetricUniformMixture extremal;  // attains `bound` within the class
};

}  // namespace tailbound
