#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tailbound/rng.hpp"
#include "tailbound/sellke.hpp"
#include "tailbound/types.hpp"

namespace tailbound {

// ---- closed-form calculus on uniform mixtures ------------------------------

// P(X <= -u or X >= v) for the mixture: sum_i w_i ((1-u/c_i)_+ + (1-v/c_i)_+)/2,
// the point mass at 0 contributing nothing.  One-sided mixtures put all
// component mass below the mode: contribution w_i (1-u/c_i)_+.
double mixture_tail(const SymmetricUniformMixture& mix, double u, double v);

// sum_i w_i c_i^2/3 or sum_i w_i c_i/2.
double mixture_moment(const SymmetricUniformMixture& mix, MomentKind kind);

// ---- brute-force Khintchine oracle -----------------------------------------

struct OracleConfig {
  int grid_points_per_axis = 256;  // >= 64
  int refine_iterations = 3;       // >= 2
  double atom_upper_limit = 0.0;   // 0 = auto; keep >= 4*max(u, v, moment scale)
  double tolerance = 5e-4;
  void validate() const;
};

// Supremum of the tail functional over two-atom-plus-zero laws of |Y| in the
// Khintchine representation X = U*Y, under E(Y^2) = 3 (second moment) or
// E|Y| = 2 (first absolute).  Grid over atom pairs with the mixing weight
// solved from the moment equation, then local refinement.  Independent of
// every closed-form bound; throws HorizonHit when the maximizing atom lands
// within 1% of atom_upper_limit.
double two_atom_oracle(double u, double v, MomentKind kind,
                       const OracleConfig& cfg = {});

// ---- Monte Carlo ------------------------------------------------------------

class EmpiricalTail {
 public:
  struct Estimate {
    double frequency = 0.0;
    double std_error = 0.0;  // binomial, sqrt(f(1-f)/n)
  };

  Estimate tail(double u, double v) const;
  std::size_t size() const { return samples_.size(); }

 private:
  friend EmpiricalTail sample_mixture(const SymmetricUniformMixture&,
                                      std::size_t, std::uint64_t);
  std::vector<double> samples_;  // sorted
};

// n independent draws; component chosen by weight (zero mass first, then
// components in stored order), then uniform on the component's support.
// Deterministic for a given seed.
EmpiricalTail sample_mixture(const SymmetricUniformMixture& mix, std::size_t n,
                             std::uint64_t seed);

// Random mixture with 1-3 components and optional zero mass, rescaled so the
// requested moment is exactly 1.  Used by the dominance suites.
SymmetricUniformMixture random_unit_mixture(MomentKind kind, Xoshiro256pp& rng);

// ---- certification reports --------------------------------------------------

struct SharpnessReport {
  double closed_form_bound = 0.0;
  double extremal_tail = 0.0;
  double oracle_value = 0.0;
  Region region = Region::Chebyshev;
  bool pass = false;
  std::string failure;  // empty when pass
};

// FAILs when the extremal tail strays from the bound by > 1e-9, the oracle
// exceeds the bound by > cfg.tolerance, or falls short by > 10*cfg.tolerance.
SharpnessReport sharpness_report(double u, double v, MomentKind kind,
                                 const OracleConfig& cfg = {});

// ---- suite driver (behind the CLI `verify` command) -------------------------

struct VerifyOptions {
  std::uint64_t seed = 42;
  double tolerance = 5e-4;
  int oracle_points = 100;  // per moment kind
  int oracle_grid = 128;
  int oracle_refine = 3;
  int mixtures = 100;
  std::size_t mc_samples = 100000;
  double extent = 4.0;
};

// Runs the oracle, sharpness, dominance and Volkov suites; writes one
// key=value / counter line per suite.  Returns true iff everything passed.
// Byte-identical output for identical options.
bool run_verify_suite(const VerifyOptions& opts, std::ostream& out);

// Named Volkov instances used by the verification suites; `expect_valid`
// distinguishes the deliberately broken ones.
struct NamedVolkovInstance {
  std::string name;
  VolkovInstance instance;
  bool expect_valid = true;
};
std::vector<NamedVolkovInstance> standard_volkov_instances();

// Deterministic interior sample points (strictly inside, by a margin) for a
// region of either family; used by the sharpness suites.
std::vector<std::pair<double, double>> interior_region_points(Region region,
                                                              int count);

}  // namespace tailbound
