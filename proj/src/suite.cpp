#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

#include "tailbound/asymmetric.hpp"
#include "tailbound/verify.hpp"

namespace tailbound {

namespace {

// R2 low-discrepancy sequence (plastic-constant rotation); the seed shifts
// the starting index so different seeds sample different point sets.
class QuasiSequence {
 public:
  explicit QuasiSequence(std::uint64_t seed)
      : base_(static_cast<double>(seed % 100000)) {}

  std::pair<double, double> point(int i) const {
    const double k = base_ + i + 1;
    return {std::fmod(k * 0.7548776662466927, 1.0),
            std::fmod(k * 0.5698402909980532, 1.0)};
  }

 private:
  double base_;
};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Counter {
  int passed = 0;
  int total = 0;
  void tally(bool ok) {
    ++total;
    if (ok) ++passed;
  }
  bool clean() const { return passed == total; }
};

void print_counter(std::ostream& out, const char* name, const Counter& c) {
  out << name << ": " << c.passed << "/" << c.total << " pass\n";
}

}  // namespace

std::vector<NamedVolkovInstance> standard_volkov_instances() {
  std::vector<NamedVolkovInstance> all;
  auto uniform3 = [](double x) { return x <= 3.0 ? 1.0 / 3.0 : 0.0; };

  all.push_back({"uniform3_shift",
                 {uniform3, [](double x) { return x + 1.0; },
                  [](double) { return 1.0; }, 3.0},
                 true});
  all.push_back({"uniform3_cubic",
                 {uniform3, [](double x) { return x * x * x / 6.75 + 1.0; },
                  [](double x) { return x * x / 2.25; }, 3.0},
                 true});
  all.push_back({"uniform3_softplus",
                 {uniform3, [](double x) { return x + std::exp(-x); },
                  [](double x) { return 1.0 - std::exp(-x); }, 3.0},
                 true});
  all.push_back({"triangular4_shift",
                 {[](double x) { return x <= 4.0 ? (4.0 - x) / 8.0 : 0.0; },
                  [](double x) { return x + 0.5; }, [](double) { return 1.0; },
                  4.0},
                 true});
  const double exp_mass = 1.0 - std::exp(-40.0);
  all.push_back({"truncated_exponential_hyperbola",
                 {[exp_mass](double x) { return std::exp(-x) / exp_mass; },
                  [](double x) { return std::sqrt(x * x + 1.0); },
                  [](double x) { return x / std::sqrt(x * x + 1.0); }, 40.0},
                 true});
  all.push_back({"uniform1_steep",
                 {[](double x) { return x <= 1.0 ? 1.0 : 0.0; },
                  [](double x) { return 2.0 * x + 0.2; },
                  [](double) { return 2.0; }, 1.0},
                 true});
  all.push_back({"two_step_density",
                 {[](double x) { return x <= 1.0 ? 0.75 : 0.25; },
                  [](double x) { return x + 0.75; }, [](double) { return 1.0; },
                  2.0},
                 true});
  all.push_back({"uniform3_quadratic",
                 {uniform3, [](double x) { return 0.3 + x + 0.1 * x * x; },
                  [](double x) { return 1.0 + 0.2 * x; }, 3.0},
                 true});
  all.push_back({"triangular2_halfslope",
                 {[](double x) { return x <= 2.0 ? (2.0 - x) / 2.0 : 0.0; },
                  [](double x) { return 1.2 + 0.5 * x; },
                  [](double) { return 0.5; }, 2.0},
                 true});
  const double half_normal_mass = std::erf(10.0 / std::sqrt(2.0));
  all.push_back(
      {"half_normal_shift",
       {[half_normal_mass](double x) {
          return std::sqrt(2.0 / 3.14159265358979323846) *
                 std::exp(-0.5 * x * x) / half_normal_mass;
        },
        [](double x) { return x + 0.5; }, [](double) { return 1.0; }, 10.0},
       true});

  // deliberately broken: precondition violations the checker must reject
  all.push_back({"bad_psi_below_identity",
                 {uniform3, [](double x) { return 0.5 * x; },
                  [](double) { return 0.5; }, 3.0},
                 false});
  all.push_back({"bad_increasing_density",
                 {[](double x) { return x <= 3.0 ? 2.0 * x / 9.0 : 0.0; },
                  [](double x) { return x + 1.0; }, [](double) { return 1.0; },
                  3.0},
                 false});
  all.push_back({"bad_decreasing_psi",
                 {uniform3, [](double x) { return 1.0 + x - 0.2 * x * x; },
                  [](double x) { return 1.0 - 0.4 * x; }, 3.0},
                 false});
  return all;
}

bool run_verify_suite(const VerifyOptions& opts, std::ostream& out) {
  const OracleConfig oracle_cfg{opts.oracle_grid, opts.oracle_refine, 0.0,
                                opts.tolerance};
  oracle_cfg.validate();
  out << "seed=" << opts.seed << "\n";
  out << "tolerance=" << fmt17(opts.tolerance) << "\n";
  out << "oracle_grid=" << opts.oracle_grid << "\n";
  out << "oracle_refine=" << opts.oracle_refine << "\n";

  const QuasiSequence seq(opts.seed);
  const double lo = 0.05;

  Counter oracle;
  double worst_gap = 0.0;
  for (const MomentKind kind :
       {MomentKind::SecondMoment, MomentKind::FirstAbsolute}) {
    const int offset =
        kind == MomentKind::FirstAbsolute ? opts.oracle_points : 0;
    for (int i = 0; i < opts.oracle_points; ++i) {
      const auto [x, y] = seq.point(offset + i);
      const double a = lo + (opts.extent - lo) * x;
      const double b = lo + (opts.extent - lo) * y;
      const double u = std::min(a, b);
      const double v = std::max(a, b);
      const BoundResult closed = kind == MomentKind::SecondMoment
                                     ? semenikhin_bound(u, v)
                                     : markov_asym_bound(u, v);
      const double value = two_atom_oracle(u, v, kind, oracle_cfg);
      const double gap = std::fabs(closed.bound - value);
      worst_gap = std::max(worst_gap, gap);
      oracle.tally(gap <= opts.tolerance && value <= closed.bound + 1e-9);
    }
  }
  print_counter(out, "oracle", oracle);
  out << "oracle_worst_gap=" << fmt17(worst_gap) << "\n";

  Counter sharp;
  for (const Region region :
       {Region::S1, Region::S2, Region::S3, Region::S4, Region::S5, Region::A1,
        Region::A2, Region::A3, Region::A4}) {
    const bool second = region == Region::S1 || region == Region::S2 ||
                        region == Region::S3 || region == Region::S4 ||
                        region == Region::S5;
    const MomentKind kind =
        second ? MomentKind::SecondMoment : MomentKind::FirstAbsolute;
    for (const auto& [u, v] : interior_region_points(region, 5)) {
      const SharpnessReport report = sharpness_report(u, v, kind, oracle_cfg);
      const SymmetricUniformMixture extremal =
          second ? semenikhin_extremal(u, v) : markov_asym_extremal(u, v);
      const bool moment_ok =
          std::fabs(mixture_moment(extremal, kind) - 1.0) <= 1e-10;
      sharp.tally(report.pass && report.region == region && moment_ok);
    }
  }
  print_counter(out, "sharpness", sharp);

  Counter dom_closed;
  Counter dom_mc;
  Xoshiro256pp rng(opts.seed);
  for (int i = 0; i < opts.mixtures; ++i) {
    const MomentKind kind =
        i % 2 == 0 ? MomentKind::SecondMoment : MomentKind::FirstAbsolute;
    const SymmetricUniformMixture mix = random_unit_mixture(kind, rng);
    const EmpiricalTail sample =
        sample_mixture(mix, opts.mc_samples,
                       opts.seed * 1000003ULL + static_cast<std::uint64_t>(i));
    for (int j = 0; j < 20; ++j) {
      const double a = rng.uniform(lo, 2.0 * opts.extent);
      const double b = rng.uniform(lo, 2.0 * opts.extent);
      const double u = std::min(a, b);
      const double v = std::max(a, b);
      const double bound = (kind == MomentKind::SecondMoment
                                ? semenikhin_bound(u, v)
                                : markov_asym_bound(u, v))
                               .bound;
      dom_closed.tally(mixture_tail(mix, u, v) <= bound + 1e-12);
      const auto est = sample.tail(u, v);
      dom_mc.tally(est.frequency <= bound + 4.0 * est.std_error);
    }
  }
  print_counter(out, "dominance_closed", dom_closed);
  print_counter(out, "dominance_mc", dom_mc);

  Counter volkov;
  for (const auto& item : standard_volkov_instances()) {
    if (item.expect_valid) {
      bool ok = false;
      try {
        ok = volkov_check(item.instance, 1e-8).holds;
      } catch (const InvalidInstance&) {
        ok = false;
      }
      volkov.tally(ok);
    } else {
      bool rejected = false;
      try {
        volkov_check(item.instance, 1e-8);
      } catch (const InvalidInstance&) {
        rejected = true;
      }
      volkov.tally(rejected);
    }
  }
  print_counter(out, "volkov", volkov);

  const bool all = oracle.clean() && sharp.clean() && dom_closed.clean() &&
                   dom_mc.clean() && volkov.clean();
  out << "result=" << (all ? "pass" : "fail") << "\n";
  return all;
}

}  // namespace tailbound
