#include "tailbound/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tailbound/asymmetric.hpp"
#include "tailbound/classic.hpp"
#include "tailbound/sellke.hpp"
#include "tailbound/verify.hpp"

namespace tailbound {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// decimal or the literal "inf" for one-sided intervals
double parse_deviation(const std::string& text) {
  std::string low = text;
  std::transform(low.begin(), low.end(), low.begin(), ::tolower);
  if (low == "inf" || low == "+inf" || low == "infinity")
    return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + text);
  }
  if (used != text.size())
    throw std::invalid_argument("trailing junk in number: " + text);
  return value;
}

MomentKind parse_kind(const std::string& text) {
  if (text == "second") return MomentKind::SecondMoment;
  if (text == "first") return MomentKind::FirstAbsolute;
  throw std::invalid_argument("kind must be 'second' or 'first'");
}

struct BoundRequest {
  std::string kind_text = "second";
  std::string u_text;
  std::string v_text;
  double moment = 1.0;
  bool general = false;
};

struct NormalizedInput {
  MomentKind kind;
  DeviationInterval canon;
  double u_norm;
  double v_norm;
};

NormalizedInput normalize_request(const BoundRequest& req) {
  NormalizedInput in{};
  in.kind = parse_kind(req.kind_text);
  DeviationInterval raw;
  raw.u = parse_deviation(req.u_text);
  raw.v = parse_deviation(req.v_text);
  in.canon = canonicalize(raw);
  const MomentSpec spec{in.kind, req.moment};
  in.u_norm = normalize_deviation(in.canon.u, spec);
  in.v_norm = std::isinf(in.canon.v)
                  ? in.canon.v
                  : normalize_deviation(in.canon.v, spec);
  return in;
}

void kv(std::ostream& out, const char* key, const std::string& value) {
  out << key << "=" << value << "\n";
}
void kv(std::ostream& out, const char* key, double value) {
  kv(out, key, fmt17(value));
}
void kv(std::ostream& out, const char* key, bool value) {
  kv(out, key, std::string(value ? "true" : "false"));
}

int cmd_bound(const BoundRequest& req, std::ostream& out) {
  const NormalizedInput in = normalize_request(req);
  BoundResult result;
  if (req.general) {
    result = general_unimodal_bound(in.u_norm, in.v_norm,
                                    MomentSpec{in.kind, 1.0});
  } else {
    result = in.kind == MomentKind::SecondMoment
                 ? semenikhin_bound(in.u_norm, in.v_norm)
                 : markov_asym_bound(in.u_norm, in.v_norm);
  }
  kv(out, "kind", req.kind_text);
  kv(out, "class",
     std::string(req.general ? "general_unimodal" : "symmetric_unimodal"));
  kv(out, "u", req.u_text);
  kv(out, "v", req.v_text);
  kv(out, "moment", req.moment);
  kv(out, "swapped", in.canon.swapped);
  kv(out, "u_normalized", in.u_norm);
  kv(out, "v_normalized", in.v_norm);
  kv(out, "bound", result.bound);
  kv(out, "bound_uncapped", result.uncapped);
  kv(out, "region", std::string(region_name(result.region)));
  if (in.kind == MomentKind::SecondMoment) {
    // comparison line: Chebyshev at the nearer deviation, capped and raw
    const double raw = 1.0 / (in.u_norm * in.u_norm);
    kv(out, "chebyshev", std::min(1.0, raw));
    kv(out, "chebyshev_raw", raw);
  }
  return 0;
}

int cmd_region(const BoundRequest& req, std::ostream& out) {
  const NormalizedInput in = normalize_request(req);
  const Region region = in.kind == MomentKind::SecondMoment
                            ? classify_region_second(in.u_norm, in.v_norm)
                            : classify_region_first(in.u_norm, in.v_norm);
  kv(out, "kind", req.kind_text);
  kv(out, "u_normalized", in.u_norm);
  kv(out, "v_normalized", in.v_norm);
  kv(out, "swapped", in.canon.swapped);
  kv(out, "region", std::string(region_name(region)));
  return 0;
}

int cmd_extremal(const BoundRequest& req, const std::string& format,
                 std::ostream& out) {
  const NormalizedInput in = normalize_request(req);
  const Region region = in.kind == MomentKind::SecondMoment
                            ? classify_region_second(in.u_norm, in.v_norm)
                            : classify_region_first(in.u_norm, in.v_norm);
  const SymmetricUniformMixture mix =
      in.kind == MomentKind::SecondMoment
          ? semenikhin_extremal(in.u_norm, in.v_norm)
          : markov_asym_extremal(in.u_norm, in.v_norm);
  if (format == "csv") {
    out << "half_width,weight\n";
    for (const auto& comp : mix.components)
      out << fmt17(comp.half_width) << "," << fmt17(comp.weight) << "\n";
    if (mix.zero_mass > 0.0) out << "0," << fmt17(mix.zero_mass) << "\n";
    return 0;
  }
  kv(out, "region", std::string(region_name(region)));
  kv(out, "components", static_cast<double>(mix.components.size()));
  char key[32];
  for (std::size_t i = 0; i < mix.components.size(); ++i) {
    std::snprintf(key, sizeof key, "c%zu", i + 1);
    kv(out, key, mix.components[i].half_width);
    std::snprintf(key, sizeof key, "w%zu", i + 1);
    kv(out, key, mix.components[i].weight);
  }
  kv(out, "zero_mass", mix.zero_mass);
  kv(out, "one_sided", mix.one_sided);
  kv(out, "moment", mixture_moment(mix, in.kind));
  kv(out, "tail", mixture_tail(mix, in.u_norm, in.v_norm));
  return 0;
}

int cmd_sweep(const std::string& kind_text, double step, double extent,
              double moment, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  const MomentKind kind = parse_kind(kind_text);
  std::ofstream file;
  std::ostream* os = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot open output path: " << out_path << "\n";
      return 2;
    }
    os = &file;
  }
  const MomentSpec spec{kind, moment};
  *os << "u,v,bound,region\n";
  const long n = static_cast<long>(std::floor(extent / step + 1e-9));
  for (long i = 1; i <= n; ++i) {
    const double u = step * static_cast<double>(i);
    for (long j = i; j <= n; ++j) {
      const double v = step * static_cast<double>(j);
      const double un = normalize_deviation(u, spec);
      const double vn = normalize_deviation(v, spec);
      const BoundResult r = kind == MomentKind::SecondMoment
                                ? semenikhin_bound(un, vn)
                                : markov_asym_bound(un, vn);
      *os << fmt17(u) << "," << fmt17(v) << "," << fmt17(r.bound) << ","
          << region_name(r.region) << "\n";
    }
  }
  return 0;
}

int cmd_gbound(const std::string& table_path, double v, double eg,
               double limit, std::ostream& out, std::ostream& err) {
  std::ifstream file(table_path);
  if (!file) {
    err << "cannot open table: " << table_path << "\n";
    return 2;
  }
  WeightFunction g = load_weight_table(file);
  if (limit > 0.0) g.upper_eval_limit = limit;
  const XvResult xv = find_xv_info(g, v);
  const double bound = sellke_bound(g, v, eg);
  double g_left;
  if (std::isinf(xv.x)) {
    g_left = g.eval(g.upper_eval_limit > 0.0 ? g.upper_eval_limit : 1e8 * v);
  } else {
    g_left = g.eval(xv.x - 1e-9 * std::max(1.0, xv.x));
  }
  kv(out, "x_v", std::isinf(xv.x) ? std::string("inf") : fmt17(xv.x));
  kv(out, "g_left", g_left);
  kv(out, "bound", bound);
  kv(out, "horizon_hit", xv.horizon_hit);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"sharp tail bounds around the mode of unimodal distributions"};
  app.require_subcommand(1);

  BoundRequest req;
  std::string format = "keyvalue";
  std::string out_path;
  double step = 0.0, extent = 0.0;
  std::string table_path;
  double gb_v = 1.0, gb_eg = 1.0, gb_limit = 0.0;
  VerifyOptions verify_opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--kind", req.kind_text, "moment kind: second | first")
        ->check(CLI::IsMember({"second", "first"}))
        ->required();
    cmd->add_option("--u", req.u_text, "deviation below the mode (or 'inf')")
        ->required();
    cmd->add_option("--v", req.v_text, "deviation above the mode (or 'inf')")
        ->required();
    cmd->add_option("--moment", req.moment, "moment value (default 1)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* bound = app.add_subcommand("bound", "sharp tail bound at (u, v)");
  add_common(bound);
  bound->add_flag("--general", req.general,
                  "possibly asymmetric unimodal class (degenerates to the "
                  "symmetric-interval bound at min(u, v))");

  CLI::App* region = app.add_subcommand("region", "classify (u, v)");
  add_common(region);

  CLI::App* extremal =
      app.add_subcommand("extremal", "attaining mixture at (u, v)");
  add_common(extremal);
  extremal->add_option("--format", format, "keyvalue | csv")
      ->check(CLI::IsMember({"keyvalue", "csv"}));

  CLI::App* sweep = app.add_subcommand("sweep", "CSV grid of bounds");
  sweep->add_option("--kind", req.kind_text)
      ->check(CLI::IsMember({"second", "first"}))
      ->required();
  sweep->add_option("--step", step)->check(CLI::PositiveNumber)->required();
  sweep->add_option("--extent", extent)
      ->check(CLI::PositiveNumber)
      ->required();
  sweep->add_option("--moment", req.moment)->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* verify =
      app.add_subcommand("verify", "run the certification suites");
  verify->add_option("--seed", verify_opts.seed);
  verify->add_option("--tol", verify_opts.tolerance)
      ->check(CLI::PositiveNumber);
  verify->add_option("--points", verify_opts.oracle_points,
                     "oracle points per moment kind")
      ->check(CLI::Range(1, 100000));
  verify->add_option("--grid", verify_opts.oracle_grid)
      ->check(CLI::Range(64, 4096));
  verify->add_option("--refine", verify_opts.oracle_refine)
      ->check(CLI::Range(2, 16));
  verify->add_option("--mixtures", verify_opts.mixtures)
      ->check(CLI::Range(1, 100000));
  verify->add_option("--mc", verify_opts.mc_samples,
                     "Monte Carlo draws per mixture");

  CLI::App* gbound =
      app.add_subcommand("gbound", "Sellke-Sellke bound for a tabulated g");
  gbound->add_option("--table", table_path, "two-column (x, g) text file")
      ->required();
  gbound->add_option("--v", gb_v)->check(CLI::PositiveNumber)->required();
  gbound->add_option("--eg", gb_eg, "E g(|X - nu|)")
      ->check(CLI::PositiveNumber)
      ->required();
  gbound->add_option("--limit", gb_limit, "evaluation horizon (default 1e8*v)");

  std::vector<const char*> argv;
  argv.push_back("tailbound");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(bound)) return cmd_bound(req, out);
    if (app.got_subcommand(region)) return cmd_region(req, out);
    if (app.got_subcommand(extremal)) return cmd_extremal(req, format, out);
    if (app.got_subcommand(sweep))
      return cmd_sweep(req.kind_text, step, extent, req.moment, out_path, out,
                       err);
    if (app.got_subcommand(verify))
      return run_verify_suite(verify_opts, out) ? 0 : 1;
    if (app.got_subcommand(gbound))
      return cmd_gbound(table_path, gb_v, gb_eg, gb_limit, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace tailbound
