#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "tailbound/cli.hpp"

using tailbound::run_cli;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

double value_of(const std::string& text, const std::string& key) {
  const std::string needle = key + "=";
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind(needle, 0) == 0) return std::stod(line.substr(needle.size()));
  FAIL("missing key: " << key);
  return 0.0;
}

std::string text_of(const std::string& text, const std::string& key) {
  const std::string needle = key + "=";
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind(needle, 0) == 0) return line.substr(needle.size());
  FAIL("missing key: " << key);
  return {};
}

}  // namespace

TEST_CASE("bound command formats key=value reports") {
  const auto second =
      run({"bound", "--kind", "second", "--u", "2", "--v", "6"});
  CHECK(second.code == 0);
  CHECK(text_of(second.out, "region") == "S3");
  CHECK(value_of(second.out, "bound") == doctest::Approx(1.0 / 18.0));
  CHECK(text_of(second.out, "swapped") == "false");
  CHECK(value_of(second.out, "chebyshev") == doctest::Approx(0.25));

  const auto first =
      run({"bound", "--kind", "first", "--u", "1.5", "--v", "3"});
  CHECK(first.code == 0);
  CHECK(text_of(first.out, "region") == "A3");
  CHECK(value_of(first.out, "bound") == doctest::Approx(1.0 / 4.5));

  const auto one_sided =
      run({"bound", "--kind", "first", "--u", "0.5", "--v", "inf"});
  CHECK(one_sided.code == 0);
  CHECK(text_of(one_sided.out, "region") == "A2");
  CHECK(value_of(one_sided.out, "bound") == doctest::Approx(0.375));

  const auto swapped =
      run({"bound", "--kind", "second", "--u", "6", "--v", "2"});
  CHECK(text_of(swapped.out, "swapped") == "true");
  CHECK(value_of(swapped.out, "bound") == doctest::Approx(1.0 / 18.0));

  const auto general = run(
      {"bound", "--kind", "second", "--u", "1", "--v", "5", "--general"});
  CHECK(text_of(general.out, "region") == "GaussPiece2");
  CHECK(value_of(general.out, "bound") ==
        doctest::Approx(1.0 - 1.0 / 1.7320508075688772));
}

TEST_CASE("raw and normalized invocations agree") {
  const auto unit =
      run({"bound", "--kind", "second", "--u", "2", "--v", "6", "--moment",
           "1"});
  const auto scaled =
      run({"bound", "--kind", "second", "--u", "4", "--v", "12", "--moment",
           "4"});
  CHECK(value_of(unit.out, "bound") ==
        doctest::Approx(value_of(scaled.out, "bound")).epsilon(1e-12));
  CHECK(text_of(unit.out, "region") == text_of(scaled.out, "region"));
}

TEST_CASE("region and extremal commands") {
  const auto region =
      run({"region", "--kind", "second", "--u", "0.5", "--v", "3"});
  CHECK(region.code == 0);
  CHECK(text_of(region.out, "region") == "S5");

  const auto extremal =
      run({"extremal", "--kind", "first", "--u", "1.5", "--v", "3"});
  CHECK(extremal.code == 0);
  CHECK(value_of(extremal.out, "components") == 1);
  CHECK(value_of(extremal.out, "c1") == doctest::Approx(4.5));
  CHECK(value_of(extremal.out, "w1") == doctest::Approx(2.0 / 4.5));
  CHECK(value_of(extremal.out, "moment") == doctest::Approx(1.0));
  CHECK(value_of(extremal.out, "tail") == doctest::Approx(1.0 / 4.5));

  const auto csv = run({"extremal", "--kind", "first", "--u", "1.5", "--v",
                        "3", "--format", "csv"});
  CHECK(csv.out.rfind("half_width,weight\n", 0) == 0);
}

TEST_CASE("sweep emits the canonical grid") {
  const auto sweep =
      run({"sweep", "--kind", "first", "--step", "1", "--extent", "2"});
  CHECK(sweep.code == 0);
  std::istringstream lines(sweep.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "u,v,bound,region");
  CHECK(rows[1] == "1,1,0.5,A1");
  CHECK(rows[2].rfind("1,2,0.3333333333333333", 0) == 0);
  CHECK(rows[3] == "2,2,0.25,A3");

  // step larger than extent: header only
  const auto empty =
      run({"sweep", "--kind", "first", "--step", "3", "--extent", "2"});
  CHECK(empty.out == "u,v,bound,region\n");

  // diagonal rows of a second-moment sweep match the symmetric bound
  const auto second =
      run({"sweep", "--kind", "second", "--step", "0.5", "--extent", "1.5"});
  CHECK(second.out.find("1,1,0.42264973081037416") != std::string::npos);
}

TEST_CASE("gbound works from a table file") {
  const std::string path = "gbound_table_test.txt";
  {
    std::ofstream table(path);
    table << "# g(x) = x^2\n";
    for (int i = 0; i <= 1000; ++i) {
      const double x = 10.0 * i / 1000.0;
      table << x << " " << x * x << "\n";
    }
  }
  const auto result =
      run({"gbound", "--table", path, "--v", "1", "--eg", "1"});
  CHECK(result.code == 0);
  // the tabulated g is a chordal approximation of x^2, so x_v lands a hair
  // off 3v/2
  CHECK(value_of(result.out, "x_v") == doctest::Approx(1.5).epsilon(1e-4));
  CHECK(value_of(result.out, "bound") ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-3));
  CHECK(text_of(result.out, "horizon_hit") == "false");

  {
    std::ofstream table(path);
    table << "0 1\n5 1\n";
  }
  const auto flat = run({"gbound", "--table", path, "--v", "1", "--eg", "1"});
  CHECK(flat.code == 0);
  CHECK(text_of(flat.out, "x_v") == "inf");
  CHECK(value_of(flat.out, "bound") == doctest::Approx(1.0));
  CHECK(text_of(flat.out, "horizon_hit") == "true");

  {
    std::ofstream table(path);
    table << "0 0\n1 2\n2 1\n";  // decreasing step
  }
  const auto bad = run({"gbound", "--table", path, "--v", "1", "--eg", "1"});
  CHECK(bad.code == 2);
  std::remove(path.c_str());
}

TEST_CASE("verify command is deterministic and honors --tol") {
  const std::vector<std::string> small = {
      "verify",     "--seed", "42", "--points", "8",
      "--grid",     "64",     "--refine", "2",  "--mixtures",
      "4",          "--mc",   "10000"};
  const auto a = run(small);
  const auto b = run(small);
  CHECK(a.code == b.code);
  CHECK((a.code == 0 || a.code == 1));
  CHECK(a.out == b.out);
  CHECK(a.out.find("result=") != std::string::npos);

  // tolerance far below the oracle resolution: failures are expected
  auto tight = small;
  tight.push_back("--tol");
  tight.push_back("1e-12");
  const auto c = run(tight);
  CHECK(c.code == 1);
  CHECK(c.out.find("result=fail") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"bound", "--kind", "second", "--u", "2"}).code == 2);
  CHECK(run({"bound", "--kind", "third", "--u", "1", "--v", "2"}).code == 2);
  CHECK(run({"bound", "--kind", "second", "--u", "0", "--v", "2"}).code == 2);
  CHECK(run({"bound", "--kind", "second", "--u", "inf", "--v", "inf"}).code ==
        2);
  CHECK(run({"bound", "--kind", "second", "--u", "oops", "--v", "2"}).code ==
        2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
}
