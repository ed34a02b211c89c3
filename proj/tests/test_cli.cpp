#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hodgespec/cli.hpp"
#include "hodgespec/json_io.hpp"

using namespace hodgespec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HODGESPEC_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "hodgespec_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  auto path = scratch(name);
  std::ofstream(path) << text;
  return path.string();
}

std::string error_kind(const Run& r) { return Json::parse(r.err).at("error").get<std::string>(); }

}  // namespace

TEST_CASE("spectrum torus as CSV") {
  const auto r = run({"spectrum", "torus", "--lattice", data("z2.json"), "--p", "1", "--alpha", "1", "--beta", "2",
                      "--cutoff", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "eigenvalue_num,eigenvalue_den,unit,multiplicity\n"
        "0,1,four_pi_squared,2\n"
        "1,1,four_pi_squared,4\n"
        "2,1,four_pi_squared,8\n");
}

TEST_CASE("spectrum torus as JSON, cutoff 0") {
  const auto r = run({"spectrum", "torus", "--zn", "3", "--p", "2", "--alpha", "1/2", "--beta", "3", "--cutoff", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"cutoff\":\"0\",\"entries\":[[\"0\",3]],\"unit\":\"four_pi_squared\"}\n");
}

TEST_CASE("spectrum sphere") {
  const auto r = run({"spectrum", "sphere", "--n", "3", "--p", "1", "--alpha", "1", "--beta", "1", "--r2", "1",
                      "--cutoff", "4"});
  CHECK(r.code == 0);
  const auto w = spectrum_from_json(Json::parse(r.out));
  CHECK(w == WeightedSpectrum(SpectrumUnit::Plain, 4, {{3, 4}, {4, 6}}));
  CHECK_FALSE(Json::parse(r.out).contains("extension"));
}

TEST_CASE("sphere degrees 0 and n are flagged as extensions") {
  const auto top = run({"spectrum", "sphere", "--n", "2", "--p", "2", "--alpha", "1", "--beta", "3", "--cutoff", "7"});
  CHECK(top.code == 0);
  const auto j = Json::parse(top.out);
  CHECK(j.at("extension") == true);
  CHECK(spectrum_from_json(j) == WeightedSpectrum(SpectrumUnit::Plain, 7, {{0, 1}, {2, 3}, {6, 5}}));
  const auto bottom = run({"spectrum", "sphere", "--n", "2", "--p", "0", "--alpha", "3", "--beta", "1", "--cutoff", "7",
                           "--mode", "generic"});
  CHECK(bottom.code == 0);
  CHECK(Json::parse(bottom.out).at("extension") == true);
  CHECK(Json::parse(bottom.out).contains("function_series"));
}

TEST_CASE("generic mode output") {
  const auto r = run({"spectrum", "sphere", "--n", "2", "--p", "1", "--alpha", "1", "--beta", "1", "--cutoff", "2",
                      "--mode", "generic", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "eigenvalue_num,eigenvalue_den,unit,multiplicity,series\n"
        "2,1,plain,3,lambda_series\n"
        "2,1,plain,3,mu_series\n");
  const auto t = run({"spectrum", "torus", "--zn", "2", "--p", "1", "--alpha", "1", "--beta", "2", "--cutoff", "2",
                      "--mode", "generic"});
  CHECK(t.code == 0);
  const auto j = Json::parse(t.out);
  CHECK(spectrum_from_json(j.at("alpha_series")).multiplicity(2) == 4);
  CHECK(spectrum_from_json(j.at("beta_series")).multiplicity(2) == 4);
}

TEST_CASE("lattice layouts agree") {
  auto a = run({"enumerate", "--lattice", data("skew_rows.json"), "--bound", "5"});
  auto b = run({"enumerate", "--lattice", data("skew_columns.json"), "--bound", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto z = run({"enumerate", "--zn", "2", "--bound", "2"});
  CHECK(z.out == "{\"bound\":\"2\",\"counts\":[[\"0\",1],[\"1\",4],[\"2\",4]]}\n");
}

TEST_CASE("isospec verdicts") {
  auto dual = run({"isospec", "--first", "torus", "--zn", "3", "--p", "1", "--alpha", "2", "--beta", "5", "--p2",
                   "2", "--alpha2", "5", "--beta2", "2", "--cutoff", "12"});
  CHECK(dual.code == 0);
  CHECK(Json::parse(dual.out).at("isospectral") == true);

  auto radii = run({"isospec", "--first", "sphere", "--n", "3", "--p", "1", "--alpha", "1", "--beta", "1", "--r2-2",
                    "4", "--cutoff", "10"});
  CHECK(radii.code == 1);
  const auto j = Json::parse(radii.out);
  CHECK(j.at("isospectral") == false);
  CHECK(j.at("first_divergence") == "3/4");  // minimum of the r = 2 spectrum

  auto negative = run({"isospec", "--first", "torus", "--lattice", data("z2.json"), "--lattice2", data("diag12.json"),
                       "--p", "1", "--alpha", "1", "--beta", "1", "--cutoff", "2"});
  CHECK(negative.code == 1);
  CHECK(Json::parse(negative.out).at("first_divergence") == "1/4");

  auto pair = run({"isospec", "--first", "torus", "--lattice", data("z4_pair_a.json"), "--lattice2",
                   data("z4_pair_b.json"), "--p", "2", "--alpha", "1", "--beta", "3", "--cutoff", "6"});
  CHECK((pair.code == 0 || pair.code == 1));
  CHECK(Json::parse(pair.out).contains("isospectral"));

  auto mixed = run({"isospec", "--first", "torus", "--second", "sphere", "--zn", "2", "--n2", "2", "--p", "1",
                    "--alpha", "1", "--beta", "1", "--cutoff", "4"});
  CHECK(mixed.code == 3);
  CHECK(error_kind(mixed) == "unit_mismatch");
}

TEST_CASE("recover commands") {
  auto spec = run({"spectrum", "torus", "--zn", "3", "--p", "1", "--alpha", "3", "--beta", "5", "--cutoff", "10"});
  const auto torus_file = write_scratch("z3.json", spec.out);
  auto rec = run({"recover", "torus-params", "--spectrum", torus_file, "--zn", "3", "--p", "1"});
  CHECK(rec.code == 0);
  CHECK(Json::parse(rec.out).at("ordered") == Json::array({"3", "5"}));
  CHECK(Json::parse(rec.out).at("branch_trace").size() == 3);

  auto lap = run({"spectrum", "torus", "--zn", "3", "--p", "0", "--alpha", "1", "--beta", "1", "--cutoff", "4"});
  const auto lap_file = write_scratch("z3_laplace.json", lap.out);
  auto rec2 = run({"recover", "torus-params", "--spectrum", torus_file, "--laplace", lap_file, "--n", "3", "--p", "1"});
  CHECK(rec2.out == rec.out);

  auto sphere = run({"spectrum", "sphere", "--n", "3", "--p", "1", "--alpha", "1", "--beta", "1", "--cutoff", "20"});
  const auto sphere_file = write_scratch("s3.json", sphere.out);
  auto radius = run({"recover", "radius", "--spectrum", sphere_file, "--n", "3", "--p", "1", "--alpha", "1", "--beta",
                     "1"});
  CHECK(radius.code == 0);
  CHECK(Json::parse(radius.out).at("r2") == "1");
  auto params = run({"recover", "sphere-params", "--spectrum", sphere_file, "--n", "3", "--p", "1"});
  CHECK(Json::parse(params.out).at("ordered") == Json::array({"1", "1"}));

  const auto composed = write_scratch(
      "composed.json",
      R"({"unit":"plain","cutoff":"8","entries":[["0",2],["1",1],["2",1],["4",1],["8",1]]})");
  auto base = run({"recover", "base-set", "--spectrum", composed, "--alpha", "1", "--beta", "2", "--l", "1", "--m",
                   "1"});
  CHECK(base.code == 0);
  CHECK(base.out == "{\"cutoff\":\"4\",\"entries\":[[\"0\",1],[\"1\",1],[\"4\",1]],\"unit\":\"plain\"}\n");
}

TEST_CASE("recovery failures exit 4 with a machine-readable error") {
  const auto bad = write_scratch(
      "bad.json", R"({"unit":"four_pi_squared","cutoff":"10","entries":[["0",3],["3",7]]})");
  auto r = run({"recover", "torus-params", "--spectrum", bad, "--zn", "3", "--p", "1"});
  CHECK(r.code == 4);
  CHECK(error_kind(r) == "branch_ambiguous");
  const auto short_spec = write_scratch(
      "short.json", R"({"unit":"four_pi_squared","cutoff":"4","entries":[["0",3],["3",6]]})");
  auto s = run({"recover", "torus-params", "--spectrum", short_spec, "--zn", "3", "--p", "1"});
  CHECK(s.code == 4);
  CHECK(error_kind(s) == "cutoff_too_small");
}

TEST_CASE("parse errors exit 2") {
  auto fl = run({"spectrum", "sphere", "--n", "3", "--p", "1", "--alpha", "0.5", "--beta", "1", "--cutoff", "4"});
  CHECK(fl.code == 2);
  CHECK(error_kind(fl) == "parse_error");
  CHECK(run({"spectrum", "torus", "--lattice", data("missing.json"), "--p", "1", "--alpha", "1", "--beta", "1",
             "--cutoff", "1"})
            .code == 2);
  const auto junk = write_scratch("junk.json", "{not json");
  CHECK(run({"recover", "sphere-params", "--spectrum", junk, "--n", "3", "--p", "1"}).code == 2);
  const auto wrong = write_scratch("wrong.json", R"({"n": 2, "basis": [["1"], ["0", "1"]]})");
  CHECK(run({"enumerate", "--lattice", wrong, "--bound", "1"}).code == 2);
  CHECK(run({"spectrum", "torus", "--zn", "2", "--lattice", data("z2.json"), "--p", "1", "--alpha", "1", "--beta",
             "1", "--cutoff", "1"})
            .code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"spectrum", "sphere", "--n", "3", "--p", "1", "--alpha", "1", "--beta", "1"}).code == 2);
  CHECK(run({"spectrum", "sphere", "--n", "3", "--p", "1", "--alpha", "1/0", "--beta", "1", "--cutoff", "1"}).code == 2);
}

TEST_CASE("computation errors exit 3") {
  auto singular = write_scratch("singular.json", R"({"n": 2, "basis": [["1", "2"], ["2", "4"]]})");
  auto r = run({"enumerate", "--lattice", singular, "--bound", "1"});
  CHECK(r.code == 3);
  CHECK(error_kind(r) == "singular_basis");
  auto neg = run({"spectrum", "sphere", "--n", "3", "--p", "1", "--alpha", "-1", "--beta", "1", "--cutoff", "1"});
  CHECK(neg.code == 3);
  CHECK(error_kind(neg) == "nonpositive_scalar");
}

TEST_CASE("enumeration budget from the environment") {
  ::setenv("HODGESPEC_BUDGET", "50", 1);
  auto r = run({"enumerate", "--zn", "3", "--bound", "100"});
  ::unsetenv("HODGESPEC_BUDGET");
  CHECK(r.code == 3);
  CHECK(error_kind(r) == "budget_exceeded");
}

TEST_CASE("output file and determinism") {
  const auto path = scratch("out.json");
  std::filesystem::remove(path);
  std::vector<std::string> args{"spectrum", "torus", "--lattice", data("skew_rows.json"), "--p", "1", "--alpha",
                                "2/3", "--beta", "5/4", "--cutoff", "9", "--output", path.string()};
  CHECK(run(args).code == 0);
  std::ifstream in(path);
  std::stringstream first;
  first << in.rdbuf();
  std::vector<std::string> to_stdout(args.begin(), args.end() - 2);
  CHECK(run(to_stdout).out == first.str());
  CHECK(run(to_stdout).out == run(to_stdout).out);
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("spectrum") != std::string::npos);
}
