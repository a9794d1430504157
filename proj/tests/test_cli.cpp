#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "abh/bounds.hpp"
#include "abh/dirichlet.hpp"
#include "abh/series.hpp"

using namespace abh;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "abh_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args) {
  const fs::path out = work_dir() / "stdout.txt";
  const std::string cmd = std::string(ABH_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " +
                          (work_dir() / "stderr.txt").string();
  const int st = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, ss.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path p = work_dir() / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("kernel subcommand") {
  const auto res = run_cli("kernel --alpha 0,0 --beta 0,0 --z 0.5,0");
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["value"][0].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(j["value"][1].get<double>() == doctest::Approx(0.0));
  CHECK(j["c_const"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(j["modulus_bound"].get<double>() ==
        doctest::Approx(3.0).epsilon(1e-12));

  const auto d = run_cli("kernel --alpha 1,0 --beta 0.5,0 --z 0.4,1.1 --deriv 1,0");
  REQUIRE(d.code == 0);
  const json jd = json::parse(d.out);
  const cplx want = c_const({1.0, 0.5}) *
                    u_higher_deriv({1.0, 0.5}, DiskPoint{0.4, 1.1}, 1, 0);
  CHECK(jd["deriv"][0].get<double>() == doctest::Approx(want.real()));
  CHECK(jd["deriv"][1].get<double>() == doctest::Approx(want.imag()));
}

TEST_CASE("kernel subcommand rejects bad input") {
  CHECK(run_cli("kernel --z 1.5,0").code == 1);
  CHECK(run_cli("kernel --alpha -1,0 --z 0.5,0").code == 1);
}

TEST_CASE("extend subcommand writes a lossless CSV field") {
  const auto boundary = write_file(
      "fourier.json",
      R"({"type":"fourier","coeffs":[{"m":0,"re":0.3,"im":0.0},
          {"m":1,"re":1.0,"im":0.0},{"m":-2,"re":0.0,"im":0.5}]})");
  const auto csv = (work_dir() / "field.csv").string();
  const auto res = run_cli("extend --alpha 1,0 --beta 0.5,0 --boundary " +
                           boundary + " --grid 0.1:0.5:3,8 --out " + csv);
  REQUIRE(res.code == 0);

  const auto f = BoundaryFunction::fourier(
      {{0, 0.3}, {1, 1.0}, {-2, cplx(0.0, 0.5)}});
  EvalGrid grid;
  grid.n_theta = 8;
  for (int i = 0; i < 3; ++i)
    grid.radii.push_back(0.1 + (0.5 - 0.1) * i / double(2));
  const auto field = grid_eval({1.0, 0.5}, f, grid);

  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,theta,re,im");
  size_t idx = 0;
  while (std::getline(in, line)) {
    REQUIRE(idx < field.size());
    std::stringstream ss(line);
    std::string tok;
    double vals[4];
    for (double& v : vals) {
      REQUIRE(std::getline(ss, tok, ','));
      v = std::stod(tok);
    }
    // %.17g output parses back to the exact double.
    CHECK(vals[2] == field[idx].real());
    CHECK(vals[3] == field[idx].imag());
    ++idx;
  }
  CHECK(idx == field.size());
}

TEST_CASE("means subcommand") {
  const auto boundary =
      write_file("const.json", R"({"type":"constant","value":[2.0,1.0]})");
  const auto res = run_cli("means --boundary " + boundary +
                           " --p 2 --radii 0.2,0.6");
  REQUIRE(res.code == 0);
  std::stringstream ss(res.out);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "r,Mp,bound,margin");
  const double norm = std::abs(cplx(2.0, 1.0));
  int rows = 0;
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    std::string tok;
    double vals[4];
    for (double& v : vals) {
      REQUIRE(std::getline(ls, tok, ','));
      v = std::stod(tok);
    }
    // Classical extension of a constant: M_p == bound == |const|.
    CHECK(vals[1] == doctest::Approx(norm).epsilon(1e-10));
    CHECK(vals[2] == doctest::Approx(norm).epsilon(1e-12));
    CHECK(vals[3] == doctest::Approx(0.0).scale(norm));
    ++rows;
  }
  CHECK(rows == 2);
}

TEST_CASE("coeffs subcommand matches the library") {
  const auto boundary = write_file(
      "rot.json", R"({"type":"fourier","coeffs":[{"m":1,"re":1.0,"im":0.0}]})");
  const auto out = (work_dir() / "coeffs.json").string();
  const auto res = run_cli("coeffs --alpha 0.7,0 --beta 0.4,0 --boundary " +
                           boundary + " --max-m 3 --out " + out);
  REQUIRE(res.code == 0);

  const auto want = coeffs_from_boundary(
      {0.7, 0.4}, BoundaryFunction::fourier({{1, 1.0}}), 3);
  std::ifstream in(out);
  json j;
  in >> j;
  REQUIRE(j.contains("coeffs"));
  for (const auto& e : j["coeffs"]) {
    const int m = e["m"].get<int>();
    CHECK(e["re"].get<double>() == want.at(m).real());
    CHECK(e["im"].get<double>() == want.at(m).imag());
  }
  CHECK(j["coeffs"].size() == want.c.size());
}

TEST_CASE("bounds subcommand") {
  const auto res =
      run_cli("bounds --theorem 31 --alpha 1,0 --beta 0.5,0 --p 2 --r 0.6 "
              "--fnorm 1.5");
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  const auto want = theorem31_rhs({1.0, 0.5}, 2.0, 0.6, 1.5);
  CHECK(j["rhs_value"].get<double>() == want.rhs);
  CHECK(j["components"]["B"].get<double>() == want.B);
  CHECK(j["lhs_spec"].is_string());

  CHECK(run_cli("bounds --theorem 99").code == 1);
}

TEST_CASE("verify subcommand") {
  const auto report = (work_dir() / "report.json").string();
  const auto res = run_cli("verify --suite subharmonic --report " + report);
  CHECK(res.code == 0);
  std::ifstream in(report);
  REQUIRE(in.good());
  json j;
  in >> j;
  CHECK(j["summary"]["failed"].get<int>() == 0);
  CHECK(j["summary"]["total"].get<int>() > 0);
}

TEST_CASE("boundary file errors") {
  CHECK(run_cli("means --boundary /nonexistent.json").code == 1);
  const auto bad = write_file("bad.json", R"({"type":"wavelet"})");
  CHECK(run_cli("means --boundary " + bad).code == 1);
}
