#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dzeta/run_config.hpp"

using dzeta::Command;
using dzeta::Complex;
using dzeta::Format;
using dzeta::RunConfig;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string log;
};

Outcome run(const RunConfig& c) {
  std::ostringstream out, log;
  const int status = dzeta::run(c, out, log);
  return {status, out.str(), log.str()};
}

}  // namespace

TEST_CASE("configuration round-trips through its text form") {
  RunConfig c;
  CHECK(dzeta::parse_config(dzeta::to_text(c)) == c);
  c.command = Command::MeanSquare;
  c.s0 = Complex(0.1 + 0.2, -1.0 / 3.0);
  c.s = Complex(1e-300, 6.02214076e23);
  c.sigma = 0.7000000000000001;
  c.T = 1234.5;
  c.n_max = 4096;
  c.mode = "truncated";
  c.evaluator = "riemann";
  c.output_path = "out/run 1.csv";
  c.format = Format::Json;
  c.settings.tol = 3e-9;
  c.settings.threads = 7;
  c.settings.s0_one_radius = 2.5e-5;
  const std::string text = dzeta::to_text(c);
  const RunConfig back = dzeta::parse_config(text);
  CHECK(back == c);
  CHECK(dzeta::to_text(back) == text);
}

TEST_CASE("configuration parsing") {
  const RunConfig c = dzeta::parse_config("# comment\n\ncommand=gamma2\ns0 = 2.5,-1\nT=50\n");
  CHECK(c.command == Command::Gamma2);
  CHECK(c.s0 == Complex(2.5, -1.0));
  CHECK(c.T == 50.0);
  CHECK(dzeta::parse_complex("3") == Complex(3.0, 0.0));
  CHECK(dzeta::parse_complex(" -1.5e-3 , 2 ") == Complex(-1.5e-3, 2.0));
  CHECK_THROWS_AS(dzeta::parse_config("nonsense=1\n"), dzeta::ConfigError);
  CHECK_THROWS_AS(dzeta::parse_config("T=abc\n"), dzeta::ConfigError);
  CHECK_THROWS_AS(dzeta::parse_config("n_max=1.5\n"), dzeta::ConfigError);
  CHECK_THROWS_AS(dzeta::parse_config("command=plot\n"), dzeta::ConfigError);
  CHECK_THROWS_AS(dzeta::parse_config("format=xml\n"), dzeta::ConfigError);
  CHECK_THROWS_AS(dzeta::parse_config("no equals sign\n"), dzeta::ConfigError);
  CHECK_THROWS_AS(dzeta::parse_complex("1,2,3"), dzeta::ConfigError);
}

TEST_CASE("eval in the region of absolute convergence") {
  RunConfig c;
  auto r = run(c);
  CHECK(r.status == 0);
  CHECK(r.out.rfind("0.811742425", 0) == 0);
  CHECK(r.out.find("+ 0i (route=Direct)") != std::string::npos);
  CHECK(r.log.find("eval route=Direct est_error=") != std::string::npos);
  CHECK(r.log.find("wall=") != std::string::npos);
}

TEST_CASE("eval on the singular locus exits with 2") {
  RunConfig c;
  c.s0 = 1.3;
  c.s = 0.7;
  auto r = run(c);
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(r.log.find("singular locus s0+s=2") != std::string::npos);
}

TEST_CASE("exit statuses") {
  RunConfig outside;
  outside.s0 = 0.2;
  outside.s = 0.2;
  CHECK(run(outside).status == 2);

  RunConfig strict;
  strict.command = Command::Gamma2;
  strict.n_max = 1024;
  strict.settings.tol = 1e-15;
  CHECK(run(strict).status == 3);

  RunConfig bad;
  bad.settings.tol = -1.0;
  CHECK(run(bad).status == 1);
}

TEST_CASE("json output") {
  RunConfig c;
  c.command = Command::Zeta2Sq;
  c.format = Format::Json;
  auto r = run(c);
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "dzeta/1");
  CHECK(j["value"]["re"].get<double>() == doctest::Approx(0.26575625919538455));
}

TEST_CASE("results go to the output file") {
  const auto path = std::filesystem::temp_directory_path() / "dzeta_run_config_test.csv";
  RunConfig c;
  c.command = Command::MeanSquare;
  c.s0 = 3.0;
  c.sigma = 2.0;
  c.T = 12.0;
  c.format = Format::Csv;
  c.output_path = path.string();
  auto first = run(c);
  REQUIRE(first.status == 0);
  CHECK(first.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream a;
  a << in.rdbuf();
  in.close();
  CHECK(a.str().rfind("t,re,im,abs2,cumulative\n", 0) == 0);
  REQUIRE(run(c).status == 0);
  std::ifstream again(path, std::ios::binary);
  std::stringstream b;
  b << again.rdbuf();
  CHECK(a.str() == b.str());
  std::filesystem::remove(path);
}
