#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "tropint/io.hpp"

using namespace tropint;

namespace {

std::string cli_path() {
  const char* p = std::getenv("TROPINT_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string fixture_dir() {
  const char* p = std::getenv("TROPINT_FIXTURES");
  REQUIRE(p != nullptr);
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out_file = "cli_out_" + std::to_string(counter++) + ".txt";
  std::string cmd = cli_path() + " " + args + " > " + out_file + " 2> " + out_file + ".err";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out_file);
  std::remove(out_file.c_str());
  std::remove((out_file + ".err").c_str());
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

}  // namespace

TEST_CASE("reports are byte-identical across runs and thread counts") {
  struct Job {
    const char* fixture;
    const char* subcommand;
    const char* flags;
  };
  const Job jobs[] = {
      {"lines_generic.json", "stable-intersect", ""},
      {"curves_2_3.json", "stable-intersect", ""},
      {"triangle_square.json", "mixed-volume", "--indices 0 1"},
      {"tropical_line.json", "degree-bound", ""},
      {"identical.json", "stable-intersect", ""},
      {"bezout_three.json", "bezout-bound", "--codim 1"},
  };
  for (const auto& job : jobs) {
    std::string input = fixture_dir() + std::string("/") + job.fixture;
    std::string base = job.subcommand + std::string(" ") + input + " " + job.flags;
    auto r1 = run_cli(base + " --threads 1");
    auto r2 = run_cli(base + " --threads 1");
    auto r4 = run_cli(base + " --threads 4");
    CAPTURE(job.fixture);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out == r4.out);
    CHECK(!r1.out.empty());
  }
}

TEST_CASE("emitted reports re-parse and fixtures parse to a stable form") {
  auto r = run_cli("stable-intersect " + fixture_dir() + "/curves_2_3.json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("command"));
  CHECK(j.contains("input_digest"));
  CHECK(j.contains("results"));
  CHECK(j.contains("version"));

  for (const char* f : {"lines_generic.json", "curves_2_3.json", "triangle_square.json",
                        "tropical_line.json", "identical.json", "bezout_three.json"}) {
    std::string text = slurp(fixture_dir() + std::string("/") + f);
    SystemFile a = parse_system_file(text);
    SystemFile b = parse_system_file(text);
    REQUIRE(a.polynomials.size() == b.polynomials.size());
    for (size_t i = 0; i < a.polynomials.size(); ++i) {
      CHECK(a.polynomials[i].support() == b.polynomials[i].support());
      for (size_t t = 0; t < a.polynomials[i].terms.size(); ++t)
        CHECK(a.polynomials[i].terms[t].coefficient == b.polynomials[i].terms[t].coefficient);
    }
  }
}

TEST_CASE("exit code contract") {
  // 2: json syntax error with line/column
  write_file("bad_syntax.json", "{ \"vars\": 2, \n  \"polynomials\": [ }");
  CHECK(run_cli("hypersurface bad_syntax.json").exit_code == 2);

  // 2: zero denominator in a coefficient
  write_file("bad_coef.json",
             "{\"vars\": 1, \"polynomials\": [{\"terms\": [{\"exp\": [0], \"coef\": \"1/0\"}]}]}");
  CHECK(run_cli("hypersurface bad_coef.json").exit_code == 2);

  // 2: duplicate exponents within one polynomial
  write_file("dup_exp.json",
             "{\"vars\": 1, \"polynomials\": [{\"terms\": [{\"exp\": [1], \"coef\": \"0\"}, "
             "{\"exp\": [1], \"coef\": \"2\"}]}]}");
  CHECK(run_cli("hypersurface dup_exp.json").exit_code == 2);

  // 3: dimension cap
  write_file("dim5.json",
             "{\"vars\": 5, \"polynomials\": [{\"terms\": [{\"exp\": [0,0,0,0,0], \"coef\": \"0\"}, "
             "{\"exp\": [1,0,0,0,0], \"coef\": \"0\"}]}]}");
  CHECK(run_cli("hypersurface dim5.json").exit_code == 3);

  // 4: wrong arity for mixed-volume and stable-intersect, invalid codim
  std::string tri_sq = fixture_dir() + "/triangle_square.json";
  CHECK(run_cli("mixed-volume " + tri_sq + " --indices 0").exit_code == 4);
  CHECK(run_cli("bezout-bound " + tri_sq + " --codim 7").exit_code == 4);
  std::string three = fixture_dir() + "/bezout_three.json";
  CHECK(run_cli("stable-intersect " + three).exit_code == 4);

  // 0 with --out: atomic file emission
  auto r = run_cli("hypersurface " + tri_sq + " --out out_report.json");
  CHECK(r.exit_code == 0);
  CHECK(!slurp("out_report.json").empty());
  std::remove("out_report.json");
}

TEST_CASE("svg output is valid and deterministic") {
  std::string input = fixture_dir() + "/lines_generic.json";
  auto r1 = run_cli("stable-intersect " + input + " --svg plot1.svg");
  auto r2 = run_cli("stable-intersect " + input + " --svg plot2.svg");
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  std::string s1 = slurp("plot1.svg");
  std::string s2 = slurp("plot2.svg");
  CHECK(s1 == s2);
  CHECK(s1.rfind("<svg", 0) == 0);
  CHECK(s1.find("</svg>") != std::string::npos);
  CHECK(s1.find("<line") != std::string::npos);
  CHECK(s1.find("<circle") != std::string::npos);
  std::remove("plot1.svg");
  std::remove("plot2.svg");

  auto rh = run_cli("hypersurface " + input + " --svg plot3.svg");
  REQUIRE(rh.exit_code == 0);
  std::string s3 = slurp("plot3.svg");
  CHECK(s3.find("<rect") != std::string::npos);  // Newton polygon inset panel
  std::remove("plot3.svg");
}

TEST_CASE("TROPINT_SEED environment fallback changes sampling deterministically") {
  std::string input = fixture_dir() + "/lines_generic.json";  // no seed field
  setenv("TROPINT_SEED", "123", 1);
  auto a = run_cli("degree-bound " + input + " --samples 40");
  auto b = run_cli("degree-bound " + input + " --samples 40");
  setenv("TROPINT_SEED", "456", 1);
  auto c = run_cli("degree-bound " + input + " --samples 40 --seed 123");
  unsetenv("TROPINT_SEED");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);  // explicit flag beats the env value
}
