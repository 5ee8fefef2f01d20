#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "denthex/runner.hpp"
#include "denthex/specio.hpp"

using namespace denthex;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/denthex_cli_test_out.txt";
  std::string cmd = std::string(DENTHEX_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return {WEXITSTATUS(rc), text};
}

std::string write_spec(const std::string& name, const std::string& body) {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" +
                     name;
  std::ofstream f(path);
  f << body;
  return path;
}

}  // namespace

TEST_CASE("cli count across methods") {
  std::string unit = write_spec("cli_h111.json", R"({"a":1,"b":1,"c":1})");
  std::string hex = write_spec("cli_h222.json", R"({"a":2,"b":2,"c":2})");
  for (const char* m : {"auto", "oracle", "pfaffian", "formula"}) {
    RunResult u = run_cli("count " + unit + " --method " + m);
    CHECK(u.exit_code == 0);
    CHECK(u.out == "2\n");
    RunResult r = run_cli("count " + hex + " --method " + m);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "20\n");
  }
  std::string dent = write_spec(
      "cli_dent.json",
      R"({"a":2,"b":2,"c":2,"k":1,"alpha":[{"side":"S","pos":1},{"side":"NE","pos":2}],
          "beta":[{"side":"SE","pos":1}]})");
  RunResult oracle = run_cli("count " + dent + " --method oracle");
  RunResult pfaff = run_cli("count " + dent + " --method pfaffian");
  CHECK(oracle.exit_code == 0);
  CHECK(pfaff.exit_code == 0);
  CHECK(oracle.out == pfaff.out);
}

TEST_CASE("cli exit codes") {
  std::string bad_json = write_spec("cli_bad.json", "{nope");
  CHECK(run_cli("count " + bad_json).exit_code == 2);
  std::string unbalanced =
      write_spec("cli_unb.json", R"({"a":1,"b":1,"c":1,"k":1,"beta":[{"side":"N","pos":1}]})");
  CHECK(run_cli("count " + unbalanced).exit_code == 3);
  CHECK(run_cli("count /nonexistent/path.json").exit_code == 2);
}

TEST_CASE("cli verify and identities and sweep") {
  std::string dent = write_spec(
      "cli_v.json",
      R"({"a":1,"b":2,"c":1,"k":1,"alpha":[{"side":"NE","pos":1}],"beta":[]})");
  RunResult v = run_cli("verify " + dent);
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("all methods agree") != std::string::npos);

  RunResult ids = run_cli("identities --trials 5 --seed 3");
  CHECK(ids.exit_code == 0);
  CHECK(ids.out.find("FAIL") == std::string::npos);

  RunResult sw = run_cli("sweep --amax 1 --bmax 1 --cmax 1 --kmax 1 --nmax 1");
  CHECK(sw.exit_code == 0);
  CHECK(sw.out.find("0 failures") != std::string::npos);
}

TEST_CASE("cli render determinism") {
  std::string hex = write_spec("cli_r.json", R"({"a":1,"b":1,"c":1})");
  RunResult a = run_cli("render " + hex + " --format ascii --with-tiling");
  RunResult b = run_cli("render " + hex + " --format ascii --with-tiling");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find('_') != std::string::npos);
  RunResult svg = run_cli("render " + hex + " --format svg");
  CHECK(svg.exit_code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
}

TEST_CASE("runner method selection") {
  HexDentSpec plain = parse_spec(R"({"a":2,"b":2,"c":2})");
  CHECK(count_with_method(plain, Method::Auto) == 20);
  CHECK(count_with_method(plain, Method::Formula) == 20);
  HexDentSpec gen = parse_spec(
      R"({"a":2,"b":1,"c":1,"k":1,
          "alpha":[{"side":"S","pos":1},{"side":"NW","pos":2}],
          "beta":[{"side":"SE","pos":1}]})");
  Count want = count_with_method(gen, Method::Oracle);
  CHECK(count_with_method(gen, Method::Pfaffian) == want);
  CHECK(count_with_method(gen, Method::Auto) == want);
  CHECK_THROWS_AS((void)method_from_name("nope"), Error);
}
