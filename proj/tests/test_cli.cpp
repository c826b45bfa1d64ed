#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "catch2/catch_amalgamated.hpp"

#include "frob/claims.hpp"
#include "frob/report.hpp"

using frob::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(FROBCLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe))
    r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json reports_without_timings(const std::string& body) {
  json arr = json::parse(body);
  for (auto& r : arr) r.erase("timings");
  return arr;
}

}  // namespace

TEST_CASE("list-claims matches the catalog") {
  auto r = run_cli("list-claims");
  REQUIRE(r.code == 0);
  json arr = json::parse(r.out);
  const auto& catalog = frob::claim_catalog();
  REQUIRE(arr.size() == catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    REQUIRE(arr[i]["id"] == catalog[i].id);
    REQUIRE(arr[i]["statement"] == catalog[i].statement);
  }
}

TEST_CASE("verify emits a report array and exit code 0 on success") {
  auto r = run_cli("verify rem-4.1-hsop --m 4 --n 3 --p 5");
  REQUIRE(r.code == 0);
  json arr = json::parse(r.out);
  REQUIRE(arr.size() == 1);
  REQUIRE(arr[0]["claim"] == "rem-4.1-hsop");
  REQUIRE(arr[0]["verdict"] == "verified");
  REQUIRE(arr[0]["witnesses"]["dimension"] == 3);

  // round-trip through the report type
  auto rep = frob::VerificationReport::from_json(arr[0]);
  auto back = rep.to_json();
  back.erase("timings");
  auto orig = arr[0];
  orig.erase("timings");
  REQUIRE(back == orig);
}

TEST_CASE("verify output is deterministic modulo timings") {
  const std::string args = "verify lemma-4.2 --p 5 --m 4 --n 3 --k 2";
  auto a = run_cli(args);
  auto b = run_cli(args);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  REQUIRE(reports_without_timings(a.out) == reports_without_timings(b.out));
}

TEST_CASE("usage and instance errors exit with code 2") {
  REQUIRE(run_cli("verify no-such-claim --p 5").code == 2);
  REQUIRE(run_cli("verify lemma-4.2 --m 4 --n 3 --k 2").code == 2);  // no --p
  REQUIRE(run_cli("verify").code == 2);
  REQUIRE(run_cli("nonsense-subcommand").code == 2);
  // hypothesis violation: report says invalid-instance, exit is usage
  auto r = run_cli("verify lemma-4.2 --p 5 --m 3 --n 3 --k 2");
  REQUIRE(r.code == 2);
  REQUIRE(json::parse(r.out)[0]["verdict"] == "invalid-instance");
}

TEST_CASE("budget overrun exits with code 3") {
  auto r =
      run_cli("verify lemma-4.2 --p 5 --m 4 --n 3 --k 2 --budget 10");
  REQUIRE(r.code == 3);
}

TEST_CASE("thm-1.1 is an alias for the bundle") {
  auto r = run_cli("verify thm-1.1 --p 5 --m 4 --n 3");
  REQUIRE(r.code == 0);
  json arr = json::parse(r.out);
  REQUIRE(arr[0]["claim"] == "thm-1.1-bundle");
  REQUIRE(arr[0]["verdict"] == "verified");
}

TEST_CASE("sweep subcommand") {
  auto r = run_cli("sweep --m 4 --n 3 --primes 3,5");
  REQUIRE(r.code == 0);
  json arr = json::parse(r.out);
  REQUIRE(arr.size() == 2);
  for (const auto& rep : arr) REQUIRE(rep["verdict"] == "verified");
  // p = 2 yields an invalid instance, so the exit code is 2
  REQUIRE(run_cli("sweep --m 4 --n 3 --primes 2").code == 2);
}

TEST_CASE("divisor calculators") {
  auto dims = run_cli("divisor dims --E 1/2@VX,1/2@VY,1/4@VXY --up-to 8");
  REQUIRE(dims.code == 0);
  REQUIRE(json::parse(dims.out)["dims"] ==
          json::parse("[1,1,3,3,6,6,8,8,11]"));

  auto fl = run_cli("divisor floor --E 3/2@A,-3/2@B");
  REQUIRE(fl.code == 0);
  REQUIRE(json::parse(fl.out)["floor"] == "1@A, -2@B");

  auto id = run_cli("divisor identity --E 1/2@VX,1/2@VY,1/6@VXY --up-to 50");
  REQUIRE(id.code == 0);
  REQUIRE(json::parse(id.out)["holds"] == true);

  auto h = run_cli("divisor heuristic --E 1/2@VX,1/2@VY,1/4@VXY --p 5");
  REQUIRE(h.code == 0);
  REQUIRE(json::parse(h.out)["degree"] == "-5/4");
  REQUIRE(json::parse(h.out)["h1"] == 2);
  // heuristic without a characteristic is a usage error
  REQUIRE(run_cli("divisor heuristic --E 1/2@VX").code == 2);
  REQUIRE(run_cli("divisor floor --E garbage").code == 2);
}

TEST_CASE("groebner calculators") {
  auto basis = run_cli(
      "gb basis --p 5 --vars x,y --gens \"x^2,x*y + y^2\"");
  REQUIRE(basis.code == 0);
  json b = json::parse(basis.out)["basis"];
  REQUIRE(b == json::parse(R"(["x*y + y^2", "x^2", "y^3"])"));

  auto mem = run_cli(
      "gb member --p 5 --vars x,y --gens \"x^2,x*y + y^2\" --poly y^3");
  REQUIRE(mem.code == 0);
  REQUIRE(json::parse(mem.out)["member"] == true);

  auto dim = run_cli("gb dim --p 5 --vars x,y,z --gens x*y");
  REQUIRE(dim.code == 0);
  REQUIRE(json::parse(dim.out)["dimension"] == 2);

  auto hil = run_cli(
      "gb hilbert --p 0 --vars a,b,c,d --weights 1,2,2,6 "
      "--gens \"a^4 - b*c, a^2*(b^3-d) - d*c, b*(b^3-d) - d*a^2\" --up-to 6");
  REQUIRE(hil.code == 0);
  REQUIRE(json::parse(hil.out)["hilbert"] ==
          json::parse("[1,1,3,3,5,5,8]"));

  REQUIRE(run_cli("gb member --p 5 --vars x --gens x").code == 2);  // no poly
  REQUIRE(run_cli("gb basis --p 5 --vars x --gens \"x +\"").code == 2);
}

TEST_CASE("output format and file redirection") {
  auto text = run_cli("verify rem-4.1-nzd --m 4 --n 3 --p 5 --format text");
  REQUIRE(text.code == 0);
  REQUIRE(text.out.find("rem-4.1-nzd") != std::string::npos);
  REQUIRE(text.out.find("verified") != std::string::npos);

  std::string path = "cli_out_test.json";
  auto r = run_cli("verify rem-4.1-nzd --m 4 --n 3 --p 5 --out " + path);
  REQUIRE(r.code == 0);
  REQUIRE(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  REQUIRE(json::parse(ss.str())[0]["verdict"] == "verified");
  std::remove(path.c_str());
}
