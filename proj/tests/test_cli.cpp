#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(VALUATA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("analyze-as X^(-3)") {
  Run r = cli("analyze-as 'X^(-3)' --p 2");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "Best_i");
  CHECK(j["invariants"]["swan"] == "3");
  CHECK(j["invariants"]["type"] == "wild");
  CHECK(j["norm_swan"] == "3");
}

TEST_CASE("normalize-as on the defect field") {
  Run r = cli("normalize-as 'X^(-1)' --field int-inv-p:gf:2 --budget 10");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["outcome"] == "DefectEvidence");
  REQUIRE(j["trajectory"].size() == 11);
  CHECK(j["trajectory"][10] == "-1/1024");
  CHECK(j["invariants"]["d"] == 2);
  CHECK(j["invariants"]["swan"] == "undefined (defect)");
}

TEST_CASE("kummer commands") {
  auto j = parse(cli("classify-kummer 5 --p 2 --m 1"));
  CHECK(j["verdict"] == "Best_v");
  j = parse(cli("classify-kummer '1 + y*pi^2' --p 2 --m 2 --with-y"));
  CHECK(j["verdict"] == "Best_iv");
  j = parse(cli("normalize-kummer '1 + pi^2' --p 2 --m 2"));
  CHECK(j["outcome"] == "BestFound");
  CHECK(j["steps"] == 1);
  j = parse(cli("classify-kummer 9 --p 2"));
  CHECK(j["verdict"] == "Trivial");
}

TEST_CASE("verify-norm-ideal") {
  Run r = cli("verify-norm-ideal 'X^(-1)' --field int-inv-p:gf:2 --samples 6 --seed 3");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["summary"]["count"] == 6);
  CHECK(j["summary"]["inequality_failures"] == 0);
  CHECK(j["swan_check"].is_null());

  r = cli("verify-norm-ideal 'X^(-3)' --p 2 --b '1 + X*alpha'");
  REQUIRE(r.code == 0);
  j = parse(r);
  CHECK(j["swan_check"]["pass"] == true);

  // s < s' at p = 3 is reported as a violation.
  r = cli("verify-norm-ideal 'X^(-1)' --field int-inv-p:gf:3 --b '1 + X*alpha^2'");
  CHECK(r.code == 2);
  j = parse(r);
  CHECK(j["samples"][0]["s"] == "2/3");
  CHECK(j["samples"][0]["s_prime"] == "1");
}

TEST_CASE("exit codes") {
  CHECK(cli("analyze-as 'X^(-3' --p 2").code == 1);
  CHECK(cli("analyze-as 'X^(1/2)' --p 2").code == 1);
  CHECK(cli("analyze-as 'q' --p 2").code == 1);
  CHECK(cli("no-such-command").code == 1);
  CHECK(cli("normalize-as X --budget 0").code == 1);
  CHECK(cli("analyze-as X --residue gf:3 --p 2").code == 1);
}

TEST_CASE("reports are deterministic and --json writes the same bytes") {
  Run a = cli("verify-norm-ideal 'X^(-2)' --p 3 --samples 4 --seed 11");
  Run b = cli("verify-norm-ideal 'X^(-2)' --p 3 --samples 4 --seed 11");
  CHECK(a.out == b.out);
  Run c = cli("run-corpus --probes 20");
  Run d = cli("run-corpus --probes 20");
  CHECK(c.code == 0);
  CHECK(c.out == d.out);

  std::string path = "cli_report_test.json";
  REQUIRE(cli("analyze-as 'y*X^(-2)' --residue ratfunc:2 --json " + path).code == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == cli("analyze-as 'y*X^(-2)' --residue ratfunc:2").out);
  std::remove(path.c_str());
}

TEST_CASE("VALUATA_SEED is the default seed") {
  Run a = cli("verify-norm-ideal 'X^(-3)' --p 2 --samples 3 --seed 5");
  std::string cmd = "env VALUATA_SEED=5 ";
  Run b;
  {
    std::string full = cmd + VALUATA_CLI_PATH + " verify-norm-ideal 'X^(-3)' --p 2 --samples 3";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) b.out.append(buf.data(), n);
    pclose(pipe);
  }
  CHECK(a.out == b.out);
}
