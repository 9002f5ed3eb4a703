#include <cstdio>
#include <fstream>
#include <sstream>

#include "cusp/cli.hpp"
#include "test_util.hpp"

using namespace cusp;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(const RunConfig& c) {
  std::ostringstream out, err;
  const int rc = run_command(c, out, err);
  return {rc, out.str(), err.str()};
}

RunConfig config(const std::string& command, long q = 2) {
  RunConfig c;
  c.command = command;
  c.q = q;
  return c;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char ch : s) n += ch == '\n';
  return n;
}

}  // namespace

TEST_CASE("bessel-table") {
  RunConfig c = config("bessel-table");
  c.format = "csv";
  Run r = run(c);
  CHECK(r.rc == ExitPass);
  CHECK(count_lines(r.out) == 7);
  c.q = 3;
  r = run(c);
  CHECK(r.rc == ExitPass);
  CHECK(count_lines(r.out) == 49);
  c.format = "json";
  r = run(c);
  const Json j = Json::parse(r.out);
  CHECK(j["rows"].size() == 48);
  CHECK(j["checks"]["pass"] == true);
  c.theta = 4;
  r = run(c);
  CHECK(r.rc == ExitConfig);
  CHECK(r.err.find("NotRegular") != std::string::npos);
}

TEST_CASE("verify") {
  Run r = run(config("verify"));
  CHECK(r.rc == ExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j.contains("mu"));

  RunConfig c = config("verify", 3);
  c.family = "ramified";
  c.twist = "zeta(4)";
  r = run(c);
  CHECK(r.rc == ExitPass);
  const Json t = Json::parse(r.out);
  CHECK(t["expected_L"].get<std::string>().find("z36^9") != std::string::npos);

  c.window = 0;
  r = run(c);
  CHECK(r.rc == ExitFail);
  CHECK(r.err.find("theorem") != std::string::npos);

  c = config("verify");
  c.format = "csv";
  r = run(c);
  CHECK(r.out.rfind("i,c_i,q_pow\n", 0) == 0);
}

TEST_CASE("reduce exit statuses") {
  RunConfig c = config("reduce");
  c.ell = 5;
  Run r = run(c);
  CHECK(r.rc == ExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j["match"] == true);
  CHECK(j["reduced_factor"] == "1/(1 - X^2)");
  c.ell = 3;
  r = run(c);
  CHECK(r.rc == ExitRefused);
  CHECK(r.err.find("NonBanal") != std::string::npos);
  c.ell = 2;
  r = run(c);
  CHECK(r.rc == ExitConfig);
  CHECK(r.err.find("EllEqualsP") != std::string::npos);
}

TEST_CASE("oracle-check") {
  RunConfig c = config("oracle-check", 3);
  c.oracle_kmax = 4;
  const Run r = run(c);
  CHECK(r.rc == ExitPass);
  CHECK(Json::parse(r.out)["coefficients"].size() == 5);
}

TEST_CASE("config errors") {
  RunConfig c = config("frobnicate");
  CHECK(run(c).rc == ExitConfig);
  c = config("verify");
  c.A = "zeta(";
  CHECK(run(c).rc == ExitConfig);
  c = config("verify", 4);
  CHECK(run(c).rc == ExitConfig);
  c = config("verify", 2);
  c.family = "ramified";
  CHECK(run(c).rc == ExitConfig);
  c = config("verify");
  c.n = 3;
  CHECK(run(c).rc == ExitConfig);
}

TEST_CASE("identical configurations give identical reports") {
  for (const char* cmd : {"bessel-table", "verify", "reduce"}) {
    RunConfig c = config(cmd, 3);
    c.ell = 5;
    c.jobs = 1;
    const std::string a = run(c).out;
    c.jobs = 3;
    const Json ja = Json::parse(a);
    Json jb = Json::parse(run(c).out);
    jb["config"]["jobs"] = 1;
    CHECK(ja.dump() == jb.dump());
    c.jobs = 1;
    CHECK(run(c).out == a);
  }
}

TEST_CASE("report goes to --out") {
  RunConfig c = config("verify");
  c.out = "test_cli_report.json";
  const Run r = run(c);
  CHECK(r.rc == ExitPass);
  CHECK(r.out.empty());
  std::ifstream f(c.out);
  CHECK(Json::parse(f)["pass"] == true);
  std::remove(c.out.c_str());
}
