// Process-level checks of the command-line tool: exit codes, report
// envelopes, determinism.  The binary location and the shipped input
// directory come in through compile definitions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(WICKGIT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(WICKGIT_DATA) + "/" + name; }

json payload_of(const RunResult& r, const std::string& status = "ok") {
  const json doc = json::parse(r.out);
  CHECK(doc.at("status").get<std::string>() == status);
  return doc.at("payload");
}

}  // namespace

TEST_CASE("lie-info reports dimensions and signature") {
  const RunResult r = run_cli("lie-info --form o21");
  REQUIRE(r.exit_code == 0);
  const json p = payload_of(r);
  CHECK(p.at("n") == 3);
  CHECK(p.at("dim") == 3);
  CHECK(p.at("killing_signature") == json::array({1, 2}));
}

TEST_CASE("walker classification of the shipped examples") {
  const RunResult r1 = run_cli("walker --metric " + data("ds1.json"));
  REQUIRE(r1.exit_code == 0);
  const json p1 = payload_of(r1);
  CHECK(p1.at("tag") == "W1");
  CHECK(p1.at("closed") == false);

  const RunResult r4 = run_cli("walker --metric " + data("ds4.json"));
  REQUIRE(r4.exit_code == 0);
  const json p4 = payload_of(r4);
  CHECK(p4.at("tag") == "W4");
  CHECK(p4.at("closed") == true);
  CHECK(p4.at("flow").at("verdict") == "closed");
}

TEST_CASE("orbit verb decides a null rotation") {
  const RunResult r =
      run_cli("orbit --rep adjoint --form o21 --vector " + data("nilpotent.json"));
  REQUIRE(r.exit_code == 0);
  const json p = payload_of(r);
  CHECK(p.at("verdict") == "non_closed");
}

TEST_CASE("an exhausted flow reports undecided with exit 3") {
  const RunResult r = run_cli("orbit --form sl2 --vector " + data("sl2_nilpotent.json") +
                              " --max-iter 2");
  CHECK(r.exit_code == 3);
  const json doc = json::parse(r.out);
  CHECK(doc.at("status") == "undecided");
}

TEST_CASE("the invariant metric decomposes onto weight zero") {
  const RunResult r = run_cli("bw --form o22 --tensor " + data("o22_metric.json"));
  REQUIRE(r.exit_code == 0);
  const json p = payload_of(r);
  CHECK(p.at("support") == json::array({json::array({0, 0})}));
}

TEST_CASE("malformed input exits 2 with a located error") {
  const RunResult r = run_cli("bw --form o22 --tensor '{\"n\": 4, '");
  CHECK(r.exit_code == 2);
  const json doc = json::parse(r.out);
  CHECK(doc.at("status") == "error");
  CHECK(doc.at("payload").at("code") == "domain_error");
  const std::string msg = doc.at("payload").at("message");
  CHECK(msg.find_first_of("0123456789") != std::string::npos);
}

TEST_CASE("unknown subcommands exit 2") {
  const RunResult r = run_cli("frobnicate");
  CHECK(r.exit_code == 2);
}

TEST_CASE("reruns are byte-identical") {
  const std::string cmd = "roots --form o32";
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json p = payload_of(a);
  CHECK(p.at("label") == "B2");
  CHECK(p.at("rank") == 2);
}

TEST_CASE("lorentz canonical form of a shipped minimal element") {
  const RunResult r =
      run_cli("lorentz-canon --form o31 --vector " + data("lorentz_minimal.json"));
  REQUIRE(r.exit_code == 0);
  const json p = payload_of(r);
  REQUIRE(p.at("rotation_params").size() == 1);
  CHECK(p.at("rotation_params")[0].get<double>() == doctest::Approx(1.0));
  REQUIRE(p.at("kernel_vector_norms").size() == 1);
  CHECK(p.at("kernel_vector_norms")[0].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("curvature verb evaluates builtin coordinate metrics") {
  const RunResult r =
      run_cli("curvature --metric " + data("sphere.json") + " --point 1.0,0.5");
  REQUIRE(r.exit_code == 0);
  const json p = payload_of(r);
  CHECK(p.at("span_dim") == 1);
  CHECK(p.at("scalar").get<double>() == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("frame metric files report the exact Einstein constant") {
  const RunResult r = run_cli("curvature --metric " + data("su2su2_metric.json"));
  REQUIRE(r.exit_code == 0);
  const json p = payload_of(r);
  CHECK(p.at("einstein_constant") == "1/4");
}

TEST_CASE("hermitian check approves a standard pair") {
  const RunResult r =
      run_cli("hermitian-check --triple " + data("triple_2112.json") + " --valence 2");
  REQUIRE(r.exit_code == 0);
  CHECK(payload_of(r).at("ok") == true);
}

TEST_CASE("suite verb reports items sorted by id") {
  const RunResult r = run_cli("suite einstein");
  REQUIRE(r.exit_code == 0);
  const json p = payload_of(r);
  CHECK(p.at("passed") == true);
  const json& items = p.at("items");
  REQUIRE(items.size() >= 3);
  for (size_t i = 1; i < items.size(); ++i)
    CHECK(items[i - 1].at("id").get<std::string>() < items[i].at("id").get<std::string>());
}

TEST_CASE("unknown suites exit 2") {
  const RunResult r = run_cli("suite no-such-suite");
  CHECK(r.exit_code == 2);
  const json doc = json::parse(r.out);
  CHECK(doc.at("payload").at("code") == "domain_error");
}
