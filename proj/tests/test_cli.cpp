#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = g2calc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "contract(e6^e7, starphi0)"});
  CHECK(r.code == 0);
  CHECK(r.out == "dx23 + dx45\n");
  r = run({"--json", "eval", "e6^e7"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "multivector");
  CHECK(j["grade"] == 2);
  CHECK(j["value"] == "e6^e7");
  r = run({"eval", "dx1 ^ e2"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--dim", "3", "eval", "dx123"}).out == "dx123\n");
  CHECK(run({"--dim", "3", "eval", "phi0"}).code == 2);
}

TEST_CASE("classify") {
  auto r = run({"classify", "--form", "x4*dx5 + x2*dx3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rochesterian: false") != std::string::npos);
  CHECK(r.out.find("corochesterian: true") != std::string::npos);
  CHECK(r.out.find("witness: e6^e7") != std::string::npos);

  r = run({"--json", "classify", "--vector", "e6^e7"});
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["rochesterian"] == true);
  CHECK(j[0]["witness"] == "x1");
  CHECK(j[1]["corochesterian"] == true);

  CHECK(run({"classify", "--vector", "e1^e2^e3^e4"}).code == 2);
  CHECK(run({"classify"}).code == 2);
}

TEST_CASE("solve") {
  auto r = run({"--json", "solve", "--omega", "starphi0", "--form", "x4*dx5 + x2*dx3"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "unique");
  CHECK(j["particular"] == "e6^e7");
  CHECK(j["kernel_dim"] == 0);

  j = nlohmann::json::parse(run({"--json", "solve", "--form", "x4*dx5 + x2*dx3"}).out);
  CHECK(j["status"] == "none");
  CHECK(j["particular"].is_null());

  j = nlohmann::json::parse(run({"--json", "solve", "--form", "x1"}).out);
  CHECK(j["status"] == "underdetermined");
  CHECK(j["kernel_dim"] == 14);
}

TEST_CASE("omega from a file") {
  const std::string path = "test_cli_omega.json";
  {
    std::ofstream f(path);
    f << R"({"12": 1, "3,4": "1"})";
  }
  auto r = run({"--dim", "4", "--json", "solve", "--omega", path, "--form", "x1*x3"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "unique");
  CHECK(j["omega"] == "dx12 + dx34");
  CHECK(run({"solve", "--omega", "missing.json", "--form", "x1"}).code == 2);
}

TEST_CASE("structure-info") {
  auto r = run({"structure-info"});
  CHECK(r.code == 0);
  CHECK(r.out.find("linear symmetry algebra dimension: 14") != std::string::npos);
  CHECK(r.out.find("FAILS") == std::string::npos);
  r = run({"--json", "structure-info", "--omega", "starphi0"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).is_object());
}

TEST_CASE("verify") {
  auto r = run({"verify", "--seed", "42", "--trials", "200"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"--json", "verify", "--trials", "20"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == j["total"]);
}

TEST_CASE("usage errors") {
  CHECK(run({"--bogus"}).code == 2);
  CHECK(run({"--dim", "40", "eval", "x1"}).code == 2);
}
