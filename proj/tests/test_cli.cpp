#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mt/cli.hpp"

using namespace mt;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mtcli");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(MT_DATA_DIR) + "/curves/" + name + ".json"; }
}  // namespace

TEST_CASE("analyze 26b1 in Neron mode") {
  const auto r = cli({"analyze", "--curve", fixture("26b1"), "--p", "7", "--n-max", "2", "--mode", "neron"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "CaseB");
  CHECK(j["levels"][2]["lambda"] == "48");
  CHECK(j["levels"][2]["mu"] == "-1");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"invariants", "--curve", fixture("11a1"), "--p", "5", "--n-max", "2", "--format", "csv"};
  const auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,mu,lambda", 0) == 0);
}

TEST_CASE("inline coefficients") {
  const auto r = cli({"invariants", "--coeffs", "0,-1,1,-10,-20", "--conductor", "11", "--lratio", "1/5", "--p", "5",
                      "--n-max", "1", "--mode", "neron", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/5") != std::string::npos);
}

TEST_CASE("error exit codes") {
  auto r = cli({"analyze", "--curve", fixture("50b1"), "--p", "5", "--n-max", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("NotGoodOrdinary") != std::string::npos);
  r = cli({"analyze", "--curve", fixture("11a1"), "--p", "4"});
  CHECK(r.code == 3);
  r = cli({"analyze", "--curve", "/nonexistent.json", "--p", "5"});
  CHECK(r.code == 3);
  r = cli({"analyze", "--curve", fixture("11a1"), "--coeffs", "0,0,0,0,1", "--p", "5"});
  CHECK(r.code == 3);
  r = cli({"analyze", "--coeffs", "0,-1,1,-10,-20", "--conductor", "13", "--p", "5"});
  CHECK(r.code == 3);
  r = cli({"invariants", "--coeffs", "0,-1,1,-10,-20", "--conductor", "11", "--p", "5", "--mode", "neron"});
  CHECK(r.code == 3);  // Neron mode without an L-ratio
}

TEST_CASE("boundary and eigensymbol commands") {
  auto r = cli({"boundary", "--curve", fixture("174b1"), "--p", "7"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["solvable"] == false);
  r = cli({"eigensymbol", "--curve", fixture("11a1")});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"] == "3");
  CHECK(j["phi_at_zero"] == "2");
}
