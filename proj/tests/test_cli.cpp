#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "json_io.hpp"
#include "testing.hpp"

using namespace testing;
using orthoschmidt::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
  json e() const { return json::parse(err); }
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = orthoschmidt::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

QubitVector qubit(const json& j) { return io::qubit_from_json(j, "test"); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("decompose xi1 from rounded amplitudes") {
  const auto r = run({"decompose", "--state", "[[0.57735,0],[0.40825,0],[0.40825,0],[-0.57735,0]]"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  CHECK(j["branch"] == "diagonal");
  CHECK(std::abs(j["coeffs"][0].get<double>() - 1 / kS2) <= 1e-5);
  const QubitVector a0{std::sqrt(2.0 / 3), std::sqrt(1.0 / 3)};
  CHECK(phase_dist(qubit(j["basis_a"][0]), a0) <= 1e-5);
  CHECK(j["rank_deficient"] == false);
}

TEST_CASE("construct then verify round trips") {
  const auto c = run({"construct", "--type", "ppee", "--case", "1", "--params",
                      R"({"a":[0.70711,0],"b":[0.70711,0]})"});
  REQUIRE(c.code == 0);
  const json j = c.j();
  CHECK(j["type"] == "PPEE");
  CHECK(j["label"] == "PPEE");
  CHECK(j["params"]["a"][0] == 0.70711);
  const auto states = io::set_from_json(j);
  CHECK(phase_dist(states[2], states::psi_plus()) <= 1e-12);
  CHECK(phase_dist(states[3], states::psi_minus()) <= 1e-12);

  const auto v = run({"verify"}, c.out);
  CHECK(v.code == 0);
  CHECK(v.j()["passed"] == true);
  CHECK(v.j()["labels_ok"] == true);

  // Printed floats read back to the same doubles.
  const auto again = io::set_from_json(json::parse(json(j).dump()));
  for (std::size_t i = 0; i < states.size(); ++i) CHECK(again[i] == states[i]);
}

TEST_CASE("construct infers variants") {
  auto r = run({"construct", "--type", "pe", "--params", R"({"a":0.6,"b":0.8})"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["variant"] == "diagonal");
  r = run({"construct", "--type", "pe", "--params", R"({"a":0.5,"b":0.5,"c":[0,0.70710678118654757]})"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["variant"] == "nondiagonal");
  r = run({"construct", "--type", "ee", "--params", R"({"gamma":0.5,"a":0.5,"b":[0,0.5],"c":0.5})"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["variant"] == "nondiagonal");
  r = run({"construct", "--type", "mmee", "--params", R"({"a":0.5,"b":[0,0.5]})"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["variant"] == "diagonal");
  r = run({"construct", "--type", "ppp", "--variant", "b-side", "--params",
           R"({"basis":[[1,0],[0,1]]})"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["variant"] == "b-side");
}

TEST_CASE("every type constructs and verifies") {
  const std::vector<std::vector<std::string>> cases{
      {"--type", "pp", "--params", R"({"single":[[0.6,0],[0,0.8]]})"},
      {"--type", "ep", "--params", R"({"gamma":0.3,"a":1,"b":[0.2,0.4],"sign":"-"})"},
      {"--type", "ee", "--variant", "diagonal", "--params",
       R"({"gamma":0.5,"a":0,"b":[0,0.70710678118654757],"c":0.70710678118654757})"},
      {"--type", "pppp", "--params", R"({"basis":[[0.6,0.8],[0.8,-0.6]]})"},
      {"--type", "ppe", "--case", "1", "--params", R"({"c":0.6,"d":0.8})"},
      {"--type", "ppe", "--case", "2", "--params", R"({"a":0.6,"b":0.8,"c":0.8,"d":0.6})"},
      {"--type", "ppe", "--case", "3", "--params", R"({"a":0.6,"b":0.8,"c":[0,0.8],"d":0.6})"},
      {"--type", "ppee", "--case", "2", "--params", R"({"a":0.6,"b":0.8,"c":0.8,"d":0.6})"},
      {"--type", "ppee", "--case", "3", "--params", R"({"a":0.6,"b":0.8,"c":0.8,"d":0.6})"},
      {"--type", "pm", "--params", R"({"theta":0.3,"theta_prime":-1})"},
      {"--type", "pmee", "--params", R"({"theta":0.3,"theta_prime":-1,"theta_dprime":2,"c":[0.2,0.3]})"},
      {"--type", "mmee", "--variant", "nondiagonal", "--params",
       R"({"theta":0.3,"theta_prime":1.1,"a":[0.4,0.1],"b":[0.2,-0.3]})"}};
  for (auto args : cases) {
    args.insert(args.begin(), "construct");
    const auto c = run(args);
    INFO(args[2]);
    REQUIRE(c.code == 0);
    const auto v = run({"verify"}, c.out);
    CHECK(v.code == 0);
  }
}

TEST_CASE("verify flags a mislabelled set") {
  const std::string set =
      R"({"label":"PE","states":[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0],[0,0]]]})";
  const auto v = run({"verify", "--set", set});
  CHECK(v.code == 1);
  CHECK(v.j()["labels_ok"] == false);
  CHECK(v.e()["error"] == "VerificationFailed");

  const auto w = run({"verify", "--set", R"([[[1,0],[0,0],[0,0],[0,0]],[[1,0],[1,0],[0,0],[0,0]]])"});
  CHECK(w.code == 1);
  CHECK(w.j()["passed"] == false);
}

TEST_CASE("classify") {
  const auto r = run({"classify", "--set", R"([[[1,0],[0,0],[0,0],[0,0]],[0,0.70710678118654757,0.70710678118654757,0]])"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["pattern"] == "PE");
  CHECK(r.j()["refined"] == "PM");
}

TEST_CASE("sample") {
  const auto r = run({"sample", "--type", "mmee", "--seed", "5", "--count", "3"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  REQUIRE(j["sets"].size() == 3);
  const auto again = run({"sample", "--type", "mmee", "--seed", "5", "--count", "3"});
  CHECK(again.out == r.out);
  const auto v = run({"verify"}, j["sets"][1].dump());
  CHECK(v.code == 0);

  const auto bad = run({"sample", "--type", "pppe", "--seed", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.e()["error"] == "UnknownType");
  CHECK(bad.e()["message"].get<std::string>().find("cannot exist") != std::string::npos);
}

TEST_CASE("mix") {
  const auto c = run({"construct", "--type", "pe", "--params", R"({"a":0.70710678118654757,"b":0.5,"c":0.5})"});
  REQUIRE(c.code == 0);
  const auto m = run({"mix", "--weights", "[0.3,0.7]", "--reduce", "a"}, c.out);
  REQUIRE(m.code == 0);
  const json j = m.j();
  CHECK(j["rho"].size() == 4);
  CHECK(std::abs(j["reduced"][0][0][0].get<double>() - 0.65) <= 1e-12);
  CHECK(std::abs(j["reduced"][0][1][0].get<double>() - 0.7 / (2 * kS2)) <= 1e-12);
  CHECK(std::abs(j["eigenvalues"][3].get<double>() - 0.7) <= 1e-12);

  const auto bad = run({"mix", "--weights", "[0.5,0.6]"}, c.out);
  CHECK(bad.code == 1);
  CHECK(bad.e()["error"] == "BadWeights");
}

TEST_CASE("domain errors") {
  auto r = run({"construct", "--type", "pmee", "--params", R"({"c":0.9})"});
  CHECK(r.code == 1);
  CHECK(r.e()["error"] == "COutOfRange");
  r = run({"construct", "--type", "ee", "--variant", "diagonal", "--params",
           R"({"gamma":0.5,"a":0.5,"b":[0,0.5],"c":0.5})"});
  CHECK(r.code == 1);
  CHECK(r.e()["error"] == "ConditionViolated");
  CHECK(r.e()["detail"] == "diagonal");
  r = run({"decompose", "--state", "[0,0,0,0]"});
  CHECK(r.code == 1);
  CHECK(r.e()["error"] == "ZeroVector");
}

TEST_CASE("usage errors name the flag") {
  auto r = run({});
  CHECK(r.code == 2);
  r = run({"decompose"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--state") != std::string::npos);
  r = run({"decompose", "--state", "[1,2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--state") != std::string::npos);
  r = run({"construct", "--type", "qq"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--type") != std::string::npos);
  r = run({"construct", "--type", "ppe", "--params", R"({"c":1,"d":1})"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--case") != std::string::npos);
  r = run({"construct", "--type", "pe", "--params", R"({"a":1})"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--params") != std::string::npos);
  r = run({"construct", "--type", "ppe", "--case", "7"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--case") != std::string::npos);
  r = run({"mix", "--weights", "0.5"}, "[[1,0,0,0]]");
  CHECK(r.code == 2);
  CHECK(r.err.find("--weights") != std::string::npos);
  r = run({"verify"}, "");
  CHECK(r.code == 2);
  r = run({"sample", "--type", "pp", "--variant", "diagonal"});
  CHECK(r.code != 0);
}

TEST_CASE("tol overrides classification") {
  const std::string set = R"([[0.99999999,0,0,0.000141421356]])";
  auto r = run({"classify", "--set", set});
  CHECK(r.j()["pattern"] == "E");
  r = run({"classify", "--tol", "1e-3", "--set", set});
  CHECK(r.j()["pattern"] == "P");
}

}
