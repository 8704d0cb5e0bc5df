#include <doctest.h>

#include <sstream>

#include "frobalg/cli.hpp"

using frobalg::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "frobalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = frobalg::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  Run r = run(args);
  CHECK(r.code == expected_code);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("command examples") {
  Run fedder = run({"fedder", "--ring", "F_2[x,y,z]/(x^2 + y*z^2)"});
  CHECK(fedder.code == 0);
  CHECK(fedder.out.find("not F-pure") != std::string::npos);

  Json closure = run_json({"closure", "--ring", "F_3[x,y,z]/(x^3 - y*z^3)", "--ideal", "(z)", "--emax", "3"});
  auto gens = closure["result"]["closure"];
  CHECK(std::find(gens.begin(), gens.end(), "x") != gens.end());

  Json sd = run_json({"sdepth", "--ring", "F_2[x,y,z]", "--ideal", "(x*y, x*z)", "--emax", "3"});
  CHECK(sd["result"]["per_e_depth"] == Json::array({1, 1, 1, 1}));
  CHECK(sd["result"]["stabilized_value"] == 1);
}

TEST_CASE("structured output fields and defaults") {
  Json r = run_json({"frobpow", "--ring", "F_2[x,y]", "--ideal", "(x, y)", "--e", "2"});
  std::vector<std::string> keys;
  for (const auto& [k, _] : r.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "result", "budget_used", "unresolved_reasons"});
  CHECK(r["result"]["ideal"] == Json::array({"x^4", "y^4"}));
  const Json& in = r["inputs"];
  CHECK(in["e_max"] == 4);
  CHECK(in["window"] == 2);
  CHECK(in["lift_cap"] == 6);
  CHECK(in["budget"] == 1000000);
  CHECK(in["seed"] == 0);
}

TEST_CASE("every command runs") {
  const std::string r2 = "F_2[x,y]", r3 = "F_2[x,y,z]";
  std::vector<std::vector<std::string>> cases = {
      {"gb", "--ring", r2, "--ideal", "(x^2 + y, x*y)", "--order", "lex"},
      {"colon", "--ring", r2, "--ideal", "(x^2, x*y)", "--by", "(x)"},
      {"frobpow", "--ring", r2, "--ideal", "(x + y)"},
      {"frobpre", "--ring", r2, "--ideal", "(x, y^4)"},
      {"closure", "--ring", r2, "--ideal", "(x^2, x*y)", "--emax", "2"},
      {"closed", "--ring", r2, "--ideal", "(x^2, y^2)"},
      {"fedder", "--ring", "F_3[x,y]/(x*y)"},
      {"fseq-verify", "--ring", r2, "--fseq", "powers:(x, y)"},
      {"fseq-radical", "--ring", r2, "--fseq", "constant:(x)"},
      {"ass", "--ring", r3, "--ideal", "(x*y, x*z)"},
      {"ass-union", "--ring", r2, "--fseq", "(x, y^q)"},
      {"depth", "--ring", r3, "--ideal", "(x*y, x*z)"},
      {"sdepth", "--ring", r2, "--matrix", "[[x, y]]", "--emax", "2"},
      {"reg-check", "--ring", r3, "--ideal", "(x*y, x*z)", "--seq", "(x + y + z)", "--emax", "3"},
      {"cdepth-lb", "--ring", r3, "--ideal", "(x*y, x*z)", "--emax", "2"},
      {"kdepth-profile", "--ring", r3, "--ideal", "(x*y, x*z)", "--emax", "2"},
      {"gamma", "--ring", r2, "--root-ideal", "(root(2, x), y)", "--last", "3"},
      {"member-inf", "--ring", "F_3[x,y,z]/(x^3 - y*z^3)", "--ideal", "(z)", "--poly", "x"},
      {"prime-check", "--ring", r2, "--ideal", "(x)"},
      {"max-ass", "--ring", r2, "--ideal", "(x^2, x*y)"},
  };
  for (const auto& c : cases) {
    Json r = run_json(c);
    CHECK_MESSAGE(r["unresolved_reasons"].empty(), c[0]);
    CHECK_MESSAGE(!r["result"].contains("error"), c[0]);
  }
  Json colon = run_json(cases[1]);
  CHECK(colon["result"]["colon"].size() == 2);
  Json member = run_json(cases[17]);
  CHECK(member["result"]["verdict"] == "true");
  Json gamma = run_json(cases[16]);
  // x^{2/8} = x^{1/4} is the least power of x^{1/8} in the ideal
  CHECK(gamma["result"]["prefix"][3] == Json::array({"x^2", "y^8"}));
  CHECK(gamma["result"]["prefix"][2] == Json::array({"x", "y^4"}));
  Json root_member = run_json({"member-inf", "--ring", r2, "--root-ideal", "(root(2, x), y)", "--poly", "root(3, x)"});
  CHECK(root_member["result"]["verdict"] == "false");
}

TEST_CASE("fseq template substitutes q = p^e") {
  Json r = run_json({"fseq-verify", "--ring", "F_3[x,y]", "--fseq", "(x, y^q)", "--last", "2"});
  CHECK(r["result"]["prefix"][2] == Json::array({"x", "y^9"}));
  CHECK(r["result"]["ok"] == true);
  Json bad = run_json({"fseq-verify", "--ring", "F_2[x,y]", "--fseq", "list:(x); (x^3)"});
  CHECK(bad["result"]["ok"] == false);
  CHECK(bad["result"]["first_failure"] == 0);
  run_json({"fseq-verify", "--ring", "F_2[x,q]", "--fseq", "(x, q)"}, 2);
}

TEST_CASE("exit codes") {
  CHECK(run({"gb", "--ring", "F_4[x]", "--ideal", "(x)"}).code == 2);
  CHECK(run({"gb", "--ring", "F_2[x]", "--ideal", "(x +)"}).code == 2);
  CHECK(run({"gb", "--ring", "F_2[x]", "--ideal", "(y)"}).code == 2);
  CHECK(run({"gb", "--ring", "F_2[x]", "--unknown", "1"}).code == 2);
  CHECK(run({"nonsense", "--ring", "F_2[x]"}).code == 2);
  CHECK(run({"ass", "--ring", "F_2[x,y]", "--ideal", "(x + y)"}).code == 2);
  CHECK(run({"verify", "no-such-suite"}).code == 2);
  Json over = run_json({"gb", "--ring", "F_7[x,y,z]", "--ideal",
                        "(x^3*y + y^2*z^2 + 3*z, x*y^3 + x^2*z^2 + y, x^2*y^2 + x*z^3 + 2*x*y + z^2)", "--budget", "50"},
                       3);
  CHECK(over["result"].contains("error"));
  CHECK(over["budget_used"].get<std::uint64_t>() >= 50);
}

TEST_CASE("unresolved outcomes are reported") {
  Json r = run_json({"closed", "--ring", "F_2[x]", "--ideal", "(x)", "--emax", "0"});
  CHECK(r["result"]["verdict"] == "unresolved");
  CHECK(r["unresolved_reasons"].size() == 1);
  Run text = run({"closed", "--ring", "F_2[x]", "--ideal", "(x)", "--emax", "0"});
  CHECK(text.out.find("unresolved:") != std::string::npos);
}

TEST_CASE("verify suites and determinism") {
  Json worked = run_json({"verify", "examples"});
  CHECK(run_json({"verify", "paper-examples"})["result"]["summary"] == worked["result"]["summary"]);
  CHECK(worked["result"]["summary"]["fail"] == 0);
  CHECK(worked["result"]["summary"]["total"] ==
        worked["result"]["summary"]["pass"].get<int>() + worked["result"]["summary"]["unresolved"].get<int>());
  Json oracles = run_json({"verify", "oracles", "--seed", "7", "--count", "20", "--jobs", "4"});
  CHECK(oracles["result"]["summary"]["total"] == 20);
  CHECK(oracles["result"]["summary"]["fail"] == 0);
  Json inv = run_json({"verify", "invariants-random", "--count", "10", "--jobs", "3"});
  CHECK(inv["result"]["summary"]["fail"] == 0);

  auto a = run({"verify", "invariants-random", "--count", "6", "--seed", "3", "--format", "json"});
  auto b = run({"verify", "invariants-random", "--count", "6", "--seed", "3", "--format", "json"});
  CHECK(a.out == b.out);
  auto c = run({"sdepth", "--ring", "F_3[x,y]", "--ideal", "(x^2, x*y)", "--format", "json"});
  auto d = run({"sdepth", "--ring", "F_3[x,y]", "--ideal", "(x^2, x*y)", "--format", "json"});
  CHECK(c.out == d.out);
}
