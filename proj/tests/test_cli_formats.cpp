#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "ldlmdp/automata.hpp"
#include "ldlmdp/compile.hpp"
#include "ldlmdp/domain.hpp"
#include "ldlmdp/parser.hpp"
#include "ldlmdp/rewrite.hpp"

using namespace ldlmdp;

namespace {

const char* kDomainJson = R"({
  "props": ["g"],
  "actions": ["go", "stay"],
  "initial": [],
  "transitions": [
    {"from": [], "action": "go", "to": ["g"], "p": 1.0},
    {"from": [], "action": "stay", "to": [], "p": 1.0},
    {"from": ["g"], "action": "go", "to": ["g"], "p": 1.0},
    {"from": ["g"], "action": "stay", "to": ["g"], "p": 1.0}
  ]
})";

const char* kRewardsJson = R"({
  "discount": 0.9,
  "mode": "prefix",
  "rewards": [{"formula": "F g", "value": 1.0}]
})";

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/ldlmdp_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

#ifdef LDLMDP_CLI_PATH
int run_cli(const std::string& args, std::string* output = nullptr) {
  std::string cmd = std::string(LDLMDP_CLI_PATH) + " " + args;
  if (output) {
    cmd += " > /tmp/ldlmdp_cli_out.txt 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in("/tmp/ldlmdp_cli_out.txt");
    std::string line, all;
    while (std::getline(in, line)) all += line + "\n";
    *output = all;
    return WEXITSTATUS(rc);
  }
  cmd += " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}
#endif

}  // namespace

TEST_CASE("domain file parsing") {
  DomainModel d = domain_from_json_text(kDomainJson);
  CHECK(d.props.props == std::vector<std::string>{"g"});
  CHECK(d.states.size() == 2);
  CHECK(d.actions.size() == 2);
  d.validate(RewardMode::PerPrefix);

  SUBCASE("bad mass is rejected") {
    std::string broken = kDomainJson;
    broken.replace(broken.find("\"p\": 1.0"), 8, "\"p\": 0.5");
    DomainModel bad = domain_from_json_text(broken);
    CHECK_THROWS(bad.validate(RewardMode::PerPrefix));
  }
  SUBCASE("undeclared prop is rejected") {
    std::string broken = kDomainJson;
    broken.replace(broken.find("[\"g\"],"), 6, "[\"z\"],");
    CHECK_THROWS(domain_from_json_text(broken));
  }
}

TEST_CASE("reward spec parsing") {
  RewardSpec s = reward_spec_from_json_text(kRewardsJson);
  CHECK(s.discount == doctest::Approx(0.9));
  CHECK(s.mode == RewardMode::PerPrefix);
  REQUIRE(s.pairs.size() == 1);
  CHECK(s.pairs[0].value == doctest::Approx(1.0));
  CHECK(s.pairs[0].formula == parse_formula("F g"));

  CHECK_THROWS(reward_spec_from_json_text(
      R"({"discount": 1.5, "rewards": []})"));
  CHECK_THROWS(reward_spec_from_json_text(
      R"({"mode": "sometimes", "rewards": []})"));
}

TEST_CASE("automaton JSON dump shape") {
  Alphabet a = make_alphabet({"g"});
  Dfa dfa = formula_to_min_dfa(expand_sugar(parse_formula("F g")), a);
  std::string dump = to_json(dfa);
  CHECK(dump.find("\"alphabet\"") != std::string::npos);
  CHECK(dump.find("\"states\"") != std::string::npos);
  CHECK(dump.find("\"initial\"") != std::string::npos);
  CHECK(dump.find("\"finals\"") != std::string::npos);
  CHECK(dump.find("\"transitions\"") != std::string::npos);
}

#ifdef LDLMDP_CLI_PATH

TEST_CASE("cli compile with oracle check") {
  std::string out;
  int rc = run_cli("compile \"F a\" --props a --check-oracle 4", &out);
  CHECK(rc == 0);
  CHECK(out.find("oracle: PASS (31 traces)") != std::string::npos);

  rc = run_cli("compile tt --props a", &out);
  CHECK(rc == 0);
  CHECK(out.find("min dfa states: 1") != std::string::npos);

  rc = run_cli("compile \"<(true; true)*> end\" --props a", &out);
  CHECK(rc == 0);
  CHECK(out.find("min dfa states: 2") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("compile \"a &&\" --props a") == 2);     // parse error
  CHECK(run_cli("bogus-subcommand") == 1);               // usage
  CHECK(run_cli("check \"F a\" --equiv \"G a\" --props a") == 3);
  CHECK(run_cli("check \"F a\" --equiv \"true U a\" --props a") == 0);
  CHECK(run_cli("compile tt --props "
                "p0,p1,p2,p3,p4,p5,p6,p7,p8,p9,p10,p11,p12") == 4);
}

TEST_CASE("cli solve and simulate") {
  std::string domain = write_temp("dom.json", kDomainJson);
  std::string rewards = write_temp("rew.json", kRewardsJson);
  std::string out;
  int rc = run_cli("solve --domain " + domain + " --rewards " + rewards +
                       " --json",
                   &out);
  CHECK(rc == 0);
  CHECK(out.find("\"initial_value\"") != std::string::npos);
  CHECK(out.find("\"initial_action\": \"go\"") != std::string::npos);

  rc = run_cli("simulate --domain " + domain + " --rewards " + rewards +
                   " --episodes 50 --horizon 50 --seed 7 --json",
               &out);
  CHECK(rc == 0);
  CHECK(out.find("\"mean\"") != std::string::npos);

  rc = run_cli("monitor --domain " + domain + " --rewards " + rewards, &out);
  CHECK(rc == 0);
  CHECK(out.find("temp_false") != std::string::npos);
}

#endif  // LDLMDP_CLI_PATH
