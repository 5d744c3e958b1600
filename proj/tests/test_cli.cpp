#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "nsg/cli.hpp"
#include "nsg/error.hpp"
#include "nsg/ordinary.hpp"

using nlohmann::json;
using nsg::NumericalSemigroup;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nsg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  const auto r = run(std::move(args));
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return json::parse(r.out);
}

bool ascii(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 128; });
}

}  // namespace

TEST_CASE("semigroup grammar") {
  using nsg::cli::parse_semigroup;
  CHECK(parse_semigroup("5,6,7") == NumericalSemigroup::from_generators({5, 6, 7}));
  CHECK(parse_semigroup(" 5, 6 ,7 ") == NumericalSemigroup::from_generators({5, 6, 7}));
  CHECK(parse_semigroup("gaps:1,2,3") == nsg::H(4));
  CHECK(parse_semigroup("gaps:").is_naturals());
  CHECK(parse_semigroup("H:28") == nsg::H(28));
  CHECK(parse_semigroup("T:20") == nsg::T_irr(20));
  CHECK(parse_semigroup("I:20") == nsg::I_irr(20));
  for (const char* bad : {"", "5,,6", "x:3", "H:", "5,a", "gaps:2", "2,4", "-3,5"}) {
    CHECK_THROWS_AS(parse_semigroup(bad), nsg::Error);
  }
}

TEST_CASE("report shape") {
  const auto j = run_json({"info", "5,11,13,19"});
  CHECK(j["schema_version"] == nsg::cli::kSchemaVersion);
  CHECK(j["command"] == "info");
  for (const char* key : {"input", "result", "stats"}) CHECK(j.contains(key));
  CHECK_FALSE(j["stats"].contains("elapsed_seconds"));
  const auto& s = j["result"]["semigroup"];
  for (const char* key : {"multiplicity", "apery", "generators", "gaps", "frobenius", "genus"}) CHECK(s.contains(key));
  CHECK(s["apery"] == json::array({0, 11, 22, 13, 19}));
  CHECK(j["result"]["special_gaps"] == json::array({8, 14, 17}));
  CHECK(j["result"]["kind"] == "reducible");

  const auto h4 = run_json({"info", "gaps:1,2,3"});
  CHECK(h4["result"]["semigroup"]["multiplicity"] == 4);
  CHECK(h4["result"]["kind"] == "reducible");

  const auto timed = run_json({"info", "2,3", "--timing"});
  CHECK(timed["stats"].contains("elapsed_seconds"));
}

TEST_CASE("lengths command") {
  const auto j = run_json({"lengths", "5,21,22,33,34"});
  CHECK(j["result"]["lengths"] == json::array({2, 3, 4}));
  CHECK(j["result"]["witnesses"].size() == 3);
  CHECK(j["result"]["witnesses"]["2"].size() == 2);
  CHECK(j["result"]["witnesses"]["2"][0].is_array());
  CHECK(run_json({"lengths", "7,15,26,27,31,32"})["result"]["lengths"] == json::array({5}));
  CHECK(run_json({"lengths", "2,3"})["result"]["lengths"] == json::array({1}));
}

TEST_CASE("decompose and ordinary commands") {
  const auto check = run_json({"decompose", "H:28", "I:27", "I:26", "7,11,12,17", "9,10,13,16,17,21"});
  CHECK(check["result"]["verdict"] == "valid_irredundant");
  CHECK(check["result"]["length"] == 4);
  const auto bad = run_json({"decompose", "H:4", "2,5"});
  CHECK(bad["result"]["verdict"] == "invalid");
  CHECK(run_json({"decompose", "H:8"})["result"]["minimum_length"] == 3);

  const auto all = run_json({"ordinary", "28", "--all"});
  CHECK(all["result"]["lengths"] == json::array({5, 6, 7, 8, 9, 10, 11, 12, 13, 14}));
  CHECK(all["result"]["matches_interval"] == true);
  const auto ell = run_json({"ordinary", "28", "--ell", "0"});
  CHECK(ell["result"]["components"].size() == 5);
  CHECK(run_json({"ordinary", "28", "--min"})["result"]["minimum_length"] == 4);
}

TEST_CASE("check and verify-paper commands") {
  const auto interval = run_json({"check", "6", "18", "--interval", "--threads", "2"});
  CHECK(interval["result"]["counterexamples"].empty());
  CHECK(interval["stats"]["threads"] == 2);
  const auto bound = run_json({"check", "4", "12", "--msbound"});
  CHECK(bound["result"]["max_mset_size"] == 2);
  const auto verify = run_json({"verify-paper", "example-3.6"});
  CHECK(verify["result"]["passed"] == 6);
  CHECK(verify["result"]["failed"] == 0);
  const auto table = run_json({"verify-paper", "example-4.2"});
  CHECK(table["result"]["failed"] == 0);
  CHECK(table["result"]["passed"] == 10);
}

TEST_CASE("exit codes") {
  CHECK(run({"info", "5,6,7"}).code == nsg::cli::kOk);
  CHECK(run({}).code == nsg::cli::kUsage);
  CHECK(run({"frobnicate"}).code == nsg::cli::kUsage);
  CHECK(run({"info", "2,4"}).code == nsg::cli::kUsage);
  CHECK(run({"info", "5,,6"}).code == nsg::cli::kUsage);
  CHECK(run({"ordinary", "28", "--ell", "99"}).code == nsg::cli::kUsage);
  CHECK(run({"ordinary", "28", "--ell", "1", "--min"}).code == nsg::cli::kUsage);
  CHECK(run({"check", "6", "18"}).code == nsg::cli::kUsage);
  CHECK(run({"verify-paper", "no-such-table"}).code == nsg::cli::kUsage);
  CHECK(run({"lengths", "H:12", "--budget", "10"}).code == nsg::cli::kBudget);

  const auto err = run_json({"info", "2,4"}, nsg::cli::kUsage);
  CHECK(err["error"]["kind"] == "NotCofinite");
  const auto budget = run_json({"lengths", "H:12", "--budget", "10"}, nsg::cli::kBudget);
  CHECK(budget["error"]["kind"] == "BudgetExceeded");
  CHECK_FALSE(budget.contains("stats"));
}

TEST_CASE("budget precedence") {
  setenv("NSG_BUDGET", "10", 1);
  CHECK(run({"lengths", "H:12"}).code == nsg::cli::kBudget);
  CHECK(run({"lengths", "H:12", "--budget", "5000000"}).code == nsg::cli::kOk);
  setenv("NSG_BUDGET", "junk", 1);
  CHECK(run({"info", "2,3"}).code == nsg::cli::kUsage);
  unsetenv("NSG_BUDGET");
  CHECK(run_json({"info", "2,3"})["stats"]["budget_limit"] == 5000000);
}

TEST_CASE("output is deterministic ASCII") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"lengths", "6,16,14,19,21,23"},
                                                                {"check", "5", "16", "--interval", "--threads", "4"},
                                                                {"ordinary", "20", "--ell", "3"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(ascii(a.out));
    auto with_json = args;
    with_json.push_back("--json");
    const auto c = run(with_json);
    const auto d = run(with_json);
    CHECK(c.out == d.out);
    CHECK(ascii(c.out));
    CHECK(json::parse(c.out).dump(2) + "\n" == c.out);
  }
}

TEST_CASE("plain rendering") {
  const auto r = run({"info", "5,6,7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("frobenius: 9") != std::string::npos);
  CHECK(ascii(r.out));
}
