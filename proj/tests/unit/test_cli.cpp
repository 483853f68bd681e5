#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "plint/cli.hpp"
#include "plint/json_io.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = plint::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("eval emits closed form and value") {
  const Result r = run({"eval", "--family", "A", "--m", "2", "--n", "1", "--x", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["spec"]["family"] == "A");
  CHECK(j["spec"]["params"] == json::array({2, 1}));
  CHECK(j["spec"]["x"] == "1");
  CHECK(j["symbolic"] == "2*z3");
  CHECK(j["value"].get<std::string>().rfind("2.4041138063", 0) == 0);
  CHECK(j["closed_form"].dump() == R"({"terms":[{"coeff":"2/1","factors":[{"kind":"Zeta","args":[3],"exp":1}]}]})");
  CHECK(plint::parse_closed_form(j["closed_form"].dump()) == plint::scale(plint::zeta(3), 2));
}

TEST_CASE("eval text format") {
  const Result r = run({"eval", "--family", "J0", "--m", "0", "--p", "2", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("z2 - 1") != std::string::npos);
  CHECK(r.out.find("0.6449340668") != std::string::npos);
}

TEST_CASE("eval at a decimal point keeps it exact") {
  const Result r = run({"eval", "--family", "A", "--m", "2", "--n", "1", "--x", "0.75"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["spec"]["x"] == "3/4");
}

TEST_CASE("eval covers every family") {
  const std::vector<std::vector<std::string>> cases = {
      {"--family", "B", "--m", "1", "--n", "1"},          {"--family", "C", "--m", "2", "--n", "2", "--x", "0.5"},
      {"--family", "J1", "--m", "1", "--p", "1"},         {"--family", "J", "--m", "-2", "--p", "1", "--q", "1"},
      {"--family", "K", "--r", "1", "--p", "0", "--q", "1"}, {"--family", "L", "--n", "1", "--m", "1"},
      {"--family", "M", "--n", "0", "--m", "1", "--x", "0"}, {"--family", "HeadLog1m", "--n", "1", "--m", "2"},
      {"--family", "S", "--p", "1", "--q", "2"},          {"--family", "Kbase", "--m", "1", "--q", "2"},
  };
  for (auto args : cases) {
    args.insert(args.begin(), "eval");
    CAPTURE(args[2]);
    CHECK(run(args).code == 0);
  }
  CHECK(json::parse(run({"eval", "--family", "J", "--m", "-2", "--p", "1", "--q", "1"}).out)["symbolic"] == "2*z2");
  CHECK(json::parse(run({"eval", "--family", "K", "--r", "1", "--p", "0", "--q", "1"}).out)["symbolic"] == "-z3");
  CHECK(json::parse(run({"eval", "--family", "Kbase", "--m", "1", "--q", "2"}).out)["symbolic"] == "z4 - S(2,2)");
}

TEST_CASE("eval failures map to exit codes") {
  CHECK(run({"eval", "--family", "A", "--m", "1", "--n", "2"}).code == 2);
  CHECK(run({"eval", "--family", "A", "--m", "2"}).code == 2);
  CHECK(run({"eval", "--family", "J", "--m", "-1", "--p", "1", "--q", "1"}).code == 2);
  CHECK(run({"eval", "--family", "A", "--m", "2", "--n", "1", "--x", "0"}).code == 2);
  CHECK(run({"eval", "--family", "K", "--r", "1", "--p", "1", "--q", "1", "--x", "0.5"}).code == 2);
  CHECK(run({"eval", "--family", "A", "--m", "x", "--n", "1"}).code == 2);
  const Result div = run({"eval", "--family", "J1", "--m", "0", "--p", "0"});
  CHECK(div.code == 3);
  CHECK(lines(div.err) == 1);
  CHECK(div.out.empty());
}

TEST_CASE("digits from flag, environment, default") {
  const auto value = [](const Result& r) { return json::parse(r.out)["value"].get<std::string>(); };
  const std::vector<std::string> base = {"eval", "--family", "A", "--m", "2", "--n", "1"};
  CHECK(value(run(base)) == "2.40411380631918857079947632302");
  ::setenv("PLINT_DIGITS", "16", 1);
  CHECK(value(run(base)) == "2.404113806319189");
  auto with_flag = base;
  with_flag.insert(with_flag.end(), {"--digits", "20"});
  CHECK(value(run(with_flag)) == "2.4041138063191885708");
  ::setenv("PLINT_DIGITS", "nonsense", 1);
  CHECK(run(base).code == 2);
  ::unsetenv("PLINT_DIGITS");
  CHECK(value(run(base)) == "2.40411380631918857079947632302");
}

TEST_CASE("verify identities") {
  const Result r = run({"verify", "--suite", "identities"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.size() == 42);
  CHECK(r.err.find("42/42") != std::string::npos);
  for (const auto& rec : j) CHECK(rec["pass"] == true);
}

TEST_CASE("verify small oracle grid, serial and parallel agree") {
  const Result serial = run({"verify", "--suite", "oracle", "--grid", "small"});
  const Result parallel = run({"verify", "--suite", "oracle", "--grid", "small", "--jobs", "4"});
  CHECK(serial.code == 0);
  CHECK(serial.out == parallel.out);
  const json j = json::parse(serial.out);
  REQUIRE(j.size() > 0);
  const auto& rec = j.front();
  for (const char* key : {"spec", "symbolic", "value", "oracle", "abs_err", "rel_err", "pass"}) CHECK(rec.contains(key));
}

TEST_CASE("verify reports failures with exit 1") {
  const Result r = run({"verify", "--suite", "euler", "--tol", "1e-40"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out).size() == 19);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("tables") {
  const Result j0 = run({"table", "--family", "J0", "--max-m", "3", "--max-p", "3"});
  CHECK(j0.code == 0);
  CHECK(lines(j0.out) == 12);
  CHECK(j0.out.find("z2 - 1") != std::string::npos);

  const Result kb = run({"table", "--family", "Kbase", "--max-m", "3", "--max-q", "3", "--format", "csv"});
  CHECK(kb.code == 0);
  CHECK(kb.out.rfind("family,params,x,symbolic,value\n", 0) == 0);
  CHECK(lines(kb.out) == 10);
  CHECK(kb.out.find("S(2,2)") != std::string::npos);

  const Result s = run({"table", "--family", "S", "--max-weight", "9", "--format", "json"});
  CHECK(s.code == 0);
  const json rows = json::parse(s.out);
  CHECK(rows.size() == 1 + 3 + 5 + 7);
  for (const auto& row : rows) {
    const int w = row["spec"]["params"][0].get<int>() + row["spec"]["params"][1].get<int>();
    CHECK(w % 2 == 1);
    CHECK(row["symbolic"].get<std::string>().find("S(") == std::string::npos);
  }

  CHECK(run({"table", "--family", "J0", "--max-m", "-1"}).code == 2);
  CHECK(run({"table", "--family", "Q"}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"table", "--family", "K", "--max-m", "2", "--max-p", "2", "--max-q", "2"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
}
