#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "qtor/json_io.hpp"
#include "qtor_cli/cli.hpp"

using namespace qtor;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kA3 = {"--type", "A", "--rank", "3", "--orientation", "2>1,2>3", "--anchor", "2,0"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST_CASE("Help and usage errors") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"info", "--help"}).code == 0);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"info", "--type", "B", "--rank", "3"}).code == 2);
  CHECK(call({"info", "--type", "D", "--rank", "3"}).code == 2);
  CHECK(call({"info", "--type", "A", "--rank", "3", "--orientation", "1>3,2>3"}).code == 2);
  CHECK(call({"info", "--type", "A", "--rank", "3", "--format", "xml"}).code == 2);
  CHECK(call({"info", "--type", "A", "--rank", "3", "--anchor", "2"}).code == 2);
  CHECK(call({"ctilde", "--type", "A", "--rank", "3", "1", "9", "4"}).code == 2);
}

TEST_CASE("info") {
  auto r = call(with({"info"}, kA3));
  CHECK(r.code == 0);
  CHECK(r.out.find("A3") != std::string::npos);
  auto j = json::parse(call(with({"info", "--format", "json"}, kA3)).out);
  CHECK(j["N"] == 6);
  CHECK(j["h"] == 4);
  CHECK(j["vertices"][1]["xi"] == 0);
  CHECK(j["positions"].size() == 12);
  CHECK(j["word"][0] == 2);
}

TEST_CASE("ctilde rows") {
  auto r = call({"ctilde", "--type", "A", "--rank", "3", "1", "1", "16", "--format", "json"});
  REQUIRE(r.code == 0);
  auto rows = json::parse(r.out);
  REQUIRE(rows.size() == 16);
  std::vector<int> want(17, 0);
  want[1] = 1;
  want[7] = -1;
  want[9] = 1;
  want[15] = -1;
  for (const auto& row : rows) {
    CHECK(row["i"] == 1);
    CHECK(row["j"] == 1);
    CHECK(row["value"] == want[row["m"].get<int>()]);
  }
  auto t = call({"ctilde", "--type", "A", "--rank", "3", "1", "3", "3"});
  CHECK(t.out == "1 3 1 0\n1 3 2 0\n1 3 3 1\n");
}

TEST_CASE("dtilde commands") {
  auto y = call(with({"dtilde-y", "2", "0"}, kA3));
  CHECK(y.code == 0);
  CHECK(y.out == "D~(Y[2,0]) = 1/a2\n");
  auto kr = call(with({"dtilde-kr", "2", "-2", "2"}, kA3));
  CHECK(kr.code == 0);
  CHECK(kr.out.find("1/(a2*(a1+a2)*(a2+a3)*(a1+a2+a3))") != std::string::npos);
  auto bad = call(with({"dtilde-kr", "2", "0", "2"}, kA3));
  CHECK(bad.code == 2);
  CHECK(bad.err.find("top") != std::string::npos);
  CHECK(call(with({"dtilde-y", "2", "-1"}, kA3)).code == 2);
  auto m = call(with({"dtilde-monomial", "Y[2,0]*Y[2,-2]", "--format", "json"}, kA3));
  REQUIRE(m.code == 0);
  auto j = json::parse(m.out);
  auto F = Field::of(DynkinDatum::make(Family::A, 3));
  auto v = rr_from_json(j["value"], F);
  CHECK(v.to_string() == j["text"].get<std::string>());
  CHECK(call(with({"dtilde-monomial", "Y[2,0"}, kA3)).code == 2);
  CHECK(call(with({"dtilde-monomial", "1"}, kA3)).out == "D~(1) = 1\n");
}

TEST_CASE("dbar commands") {
  auto c = call({"dbar-cuspidal", "--type", "A", "--rank", "3", "--beta", "0,1,1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("1/(a2*(a2+a3))") != std::string::npos);
  auto via = call({"dbar-cuspidal", "--type", "D", "--rank", "4", "--beta", "1,2,1,1", "--via-pair"});
  auto closed = call({"dbar-cuspidal", "--type", "D", "--rank", "4", "--beta", "1,2,1,1"});
  CHECK(via.code == 0);
  CHECK(via.out == closed.out);
  auto e6 = call({"dbar-cuspidal", "--type", "E", "--rank", "6", "--beta", "1,2,3,2,2,1", "--format", "json"});
  CHECK(e6.code == 0);
  CHECK(json::parse(e6.out).contains("applicable"));
  CHECK(call({"dbar-cuspidal", "--type", "A", "--rank", "3", "--beta", "1,0,1"}).code == 2);
  CHECK(call({"dbar-cuspidal", "--type", "A", "--rank", "3", "--beta", "1,0"}).code == 2);

  auto fl = call({"dbar-flag", "--type", "A", "--rank", "2", "--word", "1,2,1"});
  CHECK(fl.code == 0);
  CHECK(fl.out == "word 1,2,1\nP_1 = a1\nP_2 = a1*(a1+a2)\nP_3 = a2*(a1+a2)\n");
  CHECK(call({"dbar-flag", "--type", "A", "--rank", "2", "--word", "1,1,2"}).code == 2);

  std::string path = "qtor_cli_weights_test.json";
  {
    std::ofstream o(path);
    o << R"([{"word":[1,2],"dim":1},{"word":[2,1],"dim":1}])";
  }
  auto w = call({"dbar-weights", "--type", "A", "--rank", "2", "--file", path});
  CHECK(w.code == 0);
  CHECK(w.out == "D-bar(weights) = 1/(a1*a2)\n");
  {
    std::ofstream o(path);
    o << R"([{"word":[1,2],"dim":1},{"word":[1,1],"dim":1}])";
  }
  CHECK(call({"dbar-weights", "--type", "A", "--rank", "2", "--file", path}).code == 2);
  {
    std::ofstream o(path);
    o << "{not json";
  }
  CHECK(call({"dbar-weights", "--type", "A", "--rank", "2", "--file", path}).code == 2);
  std::remove(path.c_str());
  CHECK(call({"dbar-weights", "--type", "A", "--rank", "2", "--file", "/nonexistent/w.json"}).code == 2);
}

TEST_CASE("mutate and seed") {
  auto r = call(with({"mutate", "--window", "12", "--quotient", "--seq", "4", "--format", "json"}, kA3));
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["window"] == 12);
  CHECK(j["values"][3]["vertex"] == 4);
  CHECK(j["values"][3]["text"] == "(a1+2*a2+a3)/(a1*a2*a3*(a1+a2+a3))");
  CHECK(j["values"][11]["frozen"] == true);
  CHECK(call(with({"mutate", "--quotient", "--seq", "10"}, kA3)).code == 2);
  CHECK(call(with({"mutate", "--seq", "x"}, kA3)).code == 2);
  auto s = call(with({"seed", "--print"}, kA3));
  CHECK(s.code == 0);
  CHECK(s.out.find("7 -> 4") != std::string::npos);
  CHECK(s.out.find("4 -> 1") != std::string::npos);
  auto sj = json::parse(call(with({"seed", "--window", "1", "--format", "json"}, kA3)).out);
  CHECK(sj["arrows"].empty());
}

TEST_CASE("verify") {
  auto r = call(with({"verify", "--suite", "a3-nodes"}, kA3));
  CHECK(r.code == 0);
  CHECK(r.out.find("a3-nodes: PASS") != std::string::npos);
  CHECK(call(with({"verify"}, kA3)).code == 0);
  CHECK(call({"verify", "--type", "D", "--rank", "4"}).code == 0);
  CHECK(call({"verify", "--type", "A", "--rank", "3", "--suite", "a3-nodes"}).code == 2);  // wrong frame
  CHECK(call(with({"verify", "--suite", "nope"}, kA3)).code == 2);
  auto j = json::parse(call({"verify", "--type", "A", "--rank", "4", "--suite", "properties", "--format", "json"}).out);
  CHECK(j["ok"] == true);
  CHECK(j["results"][0]["suite"] == "properties");
}

TEST_CASE("RunConfig render and parse round trip") {
  std::mt19937 rng(73);
  const std::vector<std::string> fams = {"A", "D", "E"};
  const std::vector<std::string> orients = {"", "2>1,2>3", "1>2,3>2"};
  for (int k = 0; k < 50; ++k) {
    cli::RunConfig c;
    c.family = fams[rng() % 3];
    c.rank = 1 + static_cast<int>(rng() % 8);
    c.orientation = orients[rng() % 3];
    if (rng() % 2) c.anchor = std::make_pair(1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 11) - 5);
    c.window = static_cast<int>(rng() % 30);
    c.format = rng() % 2 ? cli::Format::Json : cli::Format::Text;
    if (rng() % 2) c.suite = "properties";
    auto back = cli::parse_config(c.render());
    CHECK(back == c);
    CHECK(cli::parse_config(back.render()) == back);
  }
}

TEST_CASE("Thread count comes from the environment") {
  setenv("QTOR_THREADS", "4", 1);
  CHECK(cli::thread_count() == 4);
  setenv("QTOR_THREADS", "zero", 1);
  CHECK(cli::thread_count() == 1);
  unsetenv("QTOR_THREADS");
  CHECK(cli::thread_count() == 1);
}
