#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  bool operator==(const RunResult&) const = default;
};

RunResult run_cmd(const std::string& cmd) {
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int status = pclose(p);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

RunResult run(const std::string& args) { return run_cmd(std::string(CROSSNEST_BIN) + " " + args); }

const char* kWorkedPartition = "n=8; arcs=1-4:1,2-6:2,4-5:2,5-8:1,6-7:1";
const char* kWorkedTableau = "|;|;1|;1|;1|1;1|1;1|1;|1;|1,1;|1;1|1;1|;1,1|;1|;1|;|;|";

}  // namespace

TEST_CASE("count goldens") {
  CHECK(run("count --nc -r 2 -n 9") == RunResult{0, "233795\n"});
  CHECK(run("count --nc -r 1 -n 0") == RunResult{0, "1\n"});
  CHECK(run("count --ncn -j 2 -k 2 -r 1 -n 7") == RunResult{0, "233\n"});
}

TEST_CASE("series goldens") {
  CHECK(run("series --ncn -j 2 -k 2 -r 1 -N 6") == RunResult{0, "1,1,2,5,13,34,89\n"});
  CHECK(run("series --nc -r 2 -N 9") ==
        RunResult{0, "1,1,3,11,47,225,1173,6529,38265,233795\n"});
}

TEST_CASE("gf and poly goldens") {
  CHECK(run("gf -j 2 -k 2 -r 2") == RunResult{0, "num=[1,-6,7]; den=[1,-7,11,-1]\n"});
  CHECK(run("gf -j 2 -k 2 -r 1") == RunResult{0, "num=[1,-2]; den=[1,-3,1]\n"});
  CHECK(run("poly --nc -n 4") == RunResult{0, "1 + 5r + 7r^2 + r^3\n"});
  CHECK(run("poly --nc -n 1") == RunResult{0, "1\n"});
  CHECK(run("poly -j 2 -k 2 -n 4") == RunResult{0, "1 + 4r + 7r^2 + r^3\n"});
}

TEST_CASE("biject maps the worked example both ways") {
  // input arcs out of order; the printed tableau is canonical
  auto fwd = run("biject \"n=8; arcs=1-4:1,4-5:2,5-8:1,2-6:2,6-7:1\"");
  CHECK(fwd == RunResult{0, std::string(kWorkedTableau) + "\n"});
  auto inv = run(std::string("biject --inverse \"") + kWorkedTableau + "\"");
  CHECK(inv == RunResult{0, std::string(kWorkedPartition) + "\n"});
}

TEST_CASE("verify subcommands report PASS") {
  CHECK(run("verify symmetry -n 5 -r 2") == RunResult{0, "PASS\n"});
  CHECK(run("verify reflection -N 30") == RunResult{0, "PASS\n"});
  CHECK(run("verify fib-walks -N 7") == RunResult{0, "PASS\n"});
}

TEST_CASE("json output mirrors the text output") {
  auto count = run("count --nc -r 2 -n 9 --format json");
  CHECK(count.code == 0);
  CHECK(json::parse(count.out) == json{{"count", "233795"}});

  auto series = run("series --ncn -j 2 -k 2 -r 1 -N 6 --format json");
  json s = json::parse(series.out);
  REQUIRE(s.contains("series"));
  CHECK(s["series"] == json::array({"1", "1", "2", "5", "13", "34", "89"}));

  auto gf = run("gf -j 2 -k 2 -r 2 --format json");
  json g = json::parse(gf.out);
  CHECK(g["num"] == json::array({"1", "-6", "7"}));
  CHECK(g["den"] == json::array({"1", "-7", "11", "-1"}));

  auto poly = run("poly --nc -n 4 --format json");
  CHECK(json::parse(poly.out)["poly"] == json::array({"1", "5", "7", "1"}));

  auto biject = run("biject --format json \"n=2; arcs=1-2\"");
  CHECK(json::parse(biject.out)["tableau"] == ";;1;;");

  auto inverse = run("biject --format json --inverse \";;1;;\"");
  json part = json::parse(inverse.out)["partition"];
  CHECK(part["n"] == 2);
  CHECK(part["arcs"] == json::array({json::array({1, 2, 1})}));

  auto verify = run("verify symmetry -n 4 -r 1 --format json");
  json v = json::parse(verify.out);
  REQUIRE(v["checks"].size() == 1);
  CHECK(v["checks"][0]["name"] == "symmetry");
  CHECK(v["checks"][0]["pass"] == true);

  auto enumerate = run("enumerate --kind partitions -n 2 -r 3 --format json");
  CHECK(json::parse(enumerate.out)["items"].size() == 4);

  auto nofit = run("fit \"2,3,5,7,11,13,17,19\" --max-order 1 --max-degree 1 --format json");
  CHECK(json::parse(nofit.out)["recurrence"].is_null());
}

TEST_CASE("enumerate prints one literal per line") {
  auto r = run("enumerate --kind partitions -n 2 -r 3");
  CHECK(r == RunResult{0,
                       "r=3; n=2; arcs=1-2:1\n"
                       "r=3; n=2; arcs=1-2:2\n"
                       "n=2; arcs=1-2:3\n"
                       "r=3; n=2; arcs=\n"});
  CHECK(run("enumerate --kind complete-matchings -n 5 -r 1") == RunResult{0, ""});
  auto tangled = run("enumerate --kind tangled -n 2 -r 1");
  CHECK(tangled.code == 0);
  CHECK(std::count(tangled.out.begin(), tangled.out.end(), '\n') == 7);
}

TEST_CASE("fit recovers recurrences from literals and built-in series") {
  CHECK(run("fit 1,2,4,8 --max-order 1 --max-degree 0") ==
        RunResult{0, "P_0=[-2]; P_1=[1]\n"});
  CHECK(run("fit --nc -r 1 --terms 12 --max-order 1 --max-degree 1") ==
        RunResult{0, "P_0=[-2,-4]; P_1=[2,1]\n"});
  CHECK(run("fit --nc -r 2 --terms 30 --max-order 2 --max-degree 2") ==
        RunResult{0, "P_0=[0,27,9]; P_1=[-60,-52,-10]; P_2=[20,9,1]\n"});
  CHECK(run("fit \"2,3,5,7,11,13,17,19\" --max-order 1 --max-degree 1") ==
        RunResult{0, "no recurrence found\n"});
  // the default window needs more terms than this
  CHECK(run("fit \"2,3,5,7,11,13,17,19\"").code == 1);
}

TEST_CASE("argument errors exit with code two") {
  CHECK(run("count --nc -r 2").code == 2);            // missing -n
  CHECK(run("count --nc --ncn -j 2 -k 2 -n 3").code == 2);
  CHECK(run("count --nc -n 3 --bogus").code == 2);
  CHECK(run("nosuchverb").code == 2);
  CHECK(run("biject \"garbage\"").code == 2);
  CHECK(run("biject --inverse \"1,2;\"").code == 2);
  CHECK(run("verify nosuchcheck").code == 2);
  CHECK(run("fit 1,2,xx").code == 2);
  CHECK(run("count --nc -n 3 --format yaml").code == 2);
  CHECK(run("poly -n 4").code == 2);  // needs --nc or a bound
}

TEST_CASE("infeasible requests exit with code one") {
  CHECK(run("gf -j 1 -k 2 -r 1").code == 1);
  CHECK(run("poly --nc -n 10").code == 1);
  CHECK(run("count --ncn -j 2 -k 2 -r 1 -n 9 --brute --max-work 10").code == 1);
  CHECK(run("enumerate --kind tangled -n 9 --max-work 1000").code == 1);
}

TEST_CASE("worker count does not change the bytes") {
  std::string base = std::string(CROSSNEST_BIN) + " count --nc -r 2 -n 9";
  auto one = run_cmd("CROSSNEST_THREADS=1 " + base);
  auto four = run_cmd("CROSSNEST_THREADS=4 " + base);
  CHECK(one.code == 0);
  CHECK(one == four);
}

TEST_CASE("walks and brute force agree through the interface") {
  auto walk = run("count --ncn -j 2 -k 3 -r 2 -n 6");
  auto brute = run("count --ncn -j 2 -k 3 -r 2 -n 6 --brute");
  CHECK(walk.code == 0);
  CHECK(walk == brute);
}
