#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = seidel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("charpoly") {
  const Run all = run({"charpoly", "3,2,1", "--form", "all"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "all forms agree"));
  std::size_t hits = 0;
  for (std::size_t pos = 0; (pos = all.out.find("expanded: x^6-15x^4-16x^3+27x^2+48x+19", pos)) != std::string::npos;
       ++pos) {
    ++hits;
  }
  CHECK(hits == 4);

  const Run five = run({"charpoly", "5", "--form", "product"});
  CHECK(five.code == 0);
  CHECK(contains(five.out, "(x+1)^4 * (x-4)"));

  CHECK(run({"charpoly", "0,2"}).code == 2);
  CHECK(run({"charpoly", "2,x"}).code == 2);
  CHECK(run({"charpoly", "3,2", "--form", "bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);

  const auto j = nlohmann::json::parse(run({"charpoly", "2*3,1", "--form", "all", "--json"}).out);
  CHECK(j["agree"] == true);
  CHECK(j["forms"]["oracle"]["coefficients"] == j["forms"]["grouped"]["coefficients"]);
}

TEST_CASE("spectrum, bound, quotient") {
  const auto s = nlohmann::json::parse(run({"spectrum", "3,2,1", "--json"}).out);
  CHECK(s["-1_multiplicity"] == "3");
  const Run b = run({"bound", "2,2,2"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "bound: -3\n"));
  CHECK(contains(b.out, "tight: yes"));
  const auto bj = nlohmann::json::parse(run({"bound", "2,2,2", "--json"}).out);
  CHECK(bj["tight"] == true);
  CHECK(run({"quotient", "1,1"}).out == "[[0,-1],[-1,0]]\n");
}

TEST_CASE("search") {
  const Run twelve = run({"search", "--n", "12"});
  CHECK(twelve.code == 0);
  CHECK_FALSE(contains(twelve.out, "k>=3"));
  CHECK(contains(twelve.out, "violations=0"));
  const Run four = run({"search", "--n", "4", "--k", "2"});
  CHECK(four.code == 0);
  CHECK(contains(four.out, "(2,2) (3,1)"));
  CHECK(contains(four.out, "k<=2"));
  CHECK(run({"search", "--n", "1000"}).code == 2);
  CHECK(run({"search", "--n", "10", "--jobs", "1"}).out == run({"search", "--n", "10", "--jobs", "4"}).out);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--suite", "closedform", "--max-n", "8"}).code == 0);
  CHECK(run({"verify", "--suite", "bounds", "--max-n", "8"}).code == 0);
  CHECK(run({"verify", "--suite", "determination", "--max-n", "10"}).code == 0);
  const Run sw = run({"verify", "--suite", "switching", "--max-n", "5", "--json"});
  CHECK(sw.code == 0);
  CHECK(nlohmann::json::parse(sw.out)["passed"] == true);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--max-n", "99"}).code == 2);
  CHECK(run({"verify", "--suite", "closedform", "--max-n", "6", "--seed", "7"}).out ==
        run({"verify", "--suite", "closedform", "--max-n", "6", "--seed", "7"}).out);
}

TEST_CASE("switch-equiv") {
  // C_4 = K_{2,2} against the empty graph on 4 vertices.
  const Run a = run({"switch-equiv", "--g6", "Cr", "--g6", "C?"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "U = [1,2]"));
  const Run b = run({"switch-equiv", "--g6", "Bw", "--g6", "B?"});
  CHECK(b.code == 1);
  CHECK(b.out == "not equivalent\n");
  const Run c = run({"switch-equiv", "--g6", "Bw", "--g6", "C?"});
  CHECK(c.code == 1);
  CHECK(c.out == "not equivalent (orders differ)\n");
  CHECK(run({"switch-equiv", "--g6", "Cr"}).code == 2);
  CHECK(run({"switch-equiv", "--g6", "Cr", "--g6", "!!"}).code == 2);
  const Run lp = run({"switch-equiv", "--g6", "Cr", "--g6", "C?", "--label-preserving", "--json"});
  CHECK(lp.code == 0);
  CHECK(nlohmann::json::parse(lp.out)["permutation"] == nlohmann::json{0, 1, 2, 3});
}
