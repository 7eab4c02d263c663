#include <doctest.h>

#include <fstream>
#include <sstream>

#include "alphanorm/cli.hpp"

using namespace alphanorm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool is_fixture_file(const std::string& a) {
  for (const char* ext : {".ty", ".tm", ".ctx", ".cert"}) {
    std::string e(ext);
    if (a.size() > e.size() && a.compare(a.size() - e.size(), e.size(), e) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("signature parsing") {
    auto s = parse_signature("x=2;y=2,1");
    REQUIRE(s);
    CHECK(s->x_card == 2);
    CHECK(s->y_card == std::vector<int>{2, 1});
    CHECK(parse_signature("x=0"));
    CHECK(!parse_signature("x=2;y=1"));
    CHECK(!parse_signature("y=1"));
    CHECK(!parse_signature("x=-1"));
    CHECK(!parse_signature("x=1;y=1;z=2"));
  }

  TEST_CASE("norm prints the normal form and its certificate") {
    Run r = run({"norm", "-e", "U[p][id]"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string first, second;
    std::getline(lines, first);
    std::getline(lines, second);
    CHECK(first == "U");
    CHECK(second == "certificate: 2 steps");
  }

  TEST_CASE("eq") {
    Run r = run({"eq", "-e", "U[p]", "-e", "U"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    Run f = run({"eq", "-e", "U", "-e", "Pi(U, U[p])"});
    CHECK(f.code == 1);
    CHECK(f.out == "false\n");
  }

  TEST_CASE("eval of the identity combinator") {
    Run r = run({"eval", "--sig", "x=2;y=2,1", "-e", "lam(U, lam(El(q), q))"});
    CHECK(r.code == 0);
    CHECK(r.out == "() |-> {x0 -> {y0_0 -> y0_0, y0_1 -> y0_1}, x1 -> {y1_0 -> y1_0}}\n");
  }

  TEST_CASE("deterministic reports") {
    std::vector<std::string> args{"fuzz", "--count", "30", "--seed", "9"};
    CHECK(run(args).out == run(args).out);
    std::vector<std::string> coh{"coherence", "--count", "5", "--seed", "4"};
    CHECK(run(coh).out == run(coh).out);
  }

  TEST_CASE("exit codes on the fixture corpus") {
    std::string dir = ALPHANORM_FIXTURES "/cli";
    std::ifstream in(dir + "/cases.txt");
    REQUIRE(in);
    std::string line;
    int cases = 0;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      int expected;
      ls >> expected;
      std::vector<std::string> args;
      std::string a;
      while (ls >> a) args.push_back(is_fixture_file(a) ? dir + "/" + a : a);
      Run r = run(args);
      CHECK_MESSAGE(r.code == expected, line << "\nstdout: " << r.out << "stderr: " << r.err);
      ++cases;
    }
    CHECK(cases > 20);
  }
}
