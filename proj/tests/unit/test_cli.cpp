#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "oak/cli.hpp"
#include "oak/reports.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = oak::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented invocations") {
    auto r = run({"bracket", "--rank", "2", "X[+e1-e2]", "X[+e2-e1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "h1 - h2\n");

    r = run({"verma-mult", "--algebra", "g", "--rank", "1", "--lambda", "0", "--depth", "4", "--offset", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    r = run({"verify-hom", "--rank", "3", "--map", "f"});
    CHECK(r.code == 0);
    const auto j = oak::Json::parse(r.out);
    CHECK(j["violations"] == 0);
    CHECK(j["pairs_checked"] == 406);
  }

  TEST_CASE("other subcommands succeed") {
    CHECK(run({"normal-order", "-n", "1", "X[+e1]", "X[-e1]", "--format", "text"}).out == "X[-e1] X[+e1] + z\n");
    CHECK(run({"act", "-n", "1", "S", "d1^2", "t1^-1", "--format", "text"}).out == "2 t1^-3\n");
    CHECK(run({"verify-twist", "-n", "1", "--b", "2"}).code == 0);
    CHECK(run({"verify-prop4b", "-n", "1", "--samples", "2", "--depth", "6"}).code == 0);
    CHECK(run({"verify-prop8b", "-n", "2", "--v", "standard", "--depth", "4"}).code == 0);
    CHECK(run({"support", "-n", "1", "--module", "S", "--format", "text"}).out == "-5/2\n-3/2\n-1/2\n");
    const auto r = run({"classify", "-n", "2", "--module", "G 1/3,0", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("I={1} F={} F+={2} F-={}", 0) == 0);
  }

  TEST_CASE("mismatch exits with 1") {
    CHECK(run({"classify", "-n", "2", "--module", "G 1/3,0", "--expect-i", "1,2"}).code == 1);
    CHECK(run({"classify", "-n", "2", "--module", "G 1/3,0", "--expect-i", "1"}).code == 0);
  }

  TEST_CASE("malformed input exits with 2 and names the token") {
    auto r = run({"bracket", "--rank", "2", "X[+e1-e2]", "X[+e9]"});
    CHECK(r.code == 2);
    CHECK(r.err.find("X[+e9]") != std::string::npos);
    CHECK(r.err.find("position") != std::string::npos);

    r = run({"verma-mult", "--rank", "2", "--lambda", "1,foo"});
    CHECK(r.code == 2);
    CHECK(r.err.find("'foo'") != std::string::npos);
    CHECK(r.err.find("position 2") != std::string::npos);

    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"bracket", "--rank", "0", "h1", "h1"}).code == 2);
    CHECK(run({"verify-twist", "-n", "1", "--b", "1/2"}).code == 2);
    CHECK(run({"classify", "-n", "1", "--support", "/nonexistent.json"}).code == 2);
  }

  TEST_CASE("JSON output is deterministic and tables round-trip") {
    const std::vector<std::string> args{"verma-mult", "--rank", "2", "--lambda", "1/2,a1", "--depth", "3"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const std::vector<std::string> hom{"verify-hom", "--rank", "2", "--map", "phi"};
    CHECK(run(hom).out == run(hom).out);

    const std::string path = "oak_cli_table.json";
    {
      std::ofstream f(path);
      f << run({"verma-mult", "--rank", "1", "--depth", "30"}).out;
    }
    const auto c = run({"classify", "-n", "1", "--support", path, "--format", "json"});
    std::remove(path.c_str());
    CHECK(c.code == 0);
    const auto j = oak::Json::parse(c.out);
    CHECK(j["flags"]["F+"] == oak::Json::array({1}));
  }
}
