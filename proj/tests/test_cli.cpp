#include "doctest.h"

#include "meshpat/cli.hpp"

#include <cstdlib>
#include <sstream>

using namespace meshpat;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::vector<const char*> argv{"meshpat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dist examples") {
  auto r = run({"dist", "--n", "5", "--spec", "1,0,1,0", "--format", "json"});
  CHECK(r.rc == 0);
  CHECK(r.out == R"({"class":"all","coeffs":["42","46","26","6"],"n":5,"provenance":"oracle","spec":"1,0,1,0"})"
                 "\n");
  r = run({"dist", "--n", "4", "--spec", "empty,0,0,0", "--format", "csv"});
  CHECK(r.rc == 0);
  CHECK(r.out == "n,spec,class,c0,c1,c2,c3,c4\n4,\"empty,0,0,0\",all,0,6,11,6,1\n");
  r = run({"dist", "--n", "2..3", "--spec", "0,0,0,0", "--format", "csv"});
  CHECK(r.out == "n,spec,class,c0,c1,c2,c3\n2,\"0,0,0,0\",all,0,0,2,0\n3,\"0,0,0,0\",all,0,0,0,6\n");
  r = run({"dist", "--n", "3", "--spec", "1,0,0,0"});
  CHECK(r.out.find("n=3   1 + 3*x + 2*x^2") != std::string::npos);
}

TEST_CASE("routes agree byte for byte apart from provenance") {
  const std::vector<std::vector<std::string>> cases = {
      {"--spec", "2,0,0,0"},         {"--spec", "0,0,1,1"},     {"--spec", "eq:2,0,0,0"},
      {"--spec", "empty,0,0,0"},     {"--spec", "0,1,empty,0"}, {"--kmax", "3"},
      {"--spec", "1,0,1,0", "--class", "one-before-n"},         {"--spec", "1,0,1,1", "--class", "one-before-n"},
      {"--spec", "1,0,1,1", "--class", "block:n1"},             {"--spec", "1,0,1,0", "--class", "block:n1"},
  };
  for (const auto& c : cases) {
    std::vector<std::string> base = {"dist", "--n", "2..8", "--format", "csv"};
    base.insert(base.end(), c.begin(), c.end());
    auto via = [&](const char* route) {
      auto args = base;
      args.push_back("--via");
      args.push_back(route);
      return run(args);
    };
    const Run o = via("oracle");
    const Run r = via("recursion");
    CAPTURE(c[1]);
    CHECK(o.rc == 0);
    CHECK(r.rc == 0);
    CHECK(o.out == r.out);
  }
  for (const char* spec : {"1,0,1,0", "0,1,0,2", "2,0,2,0", "1,1,0,1", "1,1,1,1"}) {
    CAPTURE(spec);
    const Run o = run({"dist", "--n", "1..8", "--spec", spec, "--format", "csv"});
    const Run m = run({"dist", "--n", "1..8", "--spec", spec, "--format", "csv", "--via", "multivar"});
    CHECK(m.rc == 0);
    CHECK(o.out == m.out);
  }
  const Run qo = run({"dist", "--n", "5", "--spec", "1,1,0,0", "--q", "--format", "json"});
  const Run qr = run({"dist", "--n", "5", "--spec", "1,1,0,0", "--q", "--format", "json", "--via", "closed"});
  CHECK(qo.out.substr(0, qo.out.find("provenance")) == qr.out.substr(0, qr.out.find("provenance")));
}

TEST_CASE("exit codes") {
  CHECK(run({"dist", "--n", "3", "--spec", "1,0,x,0"}).rc == kExitUsage);
  CHECK(run({"dist", "--n", "3"}).rc == kExitUsage);
  CHECK(run({"dist", "--spec", "1,0,0,0"}).rc == kExitUsage);
  CHECK(run({"dist", "--n", "3", "--spec", "1,0,0,0", "--kmax", "2"}).rc == kExitUsage);
  CHECK(run({"dist", "--n", "3", "--spec", "1,0,0,0", "--format", "xml"}).rc == kExitUsage);
  CHECK(run({"dist", "--n", "3", "--spec", "1,0,0,0", "--q", "--format", "csv"}).rc == kExitUsage);
  CHECK(run({"dist", "--n", "5", "--spec", "1,0,1,0", "--via", "recursion"}).rc == kExitUsage);
  CHECK(run({"dist", "--n", "4..2", "--spec", "1,0,0,0"}).rc == kExitUsage);
  CHECK(run({"frobnicate"}).rc == kExitUsage);
  CHECK(run({}).rc == kExitUsage);
  CHECK(run({"verify", "--suite", "nope"}).rc == kExitUsage);
  CHECK(run({"series", "--id", "nope"}).rc == kExitUsage);
  CHECK(run({"seq", "--spec", "1,0,0,0", "--extract", "median"}).rc == kExitUsage);

  const Run cap = run({"dist", "--n", "11", "--spec", "1,0,0,0"});
  CHECK(cap.rc == kExitCap);
  CHECK(cap.err.find("cap") != std::string::npos);
  CHECK(run({"--cap", "4", "dist", "--n", "5", "--spec", "1,0,0,0"}).rc == kExitCap);
  CHECK(run({"--cap", "13", "dist", "--n", "5", "--spec", "1,0,0,0"}).rc == kExitUsage);
  const Run warn = run({"--cap", "11", "dist", "--n", "3", "--spec", "1,0,0,0"});
  CHECK(warn.rc == 0);
  CHECK(warn.err.find("warning") != std::string::npos);

  CHECK(run({"--help"}).rc == 0);
}

TEST_CASE("MESHPAT_CAP overrides the default cap") {
  setenv("MESHPAT_CAP", "3", 1);
  CHECK(run({"dist", "--n", "4", "--spec", "1,0,0,0"}).rc == kExitCap);
  CHECK(run({"--cap", "5", "dist", "--n", "4", "--spec", "1,0,0,0"}).rc == 0);
  setenv("MESHPAT_CAP", "junk", 1);
  CHECK(run({"dist", "--n", "4", "--spec", "1,0,0,0"}).rc == kExitUsage);
  unsetenv("MESHPAT_CAP");
}

TEST_CASE("seq examples") {
  CHECK(run({"seq", "--spec", "1,0,1,1", "--extract", "eval0", "--max-n", "8"}).out ==
        "1,2,6,20,70,252,924,3432\n");
  CHECK(run({"seq", "--kmax", "2", "--extract", "coeff:1", "--min-n", "3", "--max-n", "8"}).out ==
        "1,6,35,225,1624,13132\n");
  CHECK(run({"seq", "--spec", "1,1,1,1", "--extract", "top", "--min-n", "5", "--max-n", "8"}).out ==
        "16,32,96,384\n");
  CHECK(run({"seq", "--spec", "1,0,1,0", "--extract", "eval@2", "--max-n", "3"}).out == "1,2,7\n");
}

TEST_CASE("series examples") {
  auto r = run({"series", "--id", "P_k000", "--k", "1", "--order", "4", "--format", "json"});
  CHECK(r.rc == 0);
  CHECK(r.out.find(R"("terms":[["1"],["1","1"],["1","3","2"],["1","6","11","6"],["1","10","35","50","24"]])") !=
        std::string::npos);
  r = run({"series", "--id", "B_1011", "--order", "4"});
  CHECK(r.out.find("m=2   9 + 3*x") != std::string::npos);
  r = run({"series", "--id", "R_kmax", "--k", "2", "--order", "4"});
  CHECK(r.out.find("m=4   17 + 6*x + 1*x^2") != std::string::npos);
  CHECK(run({"series", "--list"}).out.find("R_kmax") != std::string::npos);
}

TEST_CASE("verify prints a JSON report") {
  const Run r = run({"verify", "--suite", "symmetry", "--max-n", "5"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("\"passed\": true") != std::string::npos);
  const Run s = run({"verify", "--suite", "multivar", "--max-n", "8", "--failures-only"});
  CHECK(s.rc == 0);
  CHECK(s.out.find("\"status\": \"mismatch\"") != std::string::npos);
  CHECK(s.out.find("\"status\": \"pass\"") == std::string::npos);
}
