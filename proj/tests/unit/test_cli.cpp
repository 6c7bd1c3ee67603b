#include <sstream>

#include "doctest.h"
#include "algtool/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream o, e;
  args.insert(args.begin(), "algtool");
  int c = algtool::run(args, o, e);
  return {c, o.str(), e.str()};
}

std::string data(const char* f) { return std::string(ALGTOOL_TEST_DATA) + "/" + f; }

}  // namespace

TEST_CASE("check") {
  Result r = run({"check", "--identity", "nc_jordan", data("a29.alg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS check/A29/nc_jordan") != std::string::npos);
  CHECK(r.out.find("# seed 0") != std::string::npos);
  CHECK(run({"check", "--identity", "commutative", data("a29.alg")}).code == 1);
  CHECK(run({"check", "--identity", "flexible", data("nonexistent.alg")}).code == 2);
  CHECK(run({"check", "--identity", "moufang", data("a29.alg")}).code == 2);
}

TEST_CASE("usage errors") {
  Result r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"check", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("derivations") {
  // J03 has a 4-dimensional derivation algebra (independently recomputed).
  Result r = run({"derivations", data("j03.alg")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("dim 4\n", 0) == 0);
}

TEST_CASE("cocycles and extensions") {
  Result c = run({"cocycles", data("a01.alg")});
  CHECK(c.code == 0);
  CHECK(c.out.find("dim 2") != std::string::npos);
  Result e = run({"extend", data("a01.alg"), data("theta27.coc")});
  CHECK(e.code == 0);
  CHECK(e.out.find("e3*e1 = -e3") != std::string::npos);
  CHECK(run({"extend", data("a01.alg"), data("theta_bad.coc")}).code == 1);
}

TEST_CASE("closed sets") {
  CHECK(run({"closedset", "member", data("a29.alg"), data("geo1.cs")}).code == 0);
  CHECK(run({"closedset", "member", data("a02.alg"), data("geo1.cs")}).code == 1);
  Result s = run({"closedset", "sample", data("a02.alg"), data("geo1.cs"), "--trials", "50", "--seed", "42"});
  CHECK(s.code == 0);
  CHECK(s.out.find("# seed 42") != std::string::npos);
  CHECK(s.out == run({"closedset", "sample", data("a02.alg"), data("geo1.cs"), "--trials", "50", "--seed", "42"}).out);
}

TEST_CASE("witness files against the shipped corpus") {
  Result d = run({"degeneration", "verify", data("a30_a28_printed.deg"), "--catalog", ALGTOOL_CATALOG_DIR});
  CHECK(d.code == 1);
  CHECK(d.out.find("FAIL degenerations/printed") != std::string::npos);
  Result i = run({"iso", "verify", data("a02_swap.iso"), "--catalog", ALGTOOL_CATALOG_DIR});
  CHECK(i.code == 0);
}

TEST_CASE("catalog verify sections and formats") {
  Result r = run({"--format", "records", "catalog", "verify", ALGTOOL_CATALOG_DIR, "--section", "isomorphisms"});
  CHECK(r.code == 0);
  CHECK(r.out.find("status=PASS section=isomorphisms") != std::string::npos);
  Result d = run({"catalog", "verify", ALGTOOL_CATALOG_DIR, "--section", "dimensions"});
  CHECK(d.code == 1);  // the stated Der(J03) = 3 does not hold
  CHECK(d.out.find("FAIL dimensions/J03/der") != std::string::npos);
  CHECK(run({"catalog", "verify", ALGTOOL_CATALOG_DIR, "--section", "bogus"}).code == 2);
}

TEST_CASE("small utilities") {
  Result e = run({"eval", "(2*alpha - t)/(2 + 2*t)", "--limit", "t"});
  CHECK(e.code == 0);
  CHECK(e.out.find("alpha") != std::string::npos);
  CHECK(run({"eval", "1/t", "--limit", "t"}).out.find("limit none") != std::string::npos);
  Result m = run({"matrix", "det", "1, a; 0, 1"});
  CHECK(m.code == 0);
  CHECK(m.out == "1\n");
  CHECK(run({"invariants", data("a29.alg")}).code == 0);
  CHECK(run({"orbit", data("a02.alg")}).out.find("6") != std::string::npos);
  CHECK(run({"necessary", data("a29.alg"), data("a01.alg")}).code == 0);
  CHECK(run({"split", data("a29.alg")}).code == 0);
  CHECK(run({"rebase", data("a29.alg"), "--rows", "e1; e3; e2"}).code == 0);
  CHECK(run({"automorphism", data("a01.alg"), "--images", "e1 + e3; e2; e3"}).code == 0);
  CHECK(run({"act", data("theta27.coc"), "--images", "e1; e2; e3"}).code == 0);
}

TEST_CASE("product") {
  Result r = run({"product", data("a02.alg"), "e1 + e2", "e1 + e2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*e3\n");
  CHECK(run({"product", data("a02.alg"), "e1", "e4"}).code == 2);
}
