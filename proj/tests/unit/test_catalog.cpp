#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "algtool/catalog.hpp"
#include "helpers.hpp"

using namespace algtool;
using testing::alg;
using testing::P;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("algtool_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

Catalog parse(const std::string& text) {
  Catalog c;
  parse_catalog_text(c, text, "<test>");
  c.finalize(false);
  return c;
}

}  // namespace

TEST_CASE("shipped corpus loads") {
  const Catalog& c = testing::corpus();
  std::size_t three = 0, four = 0;
  for (int i = 1; i <= 33; ++i) {
    std::string n = (i < 10 ? "A0" : "A") + std::to_string(i);
    CHECK_MESSAGE(c.find(n) != nullptr, n);
  }
  for (const auto& e : c.entries) (e.algebra.dim == 3 ? three : four) += 1;
  CHECK(three >= 33);
  CHECK(four == 20);
  CHECK(c.find("N2") != nullptr);
  CHECK(c.witnesses.size() >= 14);
  for (const auto& e : c.entries) CHECK_FALSE(e.provenance.empty());
}

TEST_CASE("parse errors") {
  try {
    parse("algebra X\ndim 3\ne1*e1 = e9\nend\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("algebra X\ndim 3\ne1*e1 = e2\ne1*e1 = e3\nend\n"), ParseError);
  CHECK_THROWS_AS(parse("algebra X\ndim 3\ne1*e1 = gamma*e2\nend\n"), UndeclaredParameter);
  CHECK_THROWS_AS(parse("algebra X\ndim 3\nparams t\nend\n"), ParseError);
  CHECK_THROWS_AS(parse("algebra X\ndim 3\nend\nalgebra X\ndim 3\nend\n"), DuplicateName);
  CHECK_THROWS_AS(parse("algebra X\ndim 3\n"), ParseError);
  CHECK_THROWS_AS(parse("degeneration X -> Y\nE1 = e1\nend\n"), UnknownAlgebra);
  CHECK_THROWS_AS(parse("algebra X\ndim 2\nend\ndegeneration X -> X\nE1 = gamma*e1\nE2 = e2\nend\n"),
                  UndeclaredParameter);
}

TEST_CASE("loading files and directories") {
  fs::path empty = scratch("empty");
  Catalog c = load_catalog(empty);
  CHECK(c.entries.empty());

  fs::path d = scratch("bad");
  write(d / "x.alg", "algebra X\n  provenance test\n  dim 3\n  e1*e1 = e9\nend\n");
  try {
    (void)load_catalog(d);
    FAIL("expected a parse error");
  } catch (const CatalogParseError& e) {
    CHECK(e.file().find("x.alg") != std::string::npos);
    CHECK(std::string(e.what()).find("x.alg:4:") != std::string::npos);
  }
  fs::path m = scratch("noprov");
  write(m / "y.alg", "algebra Y\n  dim 2\nend\n");
  CHECK_THROWS_AS(load_catalog(m), Error);
  CHECK(load_catalog(m / "y.alg").entries.size() == 1);  // single files skip the provenance rule
  fs::remove_all(empty);
  fs::remove_all(d);
  fs::remove_all(m);
}

TEST_CASE("references with substitutions and permutations") {
  AlgebraRef r = parse_ref("A14{alpha=beta, beta=alpha}");
  CHECK(r.name == "A14");
  CHECK(r.subs.size() == 2);
  AlgebraDef a = testing::ref("A19_h@1,3,2");
  CHECK(a.at(0, 1, 1) == Scalar(1));  // e1e2 = e2 in the displayed basis
  CHECK(a.at(2, 2, 2) == Scalar(1));  // e3e3 = e3
  CHECK_THROWS_AS(testing::ref("A14{gamma=1}"), Error);
  CHECK_THROWS_AS(testing::ref("A19@1,2"), Error);
}

TEST_CASE("specializations inherit tables and claims stay local") {
  const CatalogEntry& e = testing::corpus().at("A14_0_0");
  CHECK(e.algebra.params.empty());
  CHECK(e.algebra.at(0, 1, 1) == Scalar(BigRational(1, 2)));
  CHECK(testing::corpus().excludes_for(parse_ref("A02")).size() == 1);
  CHECK(testing::corpus().excludes_for(parse_ref("A02{alpha=1/2}")).empty());
}

TEST_CASE("isomorphism witnesses") {
  for (const auto& w : testing::corpus().isomorphisms)
    CHECK_MESSAGE(verify_isomorphism(w, testing::corpus()).ok(), w.source.text << " -> " << w.target.text);
  CHECK(verify_isomorphism(alg("A31"), alg("A31"), Matrix::identity(3)).status == Status::Holds);
  CHECK_THROWS_AS(verify_isomorphism(alg("A31"), alg("A31"), Matrix(3, 3)), SingularMatrix);
  Matrix sw{{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}};
  CHECK_FALSE(verify_isomorphism(alg("A02"), alg("A02"), sw).ok());
}

TEST_CASE("fingerprints") {
  Fingerprint f27 = invariant_fingerprint(alg("A27")), f28 = invariant_fingerprint(alg("A28"));
  CHECK(f27.square == 2);
  CHECK(f28.square == 1);
  CHECK_FALSE(f27 == f28);
  CHECK(invariant_fingerprint(alg("A04")).der == 0);

  std::mt19937_64 g(11);
  std::uniform_int_distribution<int> d(-3, 3);
  Fingerprint f = invariant_fingerprint(alg("A29"));
  for (int trial = 0; trial < 50; ++trial) {
    Matrix e(3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) e(i, j) = Scalar(d(g));
    } while (det(e).is_zero());
    CHECK(invariant_fingerprint(change_of_basis(alg("A29"), e)) == f);
  }
}
