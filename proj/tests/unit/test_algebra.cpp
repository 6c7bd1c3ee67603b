#include "doctest.h"
#include "algtool/algebra.hpp"
#include "algtool/degeneration.hpp"
#include "helpers.hpp"

using namespace algtool;
using testing::alg;
using testing::P;

TEST_CASE("basis products read off the tables") {
  const AlgebraDef& a27 = alg("A27");
  CHECK(product(a27, unit_vector(3, 0), unit_vector(3, 2)) == unit_vector(3, 2));
  Vector m = product(a27, unit_vector(3, 2), unit_vector(3, 0));
  CHECK(m == Vector{Scalar(0), Scalar(0), Scalar(-1)});
  const AlgebraDef& a02 = alg("A02");
  Vector p = product(a02, unit_vector(3, 0), unit_vector(3, 1));
  CHECK(p[2] == Scalar(1) + P("alpha"));
  CHECK(product(a02, Vector(3), unit_vector(3, 1)) == Vector(3));
}

TEST_CASE("split into circle and bracket") {
  PairAlgebraDef p = split(alg("A27"));
  AlgebraDef circ = circ_part(p), br = bracket_part(p);
  CHECK(circ.at(0, 0, 1) == Scalar(1));
  CHECK(circ.at(0, 2, 2).is_zero());
  CHECK(br.at(0, 2, 2) == Scalar(1));
  CHECK(br.at(2, 0, 2) == Scalar(-1));

  PairAlgebraDef q = split(alg("A04"));
  for (const auto& x : q.bracket) CHECK(x.is_zero());

  PairAlgebraDef r = split(alg("A02"));
  CHECK(same_constants(circ_part(r), alg("A02_0")));
  CHECK(bracket_part(r).at(0, 1, 2) == P("alpha"));
}

TEST_CASE("fuse inverts split") {
  for (const char* n : {"A29", "A02", "A14", "A32", "J17", "N3"}) {
    const AlgebraDef& a = alg(n);
    CHECK(same_constants(fuse(split(a)), a));
  }
  PairAlgebraDef p = split(alg("A02_0"));
  p.bracket[(0 * 3 + 1) * 3 + 2] = P("alpha");
  p.bracket[(1 * 3 + 0) * 3 + 2] = -P("alpha");
  CHECK(same_constants(fuse(p), alg("A02")));

  PairAlgebraDef z;
  z.dim = 2;
  z.circ.assign(8, Scalar());
  z.bracket.assign(8, Scalar());
  AlgebraDef f = fuse(z);
  for (const auto& x : f.c) CHECK(x.is_zero());

  PairAlgebraDef bad = split(alg("A04"));
  bad.circ[(0 * 3 + 1) * 3 + 0] = Scalar(1);  // e1 o e2 = e1, e2 o e1 = 0
  CHECK_THROWS_AS(fuse(bad), InvalidPair);
}

TEST_CASE("change of basis") {
  const AlgebraDef& a = alg("A32");
  CHECK(same_constants(change_of_basis(a, Matrix::identity(3)), a));
  // Diagonal rescaling multiplies c_ij^k by d_i d_j / d_k.
  Vector d{Scalar(2), Scalar(3), Scalar(5)};
  AlgebraDef b = change_of_basis(a, Matrix::diagonal(d));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(b.at(i, j, k) == a.at(i, j, k) * d[i] * d[j] / d[k]);
  // Printed geo1 basis on A30 gives A27's constants in the limit, not A28's.
  Scalar t = P("t");
  Matrix e{{t, Scalar(1), Scalar(0)}, {Scalar(0), -t, Scalar(0)}, {Scalar(0), Scalar(0), -t}};
  DegenerationReport r = verify_degeneration(alg("A30"), {}, e, alg("A27"));
  CHECK(r.passed());
  CHECK_FALSE(verify_degeneration(alg("A30"), {}, e, alg("A28")).passed());
}

TEST_CASE("subspace dimensions") {
  SubspaceDims a01 = subspace_products(alg("A01"));
  CHECK(a01.square == 1);
  CHECK(a01.commutative);
  CHECK(subspace_products(alg("A04")).square == 3);
  CHECK(subspace_products(alg("A23")).anticommutative);
  CHECK(subspace_products(alg("A27")).square == 2);
  CHECK(subspace_products(alg("A28")).square == 1);
}

TEST_CASE("substitution recomputes parameters") {
  AlgebraDef a = substitute(alg("A14"), {{intern("alpha"), Scalar(0)}});
  CHECK(a.params == std::vector<std::string>{"beta"});
  AlgebraDef b = substitute(alg("A14"), {{intern("beta"), P("alpha")}});
  CHECK(b.params == std::vector<std::string>{"alpha"});
}

TEST_CASE("format_algebra round-trips through the parser") {
  for (const char* n : {"A31", "J18", "A24"}) {
    AlgebraDef a = alg(n);
    AlgebraDef b = testing::parse_alg(format_algebra(a));
    CHECK(same_constants(a, b));
    CHECK(a.params == b.params);
  }
}
