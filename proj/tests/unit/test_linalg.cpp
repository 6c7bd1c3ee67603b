#include "doctest.h"
#include "algtool/degeneration.hpp"
#include "algtool/linalg.hpp"
#include "helpers.hpp"

using namespace algtool;
using testing::P;

TEST_CASE("kernel dimensions") {
  CHECK(kernel(Matrix::identity(3)).generic_dimension == 0);
  CHECK(kernel(Matrix(2, 2)).generic_dimension == 2);
  CHECK(derivations(testing::alg("A04")).generic_dimension == 0);
}

TEST_CASE("kernel vectors solve the system") {
  Scalar a = P("alpha");
  Matrix m{{Scalar(1), a, Scalar(2)}, {Scalar(2), Scalar(2) * a, Scalar(4)}, {Scalar(0), Scalar(1), a}};
  SolutionSpace s = kernel(m);
  CHECK(s.generic_dimension == 1);
  for (const auto& v : s.basis) {
    Vector r = m * v;
    for (const auto& x : r) CHECK(x.is_zero());
  }
}

TEST_CASE("parametric pivots are recorded") {
  Scalar a = P("alpha");
  Matrix m{{a, Scalar(1)}, {Scalar(0), a}};
  SolutionSpace s = kernel(m);
  CHECK(s.generic_dimension == 0);
  CHECK_FALSE(s.exceptional_locus.empty());
}

TEST_CASE("determinant, rank and inverse") {
  Scalar t = P("t");
  Matrix d = Matrix::diagonal({t, -t, t * t});
  Matrix di = Matrix::diagonal({Scalar(1) / t, Scalar(-1) / t, Scalar(1) / (t * t)});
  CHECK(invert(d) == di);
  CHECK(invert(Matrix::identity(3)) == Matrix::identity(3));
  // A30 -> A27 basis.
  Matrix e{{t, Scalar(1), Scalar(-1)}, {Scalar(0), -t, t}, {Scalar(0), Scalar(0), t * t}};
  CHECK(det(e) == -(t * t * t * t));
  CHECK(e * invert(e) == Matrix::identity(3));
  CHECK(rank(Matrix{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}) == 1);
  CHECK_THROWS_AS(invert(Matrix{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}), SingularMatrix);
}

TEST_CASE("normalize_row") {
  Scalar a = P("alpha"), b = P("beta");
  Matrix x{{a, b}};
  Matrix n = normalize_row(x);
  CHECK(n == Matrix{{Scalar(1) / a, -b}, {Scalar(0), a}});
  Matrix r = x * n;
  CHECK(r == Matrix{{Scalar(1), Scalar(0)}});

  Matrix y{{Scalar(0), b}};
  CHECK(normalize_row(y) == Matrix{{Scalar(0), Scalar(1)}, {Scalar(1) / b, Scalar(0)}});
  CHECK(y * normalize_row(y) == Matrix{{Scalar(1), Scalar(0)}});
  CHECK(normalize_row(Matrix{{Scalar(1), Scalar(0)}}) == Matrix::identity(2));
  CHECK_THROWS_AS(normalize_row(Matrix{{Scalar(0), Scalar(0)}}), ZeroVector);
}
