#include "doctest.h"
#include "algtool/cohomology.hpp"
#include "helpers.hpp"

using namespace algtool;
using testing::alg;
using testing::P;

namespace {

// Cocycle from Delta coordinates written per component, for n = 3.
Cocycle delta3(const Vector& b1, const Vector& b2, const Vector& b3) { return Cocycle::from_delta(3, {b1, b2, b3}); }

const Vector Z{Scalar(0), Scalar(0), Scalar(0)};
Vector D12(Scalar s = 1) { return {s, Scalar(0), Scalar(0)}; }
Vector D13(Scalar s = 1) { return {Scalar(0), s, Scalar(0)}; }
Vector D23(Scalar s = 1) { return {Scalar(0), Scalar(0), s}; }

}  // namespace

TEST_CASE("Delta coordinates") {
  CHECK(delta_names(3) == std::vector<std::string>{"D1_2", "D1_3", "D2_3"});
  Cocycle c = delta3(Z, D13(), Z);
  CHECK(c[1](0, 2) == Scalar(1));
  CHECK(c[1](2, 0) == Scalar(-1));
  CHECK(c.is_skew());
  CHECK(c.delta_coords()[1] == D13());
  CHECK_THROWS_AS(Cocycle::validated({Matrix::identity(3), Matrix(3, 3), Matrix(3, 3)}), NotACocycle);
}

TEST_CASE("Z2 dimensions of the Jordan algebras") {
  for (const char* n : {"A03", "A04", "A05", "A07", "A08", "A09", "A11", "A12", "A15", "A16"})
    CHECK_MESSAGE(z2_basis(alg(n)).space.generic_dimension == 0, n);
  for (const char* n : {"A01", "A06", "A10"}) CHECK_MESSAGE(z2_basis(alg(n)).space.generic_dimension == 2, n);
  for (const char* n : {"A02_0", "A13_0", "A17_0", "A18_0", "A19_0"})
    CHECK_MESSAGE(z2_basis(alg(n)).space.generic_dimension == 1, n);
  CHECK(z2_basis(alg("A14_0_0")).space.generic_dimension == 6);
}

TEST_CASE("Z2(A01) is spanned by (0, D13, 0) and (0, 0, D13)") {
  CocycleSpace s = z2_basis(alg("A01"));
  REQUIRE(s.basis.size() == 2);
  for (const auto& c : s.basis) {
    auto d = c.delta_coords();
    CHECK(d[0] == Z);
    CHECK(d[1][0].is_zero());
    CHECK(d[1][2].is_zero());
    CHECK(d[2][0].is_zero());
    CHECK(d[2][2].is_zero());
    CHECK(cocycle_law(alg("A01"), c).ok());
  }
}

TEST_CASE("cocycle law variants agree for commutative algebras") {
  for (const char* n : {"A01", "A06", "A14_0_0", "A17_0"})
    for (const auto& c : z2_basis(alg(n)).basis) CHECK(cocycle_law_variant(alg(n), c).ok());
}

TEST_CASE("action of automorphisms") {
  Scalar a = P("alpha"), b = P("beta");
  Cocycle th = delta3(Z, D13(a), D13(b));
  CHECK(act(th, Matrix::identity(3)) == th);

  // A01 normal form.
  Matrix phi{{Scalar(1) / b, Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1) / (b * b), a / b}, {Scalar(0), Scalar(0), Scalar(1)}};
  CHECK(verify_automorphism(alg("A01"), phi).ok());
  CHECK(act(th, phi) == delta3(Z, Z, D13()));

  // A06 normal form.
  Cocycle th6 = delta3(Z, D23(a), D23(b));
  Matrix psi{{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1) / b, a}, {Scalar(0), Scalar(0), b}};
  CHECK(verify_automorphism(alg("A06"), psi).ok());
  CHECK(act(th6, psi) == delta3(Z, Z, D23()));
}

TEST_CASE("automorphism shapes") {
  Scalar a11 = P("a11"), a21 = P("a21"), a23 = P("a23"), a31 = P("a31"), a33 = P("a33");
  Matrix phi{{a11, Scalar(0), Scalar(0)}, {a21, a11 * a11, a23}, {a31, Scalar(0), a33}};
  CHECK(verify_automorphism(alg("A01"), phi).ok());
  for (const char* n : {"A04", "A29", "J18"}) {
    std::size_t d = alg(n).dim;
    CHECK(verify_automorphism(alg(n), Matrix::identity(d)).ok());
  }
  // The swap is an isomorphism A02^a -> A02^-a, not an automorphism.
  Matrix sw{{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}};
  CHECK_FALSE(verify_automorphism(alg("A02"), sw).ok());
  CHECK(verify_automorphism(alg("A02_0"), sw).ok());
}

TEST_CASE("extensions reproduce the tables") {
  CHECK(same_constants(extend(alg("A01"), delta3(Z, Z, D13())), alg("A27")));
  CHECK(same_constants(extend(alg("A01"), delta3(Z, D13(), Z)), alg("A28")));
  CHECK(same_constants(extend(alg("A14_0_0"), delta3(Z, D23(), D12())), alg("A32")));
  CHECK(same_constants(extend(alg("A12"), Cocycle::zero(3)), alg("A12")));
  CHECK_THROWS_AS(extend(alg("A27"), Cocycle::zero(3)), NotCommutative);
  CHECK_THROWS_AS(extend(alg("A04"), delta3(Z, Z, D23())), NotACocycle);
}

TEST_CASE("split of an extension returns its data") {
  Scalar a = P("alpha");
  Cocycle th = delta3(Z, D12(a) , D13(P("beta")));
  AlgebraDef r = extend(alg("A14_0_0"), th);
  PairAlgebraDef p = split(r);
  CHECK(same_constants(circ_part(p), alg("A14_0_0")));
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(bracket_part(p).at(i, j, k) == th[k](i, j));
}
