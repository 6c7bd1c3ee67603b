#include "doctest.h"
#include "algtool/identities.hpp"
#include "helpers.hpp"

using namespace algtool;
using testing::alg;

namespace {

Status status(const AlgebraDef& a, const char* id) { return check_identity(a, identity_spec(id)).status; }

}  // namespace

TEST_CASE("identity catalogue") {
  CHECK(identity_spec("nc_jordan").arity == 2);
  CHECK_THROWS_AS(identity_spec("moufang"), UnknownIdentity);
  CHECK(identity_names().size() == 13);
}

TEST_CASE("listed memberships") {
  CHECK(status(alg("A29"), "nc_jordan") == Status::Holds);
  CHECK(status(alg("A20"), "anticommutative") == Status::Holds);
  CHECK(status(alg("A04"), "associative") == Status::Holds);
  CHECK(status(alg("J18"), "standard") == Status::Holds);
  CHECK(status(alg("A02"), "kokoris") != Status::Fails);
}

TEST_CASE("failures come with a witness") {
  Verdict v = check_identity(alg("A29"), identity_spec("commutative"));
  REQUIRE(v.status == Status::Fails);
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(v.witness->is_zero());
  CHECK(status(alg("A31"), "kokoris") == Status::Fails);
  CHECK(status(alg("A12"), "associative") == Status::Fails);
}

TEST_CASE("nc_jordan is flexible and jordan") {
  for (const auto& e : testing::corpus().entries) {
    bool nc = status(e.algebra, "nc_jordan") != Status::Fails;
    bool both = status(e.algebra, "flexible") != Status::Fails && status(e.algebra, "jordan") != Status::Fails;
    CHECK_MESSAGE(nc == both, e.algebra.name);
  }
}

TEST_CASE("flipping A27's c31^3 keeps flexibility and breaks the Jordan identity") {
  // The flipped table is commutative, hence flexible; the Jordan identity
  // fails instead (coordinate e3 of (xx,y,x)).
  AlgebraDef a = testing::parse_alg(
      "algebra F\ndim 3\ne1*e1 = e2\ne1*e3 = e3\ne3*e1 = e3\nend\n");
  CHECK(status(a, "flexible") == Status::Holds);
  CHECK(status(a, "jordan") == Status::Fails);
  CHECK(status(a, "nc_jordan") == Status::Fails);
}

TEST_CASE("pair checks agree with one-product checks") {
  for (const char* n : {"A02", "A27", "A29", "A31", "A33", "J14"}) {
    const AlgebraDef& a = alg(n);
    PairAlgebraDef p = split(a);
    CHECK_MESSAGE((status(a, "kokoris") == Status::Fails) ==
                      (check_identity(p, identity_spec("kokoris")).status == Status::Fails),
                  n);
  }
}

TEST_CASE("degree-4 power associativity") {
  for (const char* n : {"A02", "A13", "A27", "A29", "A31", "A32", "A33"})
    CHECK_MESSAGE(check_power_associativity_deg4(alg(n)).ok(), n);
  AlgebraDef toy = testing::parse_alg("algebra T\ndim 2\ne1*e1 = e2\ne2*e1 = e1\nend\n");
  CHECK(check_power_associativity_deg4(toy).status == Status::Fails);
  CHECK(check_power_associativity_deg4(AlgebraDef::zero("Z", 3)).status == Status::Holds);
}

TEST_CASE("parametric checks are symbolic") {
  // A13^alpha is standard only at special alpha.
  CHECK(status(alg("A13"), "standard") == Status::Fails);
  CHECK(status(alg("A13_h"), "standard") == Status::Holds);
  CHECK(status(alg("A14"), "nc_jordan") == Status::Holds);
}
