#include "doctest.h"
#include "algtool/degeneration.hpp"
#include "helpers.hpp"

using namespace algtool;
using testing::alg;
using testing::P;

namespace {

const NamedWitness& witness(const std::string& label) {
  for (const auto& w : testing::corpus().witnesses)
    if (w.label == label) return w;
  throw std::runtime_error("no witness " + label);
}

ClosedSet geo1() {
  for (const auto& r : testing::corpus().closed_sets)
    if (r.name == "geo1") return r;
  throw std::runtime_error("no geo1");
}

}  // namespace

TEST_CASE("shipped witnesses") {
  for (const char* l : {"A30->A27", "A19->A02", "J18->J01", "J03->J06", "A32->A33", "A33->A31", "A17->A29"}) {
    DegenerationReport r = verify_degeneration(witness(l).witness, testing::corpus());
    CHECK_MESSAGE(r.passed(), l << ": " << r.detail);
  }
  DegenerationReport bad = verify_degeneration(witness("A19->A13/printed").witness, testing::corpus());
  CHECK(bad.outcome == DegenerationReport::Outcome::Mismatch);
  CHECK(bad.offender == std::array<std::size_t, 3>{1, 3, 3});
}

TEST_CASE("identity basis and pole detection") {
  CHECK(verify_degeneration(alg("A31"), {}, Matrix::identity(3), alg("A31")).passed());
  Scalar t = P("t");
  // Scaling e1 by 1/t blows up e1*e1 = e1.
  Matrix e = Matrix::diagonal({Scalar(1) / t, Scalar(1), Scalar(1)});
  DegenerationReport r = verify_degeneration(alg("A10"), {}, e, AlgebraDef::zero("0", 3));
  CHECK(r.outcome == DegenerationReport::Outcome::NoLimit);
  CHECK_THROWS_AS(verify_degeneration(alg("A10"), {}, Matrix(3, 3), alg("A10")), SingularMatrix);
}

TEST_CASE("derivation dimensions (oracle)") {
  const std::pair<const char*, std::size_t> frozen[] = {
      {"A01", 5}, {"A02", 4}, {"A04", 0}, {"A12", 1}, {"A16", 2}, {"A24", 1}, {"A29", 2}, {"A30", 2},
      {"A32", 0}, {"J01", 6}, {"J03", 4}, {"J06", 5}, {"J17", 4}, {"J18", 4}, {"N2", 5}, {"N3", 5}};
  for (const auto& [n, d] : frozen) CHECK_MESSAGE(derivations(alg(n)).generic_dimension == d, n);
  CHECK(derivations(AlgebraDef::zero("Z", 3)).generic_dimension == 9);
  CHECK(derivations(AlgebraDef::zero("Z", 4)).generic_dimension == 16);
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dimension(alg("A04"), 0).orbit == 9);
  CHECK(orbit_dimension(alg("A02"), 1).family == 6);
  CHECK(orbit_dimension(alg("A14_0_0"), 0).orbit == 3);
  CHECK(orbit_dimension(alg("A24"), 1).family == 9);
}

TEST_CASE("necessary condition") {
  CHECK(necessary_condition(alg("A30"), alg("A27")).ok());
  CHECK_FALSE(necessary_condition(alg("A30"), alg("A30")).ok());
  // Equal Der dimension (4 and 4) also rules out J17 -> J03.
  CHECK_FALSE(necessary_condition(alg("J17"), alg("J03")).ok());
}

TEST_CASE("closed-set membership") {
  ClosedSet r = geo1();
  CHECK(in_closed_set(alg("A29"), r).status == Status::Holds);
  CHECK(in_closed_set(alg("A02"), r).status == Status::Fails);
  ClosedSet empty;
  CHECK(in_closed_set(alg("A02"), empty).status == Status::Holds);
  TargetViolation tv = target_violation(alg("A02"), r);
  CHECK_FALSE(tv.membership.ok());
  CHECK_FALSE(tv.special_values);
}

TEST_CASE("sampling") {
  ClosedSet r = geo1();
  AlgebraDef a2 = substitute(alg("A02"), {{intern("alpha"), Scalar(2)}});
  SampleReport s = borel_sample_against_set(a2, r, 500, 42);
  CHECK_FALSE(s.found_trial.has_value());
  SampleReport m = borel_sample_against_set(alg("A29"), r, 500, 42);
  REQUIRE(m.found_trial.has_value());
  CHECK(*m.found_trial == 1);
  SampleReport z = borel_sample_against_set(a2, r, 0, 42);
  CHECK(z.trials == 0);
  CHECK_FALSE(z.found_trial.has_value());
  // Deterministic in the seed.
  CHECK(borel_sample_against_set(alg("A02"), r, 50, 9).detail ==
        borel_sample_against_set(alg("A02"), r, 50, 9).detail);
}

TEST_CASE("sampled parameters avoid exclusions") {
  Sampler rng(3);
  ParamValues ex{{"alpha", Scalar(0)}};
  for (int i = 0; i < 200; ++i) {
    Bindings b = sample_params(rng, {"alpha"}, ex);
    CHECK_FALSE(b.at(intern("alpha")).is_zero());
  }
}
