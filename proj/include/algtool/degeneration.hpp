#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algtool/algebra.hpp"
#include "algtool/identities.hpp"
#include "algtool/linalg.hpp"

namespace algtool {

class UnknownAlgebra : public Error {
 public:
  explicit UnknownAlgebra(const std::string& name) : Error("unknown algebra '" + name + "'") {}
};

class InvalidClosedSet : public Error {
 public:
  using Error::Error;
};

using ParamValues = std::vector<std::pair<std::string, Scalar>>;

// NAME, NAME{p=expr,...}, optionally followed by @i,j,k (basis relabelling:
// new e_s is old e_{perm[s]}).
struct AlgebraRef {
  std::string name;
  ParamValues subs;
  std::vector<std::size_t> perm;  // 0-based, empty = identity
  std::string text;
};

class AlgebraResolver {
 public:
  virtual ~AlgebraResolver() = default;
  virtual AlgebraDef resolve(const AlgebraRef& ref) const = 0;
};

Bindings to_bindings(const ParamValues& values);

struct DegenerationWitness {
  AlgebraRef source;
  ParamValues index;  // source parameter -> expression in t
  Matrix e;           // rows: new basis in terms of the old one
  AlgebraRef target;
  std::string provenance;
  bool expect_failure = false;  // documented misprint kept as a negative check
};

struct DegenerationReport {
  enum class Outcome { Passed, NoLimit, Mismatch };
  Outcome outcome = Outcome::Passed;
  std::array<std::size_t, 3> offender{};  // 1-based (i, j, k)
  AlgebraDef limit;
  AlgebraDef transformed;  // constants before the limit
  bool closure_ok = true;  // commutativity / anticommutativity carried to the limit
  std::string detail;

  bool passed() const { return outcome == Outcome::Passed && closure_ok; }
};

// Degeneration parameter name.
inline constexpr const char* kDegenerationVar = "t";

DegenerationReport verify_degeneration(const DegenerationWitness& w, const AlgebraResolver& catalog);
DegenerationReport verify_degeneration(const AlgebraDef& source, const ParamValues& index, const Matrix& e,
                                       const AlgebraDef& target);

SolutionSpace derivations(const AlgebraDef& a);

struct OrbitDims {
  std::size_t der = 0;
  std::size_t orbit = 0;
  std::size_t family = 0;
};
OrbitDims orbit_dimension(const AlgebraDef& a, std::size_t essential_params);

Verdict necessary_condition(const AlgebraDef& a, const AlgebraDef& b);

struct CSymbol {
  Var var;
  std::size_t i, j, k;  // 1-based
};

struct ClosedSet {
  std::string name;
  std::size_t dim = 3;
  std::vector<std::string> params;
  std::vector<Scalar> equations;  // polynomials in c symbols, = 0
  std::vector<std::string> equation_text;
  std::vector<CSymbol> symbols;
  std::vector<std::array<std::size_t, 3>> spans;  // A_p A_q in A_r, 1-based
  bool cube_zero = false;                          // (AA)A = A(AA) = 0
  std::vector<AlgebraRef> sources, targets, rejects;
  ParamValues excludes;  // parameter exclusions, e.g. b = a
  std::string provenance;
};

// Interned variable for the symbol c_i_j_k.
Var c_symbol(std::size_t i, std::size_t j, std::size_t k);

Verdict in_closed_set(const AlgebraDef& a, const ClosedSet& r);

struct TargetViolation {
  Verdict membership;       // Fails means the target violates R
  std::string note;         // special parameter values or locus information
  bool special_values = false;
  ParamValues special;      // rational parameter values where the target meets R
};
// Non-membership of a target with univariate analysis of the violated
// equations in its single parameter.
TargetViolation target_violation(const AlgebraDef& b, const ClosedSet& r);

// Sampling ------------------------------------------------------------------

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);
  BigRational rational(bool nonzero = false);
  Matrix upper_triangular(std::size_t n);
  Matrix general(std::size_t n);

 private:
  std::mt19937_64 gen_;
};

// Draws values for every listed parameter, avoiding the exclusions.
Bindings sample_params(Sampler& rng, const std::vector<std::string>& names, const ParamValues& excludes);

struct SampleReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> found_trial;  // 1-based
  std::string detail;
};

SampleReport borel_sample_against_set(const AlgebraDef& b, const ClosedSet& r, std::size_t trials,
                                      std::uint64_t seed, const ParamValues& excludes = {});

// Sampled upper-triangular stability of R at a member algebra.
SampleReport borel_stability(const AlgebraDef& source, const ClosedSet& r, std::size_t trials, std::uint64_t seed,
                             const ParamValues& excludes = {});

}  // namespace algtool
