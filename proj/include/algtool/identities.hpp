#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algtool/algebra.hpp"

namespace algtool {

class UnknownIdentity : public Error {
 public:
  explicit UnknownIdentity(std::string_view name) : Error("unknown identity '" + std::string(name) + "'") {}
};

enum class IdentityKind {
  flexible,
  jordan,
  nc_jordan,
  associative,
  commutative,
  anticommutative,
  standard1,
  standard2,
  standard,
  kokoris,
  generic_poisson_compat,
  generic_poisson_jordan,
  fourth_power_assoc,
};

struct IdentitySpec {
  IdentityKind kind;
  std::string name;
  int arity;
};

IdentitySpec identity_spec(std::string_view name);
const std::vector<std::string>& identity_names();

enum class Status { Holds, Fails, HoldsGenerically };
std::string to_string(Status s);

struct Verdict {
  Status status = Status::Holds;
  std::optional<MultiPoly> witness;  // set when Fails
  std::string where;                 // which identity / coordinate failed
  std::vector<Scalar> locus;         // parameter conditions for HoldsGenerically

  bool ok() const { return status != Status::Fails; }
  std::string summary() const;
};

// Fails dominates, then HoldsGenerically (loci are merged).
Verdict conjoin(Verdict a, const Verdict& b);

// Verdict for "every coordinate of every vector is zero".
Verdict zero_verdict(const std::vector<Vector>& values, const std::string& label);

Verdict check_identity(const AlgebraDef& a, const IdentitySpec& id);
Verdict check_identity(const PairAlgebraDef& p, const IdentitySpec& id);
Verdict check_power_associativity_deg4(const AlgebraDef& a);

// n fresh indeterminates named _<stem>1.._<stem>n.
Vector generic_vector(std::size_t n, std::string_view stem);

}  // namespace algtool
