#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algtool/linalg.hpp"
#include "algtool/scalar.hpp"

namespace algtool {

class InvalidPair : public Error {
 public:
  using Error::Error;
};

// Structure constants c_ij^k (coefficient of e_k in e_i e_j), 0-based,
// stored at (i*n + j)*n + k.
struct AlgebraDef {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::vector<Scalar> c;

  static AlgebraDef zero(std::string name, std::size_t n);
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }
  Vector basis_product(std::size_t i, std::size_t j) const;
  bool has_params() const { return !params.empty(); }
};

// Same tables, ignoring names and parameter lists.
bool same_constants(const AlgebraDef& a, const AlgebraDef& b);

struct PairAlgebraDef {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::vector<Scalar> circ;
  std::vector<Scalar> bracket;
};

Vector product(const AlgebraDef& a, const Vector& x, const Vector& y);
// Product for a raw constant table of dimension n.
Vector product(const std::vector<Scalar>& c, std::size_t n, const Vector& x, const Vector& y);

PairAlgebraDef split(const AlgebraDef& a);
AlgebraDef fuse(const PairAlgebraDef& p);
// One-product views of the two halves of a pair.
AlgebraDef circ_part(const PairAlgebraDef& p);
AlgebraDef bracket_part(const PairAlgebraDef& p);

// Rows of E are the new basis vectors written in the old basis.
AlgebraDef change_of_basis(const AlgebraDef& a, const Matrix& e);

// Simultaneous parameter substitution; the parameter list is recomputed.
AlgebraDef substitute(const AlgebraDef& a, const Bindings& b);

// Parameters actually occurring in the constants, in the order of `declared`
// followed by any others sorted by name.
std::vector<std::string> occurring_params(const std::vector<Scalar>& values,
                                          const std::vector<std::string>& declared);

struct SubspaceDims {
  std::size_t square = 0;  // dim A*A
  std::size_t cube = 0;    // dim A*(A*A) + (A*A)*A
  std::size_t left_annihilator = 0;
  std::size_t right_annihilator = 0;
  bool commutative = false;
  bool anticommutative = false;
};

SubspaceDims subspace_products(const AlgebraDef& a);
bool is_commutative(const AlgebraDef& a);
bool is_anticommutative(const AlgebraDef& a);

Vector unit_vector(std::size_t n, std::size_t i);
std::string format_combo(const Vector& v, const std::vector<std::string>& names);
// Catalog-grammar rendering: algebra / dim / params / products / end.
std::string format_algebra(const AlgebraDef& a);

}  // namespace algtool
