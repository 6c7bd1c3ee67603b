#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algtool/algebra.hpp"
#include "algtool/identities.hpp"
#include "algtool/linalg.hpp"

namespace algtool {

class NotCommutative : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

// Pairs (l, m), l < m, in the order used for Delta coordinates: (1,2), (1,3), ..
std::vector<std::pair<std::size_t, std::size_t>> delta_pairs(std::size_t n);
// Marker names D1_2, D1_3, ... matching delta_pairs.
std::vector<std::string> delta_names(std::size_t n);

// theta(x, y) = sum_i (x^t B_i y) e_i; (B_i)(l,m) is the e_i coefficient of
// theta(e_l, e_m).
class Cocycle {
 public:
  Cocycle() = default;
  // Checks skew-symmetry of every B_i.
  static Cocycle validated(std::vector<Matrix> b);
  // No checks; for exercising failure paths.
  static Cocycle raw(std::vector<Matrix> b);
  static Cocycle zero(std::size_t n);
  // coords[i][p] is the coefficient of Delta_{delta_pairs(n)[p]} in B_i.
  static Cocycle from_delta(std::size_t n, const std::vector<Vector>& coords);

  std::size_t dim() const { return b_.size(); }
  const std::vector<Matrix>& matrices() const { return b_; }
  const Matrix& operator[](std::size_t i) const { return b_[i]; }
  Vector apply(const Vector& x, const Vector& y) const;
  std::vector<Vector> delta_coords() const;
  bool is_skew() const;
  std::vector<std::string> params() const;

  friend bool operator==(const Cocycle& a, const Cocycle& b);
  std::string to_string() const;

 private:
  explicit Cocycle(std::vector<Matrix> b) : b_(std::move(b)) {}
  std::vector<Matrix> b_;
};

struct CocycleSpace {
  SolutionSpace space;
  std::vector<Cocycle> basis;
};

// theta(x.y, z) = theta(x, z).y + x.theta(y, z) on basis triples.
Verdict cocycle_law(const AlgebraDef& j, const Cocycle& theta);
// theta(x, y.z) = theta(x, y).z + y.theta(x, z).
Verdict cocycle_law_variant(const AlgebraDef& j, const Cocycle& theta);

CocycleSpace z2_basis(const AlgebraDef& j);

// (theta * phi)(x, y) = phi^-1 theta(phi x, phi y); phi in column convention.
Cocycle act(const Cocycle& theta, const Matrix& phi);

AlgebraDef extend(const AlgebraDef& j, const Cocycle& theta, const std::string& name = {});

Verdict verify_automorphism(const AlgebraDef& j, const Matrix& phi);

}  // namespace algtool
