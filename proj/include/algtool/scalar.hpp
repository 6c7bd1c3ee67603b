#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace algtool {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero scalar") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

using BigRational = mpq_class;
using BigInteger = mpz_class;

std::string to_string(const BigRational& q);

// Interned symbol table. Ids are process-wide and stable; the lookup is
// guarded so values can be built from several threads.
using Var = std::uint32_t;
Var intern(std::string_view name);
const std::string& var_name(Var v);

class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t e = 1);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t degree_in(Var v) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Requires divides(*this, o) reversed: returns o / *this.
  Monomial quotient_of(const Monomial& o) const;
  Monomial without(Var v) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Lexicographic order; smaller Var id is the more significant variable.
  friend int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

  std::string to_string() const;

 private:
  std::vector<Factor> f_;  // sorted by Var, exponents > 0
};

class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    BigRational coef;
  };

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(Var v);
  static MultiPoly term(Monomial m, BigRational c);

  // Terms in strictly decreasing lex order, no zero coefficients.
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }
  BigRational constant_term() const;
  const Term& leading() const { return t_.front(); }
  std::vector<Var> variables() const;
  std::uint32_t degree() const;
  std::uint32_t degree_in(Var v) const;
  std::uint32_t min_degree_in(Var v) const;
  Monomial monomial_content() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const BigRational& c) const;
  MultiPoly times(const Monomial& m) const;
  MultiPoly divided_by(const Monomial& m) const;  // m must divide every term
  // Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(std::uint32_t e) const;
  // Value with v set to 0.
  MultiPoly at_zero(Var v) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  explicit MultiPoly(std::vector<Term> t) : t_(std::move(t)) {}
  std::vector<Term> t_;
};

// Element of Q(params): num/den, kept unreduced apart from cheap
// normalisations (monomial content, constant denominators, exact division).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const BigRational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(MultiPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Scalar(MultiPoly num, MultiPoly den);
  static Scalar param(std::string_view name) { return Scalar(MultiPoly::variable(intern(name))); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Value of a constant scalar.
  BigRational constant() const;
  std::vector<Var> variables() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar pow(std::uint32_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  MultiPoly num_;
  MultiPoly den_{1};
};

enum class ArithOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

using Bindings = std::map<Var, Scalar>;
// Simultaneous substitution.
Scalar substitute(const Scalar& s, const Bindings& b);
Scalar substitute(const MultiPoly& p, const Bindings& b);

// nullopt encodes NoLimit.
std::optional<Scalar> limit_at_zero(const Scalar& s, Var v);

}  // namespace algtool
