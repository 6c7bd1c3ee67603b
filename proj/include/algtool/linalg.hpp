#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algtool/scalar.hpp"

namespace algtool {

class ShapeError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(Scalar det)
      : Error("singular matrix (determinant " + det.to_string() + ")"), det_(std::move(det)) {}
  const Scalar& determinant() const { return det_; }

 private:
  Scalar det_;
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("zero vector") {}
};

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  bool is_zero() const;

  std::string to_string() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Vector operator*(const Matrix& m, const Vector& v);
Vector row_times(const Vector& v, const Matrix& m);

struct SolutionSpace {
  std::vector<Vector> basis;
  std::size_t generic_dimension = 0;
  // Parameter-dependent pivots assumed nonzero.
  std::vector<Scalar> exceptional_locus;
  std::vector<std::size_t> pivot_columns;
};

SolutionSpace kernel(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar det(const Matrix& m);
Matrix invert(const Matrix& m);
Matrix normalize_row(const Matrix& x);

std::string locus_to_string(const std::vector<Scalar>& locus);

}  // namespace algtool
