#include "algtool/linalg.hpp"

#include <algorithm>
#include <utility>

namespace algtool {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != c_) throw ShapeError("ragged matrix literal");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.c_) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const { return Vector(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vector Matrix::col(std::size_t j) const {
  Vector v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw ShapeError("matrix product shape mismatch");
  Matrix p(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw ShapeError("matrix sum shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += b.a_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(-1); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < r_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < c_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

Vector row_times(const Vector& v, const Matrix& m) {
  if (m.rows() != v.size()) throw ShapeError("vector-matrix shape mismatch");
  Vector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[j] += v[i] * m(i, j);
  }
  return out;
}

namespace {

using PolyRows = std::vector<std::vector<MultiPoly>>;

// Scales each row by the product of its distinct denominators so the
// entries become polynomials. Returns the row multipliers.
std::vector<MultiPoly> clear_rows(const Matrix& m, PolyRows& out) {
  std::vector<MultiPoly> mult(m.rows(), MultiPoly(1));
  out.assign(m.rows(), std::vector<MultiPoly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<MultiPoly> dens;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& d = m(i, j).den();
      if (m(i, j).is_zero() || d.is_constant()) continue;
      if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
    }
    for (const auto& d : dens) mult[i] = mult[i] * d;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& x = m(i, j);
      if (x.is_zero()) continue;
      MultiPoly p = x.num();
      for (const auto& d : dens)
        if (d != x.den()) p = p * d;
      out[i][j] = std::move(p);
    }
  }
  return mult;
}

struct Echelon {
  PolyRows m;
  std::vector<std::size_t> pivot_cols;
  std::vector<MultiPoly> pivots;
  int sign = 1;
};

// Fraction-free elimination (Bareiss) with column skipping. Constant pivots
// are preferred, otherwise the first nonzero row in order.
Echelon bareiss(PolyRows m, std::size_t cols) {
  Echelon e;
  std::size_t rows = m.size(), r = 0;
  MultiPoly prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      if (piv == rows) piv = i;
      if (m[i][c].is_constant()) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      e.sign = -e.sign;
    }
    const MultiPoly& p = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        MultiPoly v = p * m[i][j];
        if (!m[i][c].is_zero() && !m[r][j].is_zero()) v = v - m[i][c] * m[r][j];
        if (v.is_zero()) {
          m[i][j] = MultiPoly();
          continue;
        }
        if (!prev.is_constant() || prev.constant_term() != 1) {
          auto q = MultiPoly::divide_exact(v, prev);
          if (!q) throw Error("internal: inexact Bareiss division");
          v = std::move(*q);
        }
        m[i][j] = std::move(v);
      }
      m[i][c] = MultiPoly();
    }
    e.pivot_cols.push_back(c);
    e.pivots.push_back(p);
    prev = p;
    ++r;
  }
  e.m = std::move(m);
  return e;
}

MultiPoly poly_det(PolyRows m) {
  std::size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  Echelon e = bareiss(std::move(m), n);
  if (e.pivot_cols.size() < n) return MultiPoly();
  return e.sign > 0 ? e.pivots.back() : -e.pivots.back();
}

}  // namespace

SolutionSpace kernel(const Matrix& mat) {
  PolyRows rows;
  clear_rows(mat, rows);
  Echelon e = bareiss(std::move(rows), mat.cols());
  SolutionSpace out;
  out.pivot_columns = e.pivot_cols;
  for (const auto& p : e.pivots) {
    if (p.is_constant()) continue;
    Scalar s(p);
    if (std::find(out.exceptional_locus.begin(), out.exceptional_locus.end(), s) == out.exceptional_locus.end())
      out.exceptional_locus.push_back(s);
  }
  std::vector<bool> is_pivot(mat.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < mat.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(mat.cols());
    v[f] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      std::size_t p = e.pivot_cols[k];
      Scalar acc;
      for (std::size_t j = p + 1; j < mat.cols(); ++j)
        if (!e.m[k][j].is_zero() && !v[j].is_zero()) acc += Scalar(e.m[k][j]) * v[j];
      if (!acc.is_zero()) v[p] = -acc / Scalar(e.m[k][p]);
    }
    out.basis.push_back(std::move(v));
  }
  out.generic_dimension = out.basis.size();
  return out;
}

std::size_t rank(const Matrix& m) {
  PolyRows rows;
  clear_rows(m, rows);
  return bareiss(std::move(rows), m.cols()).pivot_cols.size();
}

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  PolyRows rows;
  auto mult = clear_rows(m, rows);
  MultiPoly d = poly_det(std::move(rows));
  MultiPoly den(1);
  for (const auto& x : mult) den = den * x;
  return Scalar(d, den);
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  std::size_t n = m.rows();
  PolyRows p;
  auto mult = clear_rows(m, p);
  MultiPoly d = poly_det(p);
  if (d.is_zero()) throw SingularMatrix(Scalar());
  Matrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = Scalar(mult[0], d);
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // adj(P)(i,j) = (-1)^(i+j) * minor of P without row j and column i
      PolyRows minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<MultiPoly> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(p[r][c]);
        minor.push_back(std::move(row));
      }
      MultiPoly a = poly_det(std::move(minor));
      if (a.is_zero()) continue;
      if ((i + j) % 2) a = -a;
      inv(i, j) = Scalar(a * mult[j], d);
    }
  }
  return inv;
}

Matrix normalize_row(const Matrix& x) {
  if (x.rows() != 1 || x.cols() != 2) throw ShapeError("normalize_row expects a 1x2 matrix");
  const Scalar& a = x(0, 0);
  const Scalar& b = x(0, 1);
  if (!a.is_zero()) return Matrix{{Scalar(1) / a, -b}, {0, a}};
  if (!b.is_zero()) return Matrix{{0, 1}, {Scalar(1) / b, 0}};
  throw ZeroVector();
}

std::string locus_to_string(const std::vector<Scalar>& locus) {
  std::string s;
  for (const auto& c : locus) {
    if (!s.empty()) s += ", ";
    s += c.to_string() + " != 0";
  }
  return s;
}

}  // namespace algtool
