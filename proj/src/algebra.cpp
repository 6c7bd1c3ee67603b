#include "algtool/algebra.hpp"

#include <algorithm>
#include <set>

#include "algtool/expr.hpp"

namespace algtool {

AlgebraDef AlgebraDef::zero(std::string name, std::size_t n) {
  AlgebraDef a;
  a.name = std::move(name);
  a.dim = n;
  a.c.assign(n * n * n, Scalar());
  return a;
}

Vector AlgebraDef::basis_product(std::size_t i, std::size_t j) const {
  return Vector(c.begin() + (i * dim + j) * dim, c.begin() + (i * dim + j + 1) * dim);
}

bool same_constants(const AlgebraDef& a, const AlgebraDef& b) {
  if (a.dim != b.dim) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

Vector product(const std::vector<Scalar>& c, std::size_t n, const Vector& x, const Vector& y) {
  if (x.size() != n || y.size() != n) throw ShapeError("vector length does not match the algebra dimension");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar* row = &c[(i * n + j) * n];
      bool any = false;
      for (std::size_t k = 0; k < n && !any; ++k) any = !row[k].is_zero();
      if (!any) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!row[k].is_zero()) out[k] += xy * row[k];
    }
  }
  return out;
}

Vector product(const AlgebraDef& a, const Vector& x, const Vector& y) { return product(a.c, a.dim, x, y); }

PairAlgebraDef split(const AlgebraDef& a) {
  PairAlgebraDef p;
  p.name = a.name;
  p.dim = a.dim;
  p.params = a.params;
  std::size_t n = a.dim;
  p.circ.assign(a.c.size(), Scalar());
  p.bracket.assign(a.c.size(), Scalar());
  const Scalar half = BigRational(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& x = a.at(i, j, k);
        const Scalar& y = a.at(j, i, k);
        std::size_t idx = (i * n + j) * n + k;
        p.circ[idx] = (x + y) * half;
        p.bracket[idx] = (x - y) * half;
      }
  return p;
}

AlgebraDef fuse(const PairAlgebraDef& p) {
  std::size_t n = p.dim;
  if (p.circ.size() != n * n * n || p.bracket.size() != n * n * n) throw InvalidPair("table size mismatch");
  AlgebraDef a = AlgebraDef::zero(p.name, n);
  a.params = p.params;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t ij = (i * n + j) * n + k, ji = (j * n + i) * n + k;
        if (p.circ[ij] != p.circ[ji])
          throw InvalidPair("circle product is not symmetric at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
        if (p.bracket[ij] != -p.bracket[ji])
          throw InvalidPair("bracket is not antisymmetric at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
        a.c[ij] = p.circ[ij] + p.bracket[ij];
      }
  return a;
}

AlgebraDef circ_part(const PairAlgebraDef& p) {
  AlgebraDef a{p.name + "+", p.dim, p.params, p.circ};
  return a;
}

AlgebraDef bracket_part(const PairAlgebraDef& p) {
  AlgebraDef a{p.name + "-", p.dim, p.params, p.bracket};
  return a;
}

std::vector<std::string> occurring_params(const std::vector<Scalar>& values,
                                          const std::vector<std::string>& declared) {
  std::set<std::string> seen;
  for (const auto& v : values)
    for (Var x : v.variables()) seen.insert(var_name(x));
  std::vector<std::string> out;
  for (const auto& p : declared)
    if (seen.erase(p)) out.push_back(p);
  out.insert(out.end(), seen.begin(), seen.end());
  return out;
}

AlgebraDef change_of_basis(const AlgebraDef& a, const Matrix& e) {
  std::size_t n = a.dim;
  if (e.rows() != n || e.cols() != n) throw ShapeError("basis matrix does not match the algebra dimension");
  Matrix inv = invert(e);
  AlgebraDef r = AlgebraDef::zero(a.name, n);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(e.row(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector w = row_times(product(a, rows[i], rows[j]), inv);
      for (std::size_t k = 0; k < n; ++k) r.at(i, j, k) = std::move(w[k]);
    }
  r.params = occurring_params(r.c, a.params);
  return r;
}

AlgebraDef substitute(const AlgebraDef& a, const Bindings& b) {
  AlgebraDef r = a;
  for (auto& x : r.c) x = substitute(x, b);
  r.params = occurring_params(r.c, a.params);
  return r;
}

bool is_commutative(const AlgebraDef& a) {
  std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.at(i, j, k) != a.at(j, i, k)) return false;
  return true;
}

bool is_anticommutative(const AlgebraDef& a) {
  std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.at(i, j, k) != -a.at(j, i, k)) return false;
  return true;
}

SubspaceDims subspace_products(const AlgebraDef& a) {
  std::size_t n = a.dim;
  SubspaceDims d;
  std::vector<Vector> sq;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = a.basis_product(i, j);
      if (std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); })) sq.push_back(std::move(v));
    }
  d.square = sq.empty() ? 0 : rank(Matrix::from_rows(sq));
  std::vector<Vector> cube;
  for (const auto& v : sq)
    for (std::size_t i = 0; i < n; ++i) {
      Vector l = product(a, unit_vector(n, i), v), r = product(a, v, unit_vector(n, i));
      for (Vector* w : {&l, &r})
        if (std::any_of(w->begin(), w->end(), [](const Scalar& s) { return !s.is_zero(); })) cube.push_back(*w);
    }
  d.cube = cube.empty() ? 0 : rank(Matrix::from_rows(cube));
  Matrix left(n * n, n), right(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        left(j * n + k, i) = a.at(i, j, k);
        right(i * n + k, j) = a.at(i, j, k);
      }
  d.left_annihilator = n - rank(left);
  d.right_annihilator = n - rank(right);
  d.commutative = is_commutative(a);
  d.anticommutative = is_anticommutative(a);
  return d;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

std::string format_combo(const Vector& v, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Scalar& c = v[k];
    if (c.is_zero()) continue;
    std::string term;
    bool neg = false;
    Scalar a = c;
    if (c.den().is_constant() && c.num().terms().size() == 1 && c.num().leading().coef < 0) {
      neg = true;
      a = -c;
    }
    std::string cs = a.to_string();
    if (cs == "1") {
      term = names[k];
    } else {
      bool atomic = a.den().is_constant() && a.num().terms().size() == 1;
      term = (atomic ? cs : "(" + cs + ")") + "*" + names[k];
    }
    if (s.empty()) {
      s = neg ? "-" + term : term;
    } else {
      s += (neg ? " - " : " + ") + term;
    }
  }
  return s.empty() ? "0" : s;
}

std::string format_algebra(const AlgebraDef& a) {
  std::string s = "algebra " + a.name + "\ndim " + std::to_string(a.dim) + "\n";
  if (!a.params.empty()) {
    s += "params";
    for (const auto& p : a.params) s += " " + p;
    s += "\n";
  }
  auto names = basis_names(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vector v = a.basis_product(i, j);
      if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); })) continue;
      s += names[i] + "*" + names[j] + " = " + format_combo(v, names) + "\n";
    }
  return s + "end\n";
}

}  // namespace algtool
