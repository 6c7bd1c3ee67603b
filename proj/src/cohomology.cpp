#include "algtool/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace algtool {

std::vector<std::pair<std::size_t, std::size_t>> delta_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = l + 1; m < n; ++m) p.emplace_back(l, m);
  return p;
}

std::vector<std::string> delta_names(std::size_t n) {
  std::vector<std::string> out;
  for (auto [l, m] : delta_pairs(n)) out.push_back("D" + std::to_string(l + 1) + "_" + std::to_string(m + 1));
  return out;
}

Cocycle Cocycle::validated(std::vector<Matrix> b) {
  Cocycle c(std::move(b));
  for (const auto& m : c.b_)
    if (m.rows() != c.b_.size() || m.cols() != c.b_.size()) throw ShapeError("cocycle matrices must be n x n");
  if (!c.is_skew()) throw NotACocycle("cocycle matrices are not skew-symmetric");
  return c;
}

Cocycle Cocycle::raw(std::vector<Matrix> b) { return Cocycle(std::move(b)); }

Cocycle Cocycle::zero(std::size_t n) { return Cocycle(std::vector<Matrix>(n, Matrix(n, n))); }

Cocycle Cocycle::from_delta(std::size_t n, const std::vector<Vector>& coords) {
  auto pairs = delta_pairs(n);
  if (coords.size() != n) throw ShapeError("cocycle needs one component per basis vector");
  std::vector<Matrix> b(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i].size() != pairs.size()) throw ShapeError("wrong number of Delta coordinates");
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [l, m] = pairs[p];
      b[i](l, m) = coords[i][p];
      b[i](m, l) = -coords[i][p];
    }
  }
  return Cocycle(std::move(b));
}

Vector Cocycle::apply(const Vector& x, const Vector& y) const {
  Vector out(b_.size());
  for (std::size_t i = 0; i < b_.size(); ++i) {
    Vector by = b_[i] * y;
    for (std::size_t l = 0; l < x.size(); ++l)
      if (!x[l].is_zero() && !by[l].is_zero()) out[i] += x[l] * by[l];
  }
  return out;
}

std::vector<Vector> Cocycle::delta_coords() const {
  std::size_t n = b_.size();
  auto pairs = delta_pairs(n);
  std::vector<Vector> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto [l, m] : pairs) out[i].push_back(b_[i](l, m));
  return out;
}

bool Cocycle::is_skew() const {
  for (const auto& m : b_)
    for (std::size_t l = 0; l < m.rows(); ++l)
      for (std::size_t k = l; k < m.cols(); ++k)
        if (m(l, k) != -m(k, l)) return false;
  return true;
}

std::vector<std::string> Cocycle::params() const {
  std::vector<Scalar> all;
  for (const auto& m : b_)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) all.push_back(m(i, j));
  return occurring_params(all, {});
}

bool operator==(const Cocycle& a, const Cocycle& b) {
  if (a.b_.size() != b.b_.size()) return false;
  for (std::size_t i = 0; i < a.b_.size(); ++i)
    if (a.b_[i] != b.b_[i]) return false;
  return true;
}

std::string Cocycle::to_string() const {
  auto names = delta_names(b_.size());
  std::string s = "(";
  auto coords = delta_coords();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += format_combo(coords[i], names);
  }
  return s + ")";
}

namespace {

Verdict law(const AlgebraDef& j, const Cocycle& theta, bool variant) {
  std::size_t n = j.dim;
  if (theta.dim() != n) throw ShapeError("cocycle dimension does not match the algebra");
  std::vector<Vector> values;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
        Vector lhs, r1, r2;
        if (!variant) {
          lhs = theta.apply(j.basis_product(a, b), ec);
          r1 = product(j, theta.apply(ea, ec), eb);
          r2 = product(j, ea, theta.apply(eb, ec));
        } else {
          lhs = theta.apply(ea, j.basis_product(b, c));
          r1 = product(j, theta.apply(ea, eb), ec);
          r2 = product(j, eb, theta.apply(ea, ec));
        }
        Vector d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = lhs[k] - r1[k] - r2[k];
        values.push_back(std::move(d));
      }
  return zero_verdict(values, variant ? "cocycle law theta(x,y.z)" : "cocycle law theta(x.y,z)");
}

}  // namespace

Verdict cocycle_law(const AlgebraDef& j, const Cocycle& theta) { return law(j, theta, false); }
Verdict cocycle_law_variant(const AlgebraDef& j, const Cocycle& theta) { return law(j, theta, true); }

CocycleSpace z2_basis(const AlgebraDef& j) {
  if (check_identity(j, identity_spec("commutative")).status == Status::Fails)
    throw NotCommutative("Z2 requires a commutative algebra; " + j.name + " is not");
  std::size_t n = j.dim;
  auto pairs = delta_pairs(n);
  std::size_t np = pairs.size();
  auto pair_index = [&](std::size_t l, std::size_t m) {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(l, m)) - pairs.begin();
  };
  std::vector<Vector> rows;
  // Adds coef * theta(e_p, e_c)_k to the row.
  auto add_theta = [&](Vector& row, const Scalar& coef, std::size_t p, std::size_t c, std::size_t k) {
    if (coef.is_zero() || p == c) return;
    if (p < c)
      row[k * np + pair_index(p, c)] += coef;
    else
      row[k * np + pair_index(c, p)] -= coef;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) {
          Vector row(n * np);
          for (std::size_t p = 0; p < n; ++p) add_theta(row, j.at(a, b, p), p, c, k);
          for (std::size_t q = 0; q < n; ++q) {
            add_theta(row, -j.at(q, b, k), a, c, q);
            add_theta(row, -j.at(a, q, k), b, c, q);
          }
          if (std::any_of(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); }))
            rows.push_back(std::move(row));
        }
  CocycleSpace out;
  if (rows.empty()) {
    Matrix m(1, n * np);
    out.space = kernel(m);
  } else {
    out.space = kernel(Matrix::from_rows(rows));
  }
  for (const auto& v : out.space.basis) {
    std::vector<Vector> coords(n);
    for (std::size_t i = 0; i < n; ++i) coords[i] = Vector(v.begin() + i * np, v.begin() + (i + 1) * np);
    out.basis.push_back(Cocycle::from_delta(n, coords));
  }
  return out;
}

Cocycle act(const Cocycle& theta, const Matrix& phi) {
  std::size_t n = theta.dim();
  if (phi.rows() != n || phi.cols() != n) throw ShapeError("phi does not match the cocycle dimension");
  Matrix inv = invert(phi);
  std::vector<Matrix> abstract(n, Matrix(n, n));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      Vector v = inv * theta.apply(phi.col(l), phi.col(m));
      for (std::size_t i = 0; i < n; ++i) abstract[i](l, m) = v[i];
    }
  // Coordinate form B_i' = sum_j b_ij phi^t B_j phi with phi^-1 = (b_ij).
  Matrix pt = phi.transpose();
  std::vector<Matrix> conj;
  for (std::size_t j = 0; j < n; ++j) conj.push_back(pt * theta[j] * phi);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix b(n, n);
    for (std::size_t j = 0; j < n; ++j)
      if (!inv(i, j).is_zero()) b = b + conj[j].scaled(inv(i, j));
    if (b != abstract[i]) throw std::logic_error("act: coordinate and abstract formulas disagree");
  }
  return Cocycle::raw(std::move(abstract));
}

AlgebraDef extend(const AlgebraDef& j, const Cocycle& theta, const std::string& name) {
  if (theta.dim() != j.dim) throw ShapeError("cocycle dimension does not match the algebra");
  if (!theta.is_skew()) throw NotACocycle("cocycle matrices are not skew-symmetric");
  if (!is_commutative(j)) throw NotCommutative(j.name + " is not commutative");
  Verdict law = cocycle_law(j, theta);
  if (!law.ok()) throw NotACocycle(law.summary());
  std::size_t n = j.dim;
  AlgebraDef r = AlgebraDef::zero(name.empty() ? j.name + "+theta" : name, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) r.at(a, b, k) = j.at(a, b, k) + theta[k](a, b);
  std::vector<std::string> declared = j.params;
  for (const auto& p : theta.params()) declared.push_back(p);
  r.params = occurring_params(r.c, declared);
  Verdict ncj = check_identity(r, identity_spec("nc_jordan"));
  if (!ncj.ok()) throw std::logic_error("extension is not noncommutative Jordan: " + ncj.summary());
  PairAlgebraDef p = split(r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t idx = (a * n + b) * n + k;
        if (p.circ[idx] != j.at(a, b, k) || p.bracket[idx] != theta[k](a, b))
          throw std::logic_error("split of the extension does not return (J, theta)");
      }
  return r;
}

Verdict verify_automorphism(const AlgebraDef& j, const Matrix& phi) {
  std::size_t n = j.dim;
  if (phi.rows() != n || phi.cols() != n) throw ShapeError("phi does not match the algebra dimension");
  Vector x = generic_vector(n, "x"), y = generic_vector(n, "y");
  Vector lhs = phi * product(j, x, y);
  Vector rhs = product(j, phi * x, phi * y);
  Vector d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = lhs[k] - rhs[k];
  return zero_verdict({d}, "phi(xy) - phi(x)phi(y)");
}

}  // namespace algtool
