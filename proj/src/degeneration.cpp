#include "algtool/degeneration.hpp"

#include <algorithm>
#include <set>

namespace algtool {

Bindings to_bindings(const ParamValues& values) {
  Bindings b;
  for (const auto& [name, v] : values) b[intern(name)] = v;
  return b;
}

namespace {

std::string cname(std::size_t i, std::size_t j, std::size_t k) {
  return "c" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(k + 1);
}

}  // namespace

DegenerationReport verify_degeneration(const AlgebraDef& source, const ParamValues& index, const Matrix& e,
                                       const AlgebraDef& target) {
  if (source.dim != target.dim) throw ShapeError("source and target dimensions differ");
  DegenerationReport rep;
  AlgebraDef src = index.empty() ? source : substitute(source, to_bindings(index));
  rep.transformed = change_of_basis(src, e);
  std::size_t n = src.dim;
  Var t = intern(kDegenerationVar);
  rep.limit = AlgebraDef::zero(target.name, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto l = limit_at_zero(rep.transformed.at(i, j, k), t);
        if (!l) {
          rep.outcome = DegenerationReport::Outcome::NoLimit;
          rep.offender = {i + 1, j + 1, k + 1};
          rep.detail = "no limit for " + cname(i, j, k) + " = " + rep.transformed.at(i, j, k).to_string();
          return rep;
        }
        rep.limit.at(i, j, k) = std::move(*l);
      }
  rep.limit.params = occurring_params(rep.limit.c, target.params);
  for (std::size_t i = 0; i < n && rep.outcome == DegenerationReport::Outcome::Passed; ++i)
    for (std::size_t j = 0; j < n && rep.outcome == DegenerationReport::Outcome::Passed; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rep.limit.at(i, j, k) != target.at(i, j, k)) {
          rep.outcome = DegenerationReport::Outcome::Mismatch;
          rep.offender = {i + 1, j + 1, k + 1};
          rep.detail = cname(i, j, k) + " -> " + rep.limit.at(i, j, k).to_string() + ", expected " +
                       target.at(i, j, k).to_string();
          break;
        }
  if (is_commutative(src) && !is_commutative(rep.limit)) rep.closure_ok = false;
  if (is_anticommutative(src) && !is_anticommutative(rep.limit)) rep.closure_ok = false;
  if (!rep.closure_ok && rep.detail.empty()) rep.detail = "limit lost (anti)commutativity of the source";
  if (rep.passed()) rep.detail = "all " + std::to_string(n * n * n) + " limits match";
  return rep;
}

DegenerationReport verify_degeneration(const DegenerationWitness& w, const AlgebraResolver& catalog) {
  return verify_degeneration(catalog.resolve(w.source), w.index, w.e, catalog.resolve(w.target));
}

SolutionSpace derivations(const AlgebraDef& a) {
  std::size_t n = a.dim;
  std::vector<Vector> rows;
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n);
        for (std::size_t p = 0; p < n; ++p)
          if (!a.at(i, j, p).is_zero()) row[var(k, p)] += a.at(i, j, p);
        for (std::size_t q = 0; q < n; ++q) {
          if (!a.at(q, j, k).is_zero()) row[var(q, i)] -= a.at(q, j, k);
          if (!a.at(i, q, k).is_zero()) row[var(q, j)] -= a.at(i, q, k);
        }
        if (std::any_of(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); }))
          rows.push_back(std::move(row));
      }
  if (rows.empty()) return kernel(Matrix(1, n * n));
  return kernel(Matrix::from_rows(rows));
}

OrbitDims orbit_dimension(const AlgebraDef& a, std::size_t essential_params) {
  OrbitDims d;
  d.der = derivations(a).generic_dimension;
  d.orbit = a.dim * a.dim - d.der;
  d.family = d.orbit + essential_params;
  return d;
}

Verdict necessary_condition(const AlgebraDef& a, const AlgebraDef& b) {
  if (a.dim != b.dim) throw ShapeError("necessary_condition needs algebras of equal dimension");
  std::size_t da = derivations(a).generic_dimension, db = derivations(b).generic_dimension;
  Verdict v;
  v.where = "dim Der " + a.name + " = " + std::to_string(da) + ", dim Der " + b.name + " = " + std::to_string(db);
  if (da >= db) {
    v.status = Status::Fails;
    v.witness = MultiPoly(static_cast<long>(da) - static_cast<long>(db));
  }
  return v;
}

Var c_symbol(std::size_t i, std::size_t j, std::size_t k) {
  return intern("#c_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k));
}

namespace {

struct Values {
  std::vector<Scalar> v;
  std::vector<std::string> label;
};

Values closed_set_values(const AlgebraDef& a, const ClosedSet& r) {
  std::size_t n = a.dim;
  if (r.dim != n) throw InvalidClosedSet(r.name + " is for dimension " + std::to_string(r.dim));
  Values out;
  Bindings b;
  for (const auto& s : r.symbols) {
    if (s.i < 1 || s.j < 1 || s.k < 1 || s.i > n || s.j > n || s.k > n)
      throw InvalidClosedSet("symbol c_" + std::to_string(s.i) + "_" + std::to_string(s.j) + "_" +
                             std::to_string(s.k) + " out of range");
    b[s.var] = a.at(s.i - 1, s.j - 1, s.k - 1);
  }
  for (const auto& [p, q, rr] : r.spans) {
    if (p < 1 || q < 1 || p > n || q > n || rr < 1 || rr > n + 1)
      throw InvalidClosedSet("span condition out of range");
    for (std::size_t i = p; i <= n; ++i)
      for (std::size_t j = q; j <= n; ++j)
        for (std::size_t k = 1; k < rr; ++k) {
          out.v.push_back(a.at(i - 1, j - 1, k - 1));
          out.label.push_back("A" + std::to_string(p) + "A" + std::to_string(q) + " in A" + std::to_string(rr) +
                              " (" + cname(i - 1, j - 1, k - 1) + ")");
        }
  }
  for (std::size_t e = 0; e < r.equations.size(); ++e) {
    out.v.push_back(substitute(r.equations[e], b));
    out.label.push_back(r.equation_text.size() > e ? r.equation_text[e] : "equation " + std::to_string(e + 1));
  }
  if (r.cube_zero) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector ij = a.basis_product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          Vector l = product(a, ij, unit_vector(n, k));
          Vector rgt = product(a, unit_vector(n, k), ij);
          for (std::size_t m = 0; m < n; ++m) {
            out.v.push_back(l[m]);
            out.label.push_back("A^3 = 0 ((e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + ")e" +
                                std::to_string(k + 1) + ")");
            out.v.push_back(rgt[m]);
            out.label.push_back("A^3 = 0 (e" + std::to_string(k + 1) + "(e" + std::to_string(i + 1) + "e" +
                                std::to_string(j + 1) + "))");
          }
        }
      }
  }
  return out;
}

using UPoly = std::vector<Scalar>;

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

UPoly univariate(const MultiPoly& p, Var v) {
  UPoly u(p.degree_in(v) + 1);
  std::vector<MultiPoly> c(u.size());
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.degree_in(v);
    c[e] = c[e] + MultiPoly::term(t.mono.without(v), t.coef);
  }
  for (std::size_t i = 0; i < c.size(); ++i) u[i] = Scalar(c[i]);
  trim(u);
  return u;
}

UPoly remainder(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Scalar f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rational roots of a polynomial with constant coefficients.
std::vector<BigRational> rational_roots(const UPoly& u) {
  std::vector<BigRational> out;
  for (const auto& c : u)
    if (!c.is_constant()) return out;
  BigInteger l = 1;
  for (const auto& c : u) {
    BigInteger d = c.constant().get_den();
    l = l / gcd(l, d) * d;
  }
  std::vector<BigInteger> z;
  for (const auto& c : u) z.push_back(BigInteger(c.constant() * l));
  std::size_t lo = 0;
  while (lo < z.size() && z[lo] == 0) ++lo;
  if (lo > 0) out.push_back(0);
  if (z.size() - lo < 2) return out;
  auto divisors = [](BigInteger x) {
    std::vector<BigInteger> d;
    x = abs(x);
    if (x > 1000000) return d;
    for (BigInteger k = 1; k <= x; ++k)
      if (x % k == 0) d.push_back(k);
    return d;
  };
  auto eval = [&](const BigRational& r) {
    BigRational acc = 0;
    for (std::size_t i = z.size(); i-- > lo;) acc = acc * r + BigRational(z[i]);
    return acc;
  };
  for (const auto& p : divisors(z[lo]))
    for (const auto& q : divisors(z.back()))
      for (int sign : {1, -1}) {
        BigRational r(p * sign, q);
        r.canonicalize();
        if (eval(r) == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::string upoly_string(const UPoly& u, Var v) {
  Scalar lead = u.back();
  Scalar acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += (u[i] / lead) * Scalar(MultiPoly::term(Monomial::of(v, i), 1));
  return acc.to_string();
}

ClosedSet bind_params(const ClosedSet& r, const Bindings& b) {
  ClosedSet out = r;
  for (auto& e : out.equations) e = substitute(e, b);
  return out;
}

}  // namespace

Verdict in_closed_set(const AlgebraDef& a, const ClosedSet& r) {
  Values vals = closed_set_values(a, r);
  Verdict v;
  for (std::size_t i = 0; i < vals.v.size(); ++i) {
    if (!vals.v[i].is_zero()) {
      v.status = Status::Fails;
      v.witness = vals.v[i].num();
      v.where = vals.label[i];
      return v;
    }
  }
  for (const auto& s : a.c) {
    if (s.is_zero() || s.den().is_constant()) continue;
    Scalar d(s.den());
    if (std::find(v.locus.begin(), v.locus.end(), d) == v.locus.end()) v.locus.push_back(d);
  }
  if (!v.locus.empty()) v.status = Status::HoldsGenerically;
  return v;
}

TargetViolation target_violation(const AlgebraDef& b, const ClosedSet& r) {
  TargetViolation out;
  out.membership = in_closed_set(b, r);
  if (out.membership.ok() || b.params.size() != 1) return out;
  Var v = intern(b.params[0]);
  Values vals = closed_set_values(b, r);
  UPoly g;
  bool first = true;
  for (const auto& s : vals.v) {
    if (s.is_zero()) continue;
    UPoly u = univariate(s.num(), v);
    g = first ? u : gcd(g, u);
    first = false;
    if (g.size() == 1) break;
  }
  if (g.size() > 1) {
    out.special_values = true;
    out.note = "R meets the family where " + upoly_string(g, v) + " = 0";
    for (const auto& r : rational_roots(g)) out.special.emplace_back(b.params[0], Scalar(r));
  } else if (!g.empty() && !g[0].is_constant()) {
    out.note = "violated for every " + b.params[0] + " provided " + g[0].to_string() + " != 0";
  } else {
    out.note = "violated for every " + b.params[0];
  }
  return out;
}

Sampler::Sampler(std::uint64_t seed) : gen_(seed) {}

BigRational Sampler::rational(bool nonzero) {
  for (;;) {
    long num = static_cast<long>(gen_() % 19) - 9;
    long den = static_cast<long>(gen_() % 9) + 1;
    if (nonzero && num == 0) continue;
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }
}

Matrix Sampler::upper_triangular(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = rational(i == j);
  return m;
}

Matrix Sampler::general(std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rational();
    if (!det(m).is_zero()) return m;
  }
}

Bindings sample_params(Sampler& rng, const std::vector<std::string>& names, const ParamValues& excludes) {
  Bindings b;
  for (const auto& name : names) {
    Var v = intern(name);
    for (int attempt = 0;; ++attempt) {
      Scalar value = rng.rational();
      bool clash = false;
      for (const auto& [p, ex] : excludes) {
        if (p != name) continue;
        Scalar e = substitute(ex, b);
        if (e.is_constant() && e == value) clash = true;
      }
      if (!clash || attempt > 1000) {
        b[v] = value;
        break;
      }
    }
  }
  return b;
}

namespace {

std::vector<std::string> union_params(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& x : b)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

}  // namespace

SampleReport borel_sample_against_set(const AlgebraDef& b, const ClosedSet& r, std::size_t trials,
                                      std::uint64_t seed, const ParamValues& excludes) {
  SampleReport rep;
  rep.trials = trials;
  rep.seed = seed;
  ParamValues ex = excludes;
  ex.insert(ex.end(), r.excludes.begin(), r.excludes.end());
  auto names = union_params(b.params, r.params);
  for (std::size_t trial = 1; trial <= trials; ++trial) {
    Sampler rng(seed ^ trial);
    Bindings vals;
    AlgebraDef bs = b;
    ClosedSet rs = r;
    try {
      vals = sample_params(rng, names, ex);
      bs = substitute(b, vals);
      rs = bind_params(r, vals);
    } catch (const DivisionByZero&) {
      continue;
    }
    Matrix e = trial == 1 ? Matrix::identity(b.dim) : (trial % 2 == 0 ? rng.upper_triangular(b.dim) : rng.general(b.dim));
    AlgebraDef img = change_of_basis(bs, e);
    if (in_closed_set(img, rs).ok()) {
      rep.found_trial = trial;
      std::string pv;
      for (const auto& [v, s] : vals) pv += " " + var_name(v) + "=" + s.to_string();
      rep.detail = "representative found at trial " + std::to_string(trial) + " with E = " + e.to_string() + pv;
      return rep;
    }
  }
  rep.detail = trials == 0 ? "vacuous (0 trials)"
                           : "no representative in " + std::to_string(trials) + " trials (heuristic evidence)";
  return rep;
}

SampleReport borel_stability(const AlgebraDef& source, const ClosedSet& r, std::size_t trials, std::uint64_t seed,
                             const ParamValues& excludes) {
  SampleReport rep;
  rep.trials = trials;
  rep.seed = seed;
  ParamValues ex = excludes;
  ex.insert(ex.end(), r.excludes.begin(), r.excludes.end());
  auto names = union_params(source.params, r.params);
  for (std::size_t trial = 1; trial <= trials; ++trial) {
    Sampler rng(seed ^ (trial + 0x9e3779b97f4a7c15ULL));
    Bindings vals;
    AlgebraDef s = source;
    ClosedSet rs = r;
    try {
      vals = sample_params(rng, names, ex);
      s = substitute(source, vals);
      rs = bind_params(r, vals);
    } catch (const DivisionByZero&) {
      continue;
    }
    if (!in_closed_set(s, rs).ok()) continue;  // sampled parameters left R
    Matrix e = rng.upper_triangular(source.dim);
    Verdict v = in_closed_set(change_of_basis(s, e), rs);
    if (!v.ok()) {
      rep.found_trial = trial;
      rep.detail = "upper-triangular E = " + e.to_string() + " leaves R (" + v.where + ")";
      return rep;
    }
  }
  rep.detail = "stable under " + std::to_string(trials) + " sampled upper-triangular changes";
  return rep;
}

}  // namespace algtool
