#include "algtool/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace algtool {

std::size_t CatalogEntry::essential_count() const {
  return essential ? essential->size() : algebra.params.size();
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries[it->second];
}

const CatalogEntry& Catalog::at(std::string_view name) const {
  if (const auto* e = find(name)) return *e;
  throw UnknownAlgebra(std::string(name));
}

namespace {

AlgebraDef apply_ref(const CatalogEntry& entry, const AlgebraRef& ref) {
  AlgebraDef a = entry.algebra;
  if (!ref.subs.empty()) {
    for (const auto& [p, v] : ref.subs)
      if (std::find(a.params.begin(), a.params.end(), p) == a.params.end())
        throw Error(ref.text + ": " + entry.algebra.name + " has no parameter '" + p + "'");
    a = substitute(a, to_bindings(ref.subs));
  }
  if (!ref.perm.empty()) {
    if (ref.perm.size() != a.dim) throw Error(ref.text + ": permutation length does not match the dimension");
    Matrix e(a.dim, a.dim);
    for (std::size_t s = 0; s < a.dim; ++s) e(s, ref.perm[s]) = Scalar(1);
    a = change_of_basis(a, e);
  }
  a.name = ref.subs.empty() && ref.perm.empty() ? entry.algebra.name : ref.text;
  return a;
}

}  // namespace

AlgebraDef Catalog::resolve(const AlgebraRef& ref) const { return apply_ref(at(ref.name), ref); }

ParamValues Catalog::excludes_for(const AlgebraRef& ref) const {
  const CatalogEntry& e = at(ref.name);
  Bindings b = to_bindings(ref.subs);
  ParamValues out;
  for (const auto& [p, v] : e.excludes) {
    auto it = std::find_if(ref.subs.begin(), ref.subs.end(), [&](const auto& s) { return s.first == p; });
    if (it == ref.subs.end()) {
      out.emplace_back(p, substitute(v, b));
      continue;
    }
    // Renamed parameter: carry the exclusion over; otherwise it is fixed.
    const Scalar& s = it->second;
    auto vars = s.variables();
    if (s.den().is_constant() && vars.size() == 1 && s == Scalar::param(var_name(vars.front())))
      out.emplace_back(var_name(vars.front()), substitute(v, b));
  }
  return out;
}

void Catalog::finalize(bool require_provenance) {
  index_.clear();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string& name = entries[i].algebra.name;
    if (!index_.emplace(name, i).second) throw DuplicateName(name);
  }
  std::set<std::string> names;
  for (const auto& r : closed_sets)
    if (!names.insert("closedset " + r.name).second) throw DuplicateName(r.name);
  for (const auto& c : collections)
    if (!names.insert("collection " + c.name).second) throw DuplicateName(c.name);
  for (const auto& w : witnesses)
    if (!names.insert("witness " + w.label).second) throw DuplicateName(w.label);

  // Materialise specializations (they may chain).
  std::vector<int> state(entries.size(), 0);
  std::function<void(std::size_t)> build = [&](std::size_t i) {
    if (state[i] == 2) return;
    if (state[i] == 1) throw Error("cyclic specialization at " + entries[i].algebra.name);
    CatalogEntry& e = entries[i];
    if (e.base.empty()) {
      state[i] = 2;
      return;
    }
    state[i] = 1;
    auto it = index_.find(e.base);
    if (it == index_.end()) throw UnknownAlgebra(e.base);
    build(it->second);
    const CatalogEntry& base = entries[it->second];
    AlgebraRef ref{e.base, e.specialization, {}, e.base};
    ParamValues own = e.excludes;
    std::string name = e.algebra.name;
    e.algebra = apply_ref(base, ref);
    e.algebra.name = name;
    e.excludes = excludes_for(ref);
    e.excludes.insert(e.excludes.end(), own.begin(), own.end());
    if (e.essential)
      for (const auto& p : *e.essential)
        if (std::find(e.algebra.params.begin(), e.algebra.params.end(), p) == e.algebra.params.end())
          throw Error(name + ": essential parameter '" + p + "' does not occur");
    state[i] = 2;
  };
  for (std::size_t i = 0; i < entries.size(); ++i) build(i);

  for (const auto& e : entries) {
    if (require_provenance && e.provenance.empty()) throw Error(e.algebra.name + " (" + e.file + ":" + std::to_string(e.line) + ") has no provenance");
    for (const auto& c : e.claims)
      if (c.kind == Claim::Kind::plus_part && !find(c.arg)) throw UnknownAlgebra(c.arg);
  }

  auto check_ref = [&](const AlgebraRef& r) { (void)resolve(r); };
  for (const auto& nw : witnesses) {
    const auto& w = nw.witness;
    AlgebraDef s = resolve(w.source), t = resolve(w.target);
    if (s.dim != w.e.rows()) throw Error(nw.label + ": basis has " + std::to_string(w.e.rows()) + " rows, algebra dimension is " + std::to_string(s.dim));
    std::set<std::string> allowed(s.params.begin(), s.params.end());
    allowed.insert(t.params.begin(), t.params.end());
    allowed.insert(kDegenerationVar);
    const auto& sp = at(w.source.name).algebra.params;
    for (const auto& [p, v] : w.index)
      if (std::find(sp.begin(), sp.end(), p) == sp.end())
        throw Error(nw.label + ": index names unknown parameter '" + p + "'");
    std::vector<Scalar> used;
    for (std::size_t i = 0; i < w.e.rows(); ++i)
      for (std::size_t j = 0; j < w.e.cols(); ++j) used.push_back(w.e(i, j));
    for (const auto& [p, v] : w.index) used.push_back(v);
    for (const auto& p : occurring_params(used, {}))
      if (!allowed.count(p)) throw UndeclaredParameter(nw.label + ": undeclared parameter '" + p + "'", 0, 0);
  }
  for (const auto& r : closed_sets) {
    for (const auto& x : r.sources) check_ref(x);
    for (const auto& x : r.targets) check_ref(x);
    for (const auto& x : r.rejects) check_ref(x);
  }
  for (const auto& w : isomorphisms) {
    AlgebraDef s = resolve(w.source), t = resolve(w.target);
    if (s.dim != t.dim || w.g.rows() != s.dim) throw Error("isomorphism " + w.source.text + " -> " + w.target.text + ": dimensions differ");
  }
  for (const auto& c : collections)
    for (const auto& m : c.members) (void)at(m);
}

Verdict verify_isomorphism(const AlgebraDef& source, const AlgebraDef& target, const Matrix& g) {
  std::size_t n = source.dim;
  if (target.dim != n || g.rows() != n || g.cols() != n) throw ShapeError("isomorphism dimensions differ");
  Scalar d = det(g);
  if (d.is_zero()) throw SingularMatrix(d);
  Vector x = generic_vector(n, "x"), y = generic_vector(n, "y");
  Vector lhs = g * product(source, x, y);
  Vector rhs = product(target, g * x, g * y);
  Vector diff(n);
  for (std::size_t k = 0; k < n; ++k) diff[k] = lhs[k] - rhs[k];
  Verdict v = zero_verdict({diff}, "g(xy) - g(x)g(y)");
  if (v.ok() && !d.is_constant()) {
    v.locus.push_back(d);
    v.status = Status::HoldsGenerically;
  }
  return v;
}

Verdict verify_isomorphism(const IsoWitness& w, const AlgebraResolver& catalog) {
  return verify_isomorphism(catalog.resolve(w.source), catalog.resolve(w.target), w.g);
}

std::string Fingerprint::to_string() const {
  auto b = [](bool x) { return x ? "yes" : "no"; };
  return "(dim " + std::to_string(dim) + ", comm " + b(commutative) + ", anti " + b(anticommutative) + ", A^2 " +
         std::to_string(square) + ", A^3 " + std::to_string(cube) + ", lann " + std::to_string(left_annihilator) +
         ", rann " + std::to_string(right_annihilator) + ", der " + std::to_string(der) + ", A+A+ " +
         std::to_string(circ_square) + ", [A,A] " + std::to_string(bracket_square) + ")";
}

Fingerprint invariant_fingerprint(const AlgebraDef& a) {
  Fingerprint f;
  SubspaceDims s = subspace_products(a);
  f.dim = a.dim;
  f.commutative = s.commutative;
  f.anticommutative = s.anticommutative;
  f.square = s.square;
  f.cube = s.cube;
  f.left_annihilator = s.left_annihilator;
  f.right_annihilator = s.right_annihilator;
  f.der = derivations(a).generic_dimension;
  std::vector<Vector> sym, skew;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i; j < a.dim; ++j) {
      Vector p = a.basis_product(i, j), q = a.basis_product(j, i);
      Vector u(a.dim), v(a.dim);
      for (std::size_t k = 0; k < a.dim; ++k) {
        u[k] = p[k] + q[k];
        v[k] = p[k] - q[k];
      }
      sym.push_back(u);
      skew.push_back(v);
    }
  f.circ_square = rank(Matrix::from_rows(sym));
  f.bracket_square = rank(Matrix::from_rows(skew));
  return f;
}

}  // namespace algtool
