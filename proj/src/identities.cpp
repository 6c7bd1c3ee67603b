#include "algtool/identities.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace algtool {

namespace {

struct Named {
  const char* name;
  IdentityKind kind;
  int arity;
};

constexpr std::array<Named, 13> kIdentities{{
    {"flexible", IdentityKind::flexible, 2},
    {"jordan", IdentityKind::jordan, 2},
    {"nc_jordan", IdentityKind::nc_jordan, 2},
    {"associative", IdentityKind::associative, 3},
    {"commutative", IdentityKind::commutative, 2},
    {"anticommutative", IdentityKind::anticommutative, 1},
    {"standard1", IdentityKind::standard1, 3},
    {"standard2", IdentityKind::standard2, 4},
    {"standard", IdentityKind::standard, 4},
    {"kokoris", IdentityKind::kokoris, 3},
    {"generic_poisson_compat", IdentityKind::generic_poisson_compat, 3},
    {"generic_poisson_jordan", IdentityKind::generic_poisson_jordan, 3},
    {"fourth_power_assoc", IdentityKind::fourth_power_assoc, 1},
}};

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector add(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Generic-vector evaluator over one constant table.
class Table {
 public:
  Table(const std::vector<Scalar>& c, std::size_t n) : c_(c), n_(n) {}
  Vector mul(const Vector& x, const Vector& y) const { return product(c_, n_, x, y); }
  Vector assoc(const Vector& x, const Vector& y, const Vector& z) const {
    return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
  }

 private:
  const std::vector<Scalar>& c_;
  std::size_t n_;
};

struct Generic {
  explicit Generic(std::size_t n)
      : x(generic_vector(n, "x")), y(generic_vector(n, "y")), z(generic_vector(n, "z")), w(generic_vector(n, "w")) {}
  Vector x, y, z, w;
};

Verdict check_table(const std::vector<Scalar>& c, std::size_t n, IdentityKind kind, const Generic& g) {
  Table t(c, n);
  const auto& [x, y, z, w] = g;
  switch (kind) {
    case IdentityKind::flexible:
      return zero_verdict({t.assoc(x, y, x)}, "flexible (x,y,x)");
    case IdentityKind::jordan:
      return zero_verdict({t.assoc(t.mul(x, x), y, x)}, "jordan (xx,y,x)");
    case IdentityKind::nc_jordan:
      return conjoin(check_table(c, n, IdentityKind::flexible, g), check_table(c, n, IdentityKind::jordan, g));
    case IdentityKind::associative:
      return zero_verdict({t.assoc(x, y, z)}, "associative (x,y,z)");
    case IdentityKind::commutative:
      return zero_verdict({sub(t.mul(x, y), t.mul(y, x))}, "commutative xy-yx");
    case IdentityKind::anticommutative:
      return zero_verdict({t.mul(x, x)}, "anticommutative xx");
    case IdentityKind::standard1:
      return zero_verdict({sub(add(t.assoc(x, y, z), t.assoc(z, x, y)), t.assoc(x, z, y))},
                          "standard1 (x,y,z)+(z,x,y)-(x,z,y)");
    case IdentityKind::standard2:
      return zero_verdict(
          {add(add(t.assoc(x, y, t.mul(w, z)), t.assoc(w, y, t.mul(x, z))), t.assoc(z, y, t.mul(w, x)))},
          "standard2 (x,y,wz)+(w,y,xz)+(z,y,wx)");
    case IdentityKind::standard:
      return conjoin(check_table(c, n, IdentityKind::standard1, g), check_table(c, n, IdentityKind::standard2, g));
    case IdentityKind::fourth_power_assoc: {
      Vector x2 = t.mul(x, x);
      return conjoin(zero_verdict({t.assoc(x, x, x)}, "power (x,x,x)"),
                     zero_verdict({sub(t.mul(x2, x2), t.mul(t.mul(x2, x), x))}, "power x2x2-(x2x)x"));
    }
    default:
      break;
  }
  throw Error("identity needs a two-product algebra");
}

Verdict check_pair(const PairAlgebraDef& p, IdentityKind kind, const Generic& g) {
  Table circ(p.circ, p.dim), br(p.bracket, p.dim);
  const auto& [x, y, z, w] = g;
  auto compat = [&] {
    return zero_verdict({sub(br.mul(circ.mul(x, y), z), add(circ.mul(br.mul(x, z), y), circ.mul(x, br.mul(y, z))))},
                        "compat [x.y,z]-[x,z].y-x.[y,z]");
  };
  switch (kind) {
    case IdentityKind::generic_poisson_compat:
      return compat();
    case IdentityKind::kokoris:
      return conjoin(zero_verdict({circ.assoc(x, y, z)}, "circle associative"), compat());
    case IdentityKind::generic_poisson_jordan:
      return conjoin(conjoin(zero_verdict({circ.assoc(circ.mul(x, x), y, x)}, "circle jordan"),
                             zero_verdict({br.mul(x, x)}, "bracket anticommutative [x,x]")),
                     compat());
    default:
      return check_table(fuse(p).c, p.dim, kind, g);
  }
}

}  // namespace

IdentitySpec identity_spec(std::string_view name) {
  for (const auto& n : kIdentities)
    if (name == n.name) return {n.kind, n.name, n.arity};
  throw UnknownIdentity(name);
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& n : kIdentities) v.emplace_back(n.name);
    return v;
  }();
  return names;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::HoldsGenerically: return "HoldsGenerically";
  }
  return "?";
}

std::string Verdict::summary() const {
  std::string s = to_string(status);
  if (status == Status::Fails) {
    s += " at " + where;
    if (witness) s += ": " + witness->to_string();
  } else if (status == Status::HoldsGenerically) {
    s += " (" + locus_to_string(locus) + ")";
  }
  return s;
}

Verdict conjoin(Verdict a, const Verdict& b) {
  if (a.status == Status::Fails) return a;
  if (b.status == Status::Fails) return b;
  for (const auto& l : b.locus)
    if (std::find(a.locus.begin(), a.locus.end(), l) == a.locus.end()) a.locus.push_back(l);
  if (b.status == Status::HoldsGenerically) a.status = Status::HoldsGenerically;
  return a;
}

Verdict zero_verdict(const std::vector<Vector>& values, const std::string& label) {
  Verdict v;
  for (const auto& vec : values) {
    for (std::size_t k = 0; k < vec.size(); ++k) {
      const Scalar& s = vec[k];
      if (!s.num().is_zero()) {
        Verdict f;
        f.status = Status::Fails;
        f.witness = s.num();
        f.where = label + ", coordinate e" + std::to_string(k + 1);
        return f;
      }
    }
  }
  return v;
}

Vector generic_vector(std::size_t n, std::string_view stem) {
  Vector v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(Scalar::param("_" + std::string(stem) + std::to_string(i)));
  return v;
}

namespace {

// Parameter-dependent denominators of the constants become the locus when
// the identity holds.
Verdict with_locus(Verdict v, const std::vector<Scalar>& c) {
  if (v.status == Status::Fails) return v;
  for (const auto& s : c) {
    if (s.is_zero() || s.den().is_constant()) continue;
    Scalar d(s.den());
    if (std::find(v.locus.begin(), v.locus.end(), d) == v.locus.end()) v.locus.push_back(d);
  }
  if (!v.locus.empty()) v.status = Status::HoldsGenerically;
  return v;
}

}  // namespace

Verdict check_identity(const AlgebraDef& a, const IdentitySpec& id) {
  Generic g(a.dim);
  switch (id.kind) {
    case IdentityKind::kokoris:
      return with_locus(conjoin(check_table(a.c, a.dim, IdentityKind::flexible, g),
                                check_pair(split(a), IdentityKind::kokoris, g)),
                        a.c);
    case IdentityKind::generic_poisson_compat:
    case IdentityKind::generic_poisson_jordan:
      return with_locus(check_pair(split(a), id.kind, g), a.c);
    default:
      return with_locus(check_table(a.c, a.dim, id.kind, g), a.c);
  }
}

Verdict check_identity(const PairAlgebraDef& p, const IdentitySpec& id) {
  Generic g(p.dim);
  std::vector<Scalar> all = p.circ;
  all.insert(all.end(), p.bracket.begin(), p.bracket.end());
  return with_locus(check_pair(p, id.kind, g), all);
}

Verdict check_power_associativity_deg4(const AlgebraDef& a) {
  return check_identity(a, identity_spec("fourth_power_assoc"));
}

}  // namespace algtool
