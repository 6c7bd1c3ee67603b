#include "algtool/scalar.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace algtool {

std::string to_string(const BigRational& q) { return q.get_str(); }

namespace {

struct SymbolTable {
  std::mutex mu;
  std::unordered_map<std::string, Var> ids;
  std::deque<std::string> names;
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

}  // namespace

Var intern(std::string_view name) {
  auto& s = symbols();
  std::lock_guard lock(s.mu);
  auto it = s.ids.find(std::string(name));
  if (it != s.ids.end()) return it->second;
  Var id = static_cast<Var>(s.names.size());
  s.names.emplace_back(name);
  s.ids.emplace(std::string(name), id);
  return id;
}

const std::string& var_name(Var v) {
  auto& s = symbols();
  std::lock_guard lock(s.mu);
  return s.names.at(v);
}

// ---- Monomial -------------------------------------------------------------

Monomial Monomial::of(Var v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.f_.emplace_back(v, e);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

std::uint32_t Monomial::degree_in(Var v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() && b != o.f_.end()) {
    if (a->first < b->first) {
      r.f_.push_back(*a++);
    } else if (b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      r.f_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.f_.insert(r.f_.end(), a, f_.end());
  r.f_.insert(r.f_.end(), b, o.f_.end());
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  auto b = o.f_.begin();
  for (const auto& [v, e] : f_) {
    while (b != o.f_.end() && b->first < v) ++b;
    if (b == o.f_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  auto a = f_.begin();
  for (const auto& [v, e] : o.f_) {
    while (a != f_.end() && a->first < v) ++a;
    std::uint32_t sub = (a != f_.end() && a->first == v) ? a->second : 0;
    if (e > sub) r.f_.emplace_back(v, e - sub);
  }
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (const auto& f : f_)
    if (f.first != v) r.f_.push_back(f);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto j = b.f_.begin();
  for (const auto& [v, e] : a.f_) {
    while (j != b.f_.end() && j->first < v) ++j;
    if (j != b.f_.end() && j->first == v) r.f_.emplace_back(v, std::min(e, j->second));
  }
  return r;
}

int compare(const Monomial& a, const Monomial& b) {
  auto i = a.f_.begin(), j = b.f_.begin();
  for (; i != a.f_.end() && j != b.f_.end(); ++i, ++j) {
    if (i->first != j->first) return i->first < j->first ? 1 : -1;
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
  }
  if (i != a.f_.end()) return 1;
  if (j != b.f_.end()) return -1;
  return 0;
}

std::string Monomial::to_string() const {
  std::vector<std::pair<std::string, std::uint32_t>> named;
  for (const auto& [v, e] : f_) named.emplace_back(var_name(v), e);
  std::sort(named.begin(), named.end());
  std::string s;
  for (const auto& [n, e] : named) {
    if (!s.empty()) s += '*';
    s += n;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

// ---- MultiPoly ------------------------------------------------------------

MultiPoly::MultiPoly(long c) {
  if (c != 0) t_.push_back({Monomial(), BigRational(c)});
}

MultiPoly::MultiPoly(const BigRational& c) {
  if (c != 0) t_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::variable(Var v) { return term(Monomial::of(v), 1); }

MultiPoly MultiPoly::term(Monomial m, BigRational c) {
  MultiPoly p;
  if (c != 0) p.t_.push_back({std::move(m), std::move(c)});
  return p;
}

BigRational MultiPoly::constant_term() const {
  if (!t_.empty() && t_.back().mono.is_one()) return t_.back().coef;
  return 0;
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<Var> vs;
  for (const auto& t : t_)
    for (const auto& f : t.mono.factors()) vs.push_back(f.first);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::uint32_t MultiPoly::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t MultiPoly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mono.degree_in(v));
  return d;
}

std::uint32_t MultiPoly::min_degree_in(Var v) const {
  if (t_.empty()) return 0;
  std::uint32_t d = UINT32_MAX;
  for (const auto& t : t_) d = std::min(d, t.mono.degree_in(v));
  return d;
}

Monomial MultiPoly::monomial_content() const {
  if (t_.empty()) return {};
  Monomial g = t_.front().mono;
  for (const auto& t : t_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.t_) t.coef = -t.coef;
  return r;
}

namespace {

template <bool Subtract>
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a,
                                   const std::vector<MultiPoly::Term>& b) {
  std::vector<MultiPoly::Term> r;
  r.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    int c = compare(i->mono, j->mono);
    if (c > 0) {
      r.push_back(*i++);
    } else if (c < 0) {
      r.push_back(*j++);
      if constexpr (Subtract) r.back().coef = -r.back().coef;
    } else {
      BigRational s = Subtract ? BigRational(i->coef - j->coef) : BigRational(i->coef + j->coef);
      if (s != 0) r.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) r.push_back(*i);
  for (; j != b.end(); ++j) {
    r.push_back(*j);
    if constexpr (Subtract) r.back().coef = -r.back().coef;
  }
  return r;
}

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return MultiPoly(merge<false>(a.t_, b.t_));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return a;
  return MultiPoly(merge<true>(a.t_, b.t_));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.t_[0].coef);
  if (b.is_constant()) return a.scaled(b.t_[0].coef);
  if (a.t_.size() == 1) return b.times(a.t_[0].mono).scaled(a.t_[0].coef);
  if (b.t_.size() == 1) return a.times(b.t_[0].mono).scaled(b.t_[0].coef);
  std::map<Monomial, BigRational, MonoGreater> acc;
  BigRational prod;
  for (const auto& x : a.t_) {
    for (const auto& y : b.t_) {
      prod = x.coef * y.coef;
      auto [it, fresh] = acc.try_emplace(x.mono * y.mono, prod);
      if (!fresh) it->second += prod;
    }
  }
  std::vector<MultiPoly::Term> r;
  r.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.push_back({m, c});
  return MultiPoly(std::move(r));
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
  if (c == 0) return {};
  MultiPoly r = *this;
  if (c != 1)
    for (auto& t : r.t_) t.coef *= c;
  return r;
}

MultiPoly MultiPoly::times(const Monomial& m) const {
  if (m.is_one()) return *this;
  MultiPoly r = *this;
  for (auto& t : r.t_) t.mono = t.mono * m;  // order is preserved by a monomial order
  return r;
}

MultiPoly MultiPoly::divided_by(const Monomial& m) const {
  if (m.is_one()) return *this;
  MultiPoly r = *this;
  for (auto& t : r.t_) t.mono = m.quotient_of(t.mono);
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return MultiPoly();
  if (b.is_constant()) return a.scaled(1 / b.t_[0].coef);
  if (b.t_.size() == 1) {
    const auto& m = b.t_[0].mono;
    for (const auto& t : a.t_)
      if (!m.divides(t.mono)) return std::nullopt;
    return a.divided_by(m).scaled(1 / b.t_[0].coef);
  }
  for (Var v : b.variables())
    if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;
  const std::uint32_t bound = a.degree();
  const Term& lb = b.leading();
  MultiPoly r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.mono.divides(lr.mono) || lr.mono.degree() > bound) return std::nullopt;
    Term t{lb.mono.quotient_of(lr.mono), lr.coef / lb.coef};
    r = r - b.times(t.mono).scaled(t.coef);
    q.push_back(std::move(t));
  }
  return MultiPoly(std::move(q));
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::at_zero(Var v) const {
  std::vector<Term> r;
  for (const auto& t : t_)
    if (t.mono.degree_in(v) == 0) r.push_back(t);
  return MultiPoly(std::move(r));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].mono == b.t_[i].mono) || a.t_[i].coef != b.t_[i].coef) return false;
  return true;
}

std::string MultiPoly::to_string() const {
  if (t_.empty()) return "0";
  // Print order is name-based so output does not depend on interning order.
  struct Row {
    std::uint32_t deg;
    std::string mono;
    const Term* t;
  };
  std::vector<Row> rows;
  rows.reserve(t_.size());
  for (const auto& t : t_) rows.push_back({t.mono.degree(), t.mono.to_string(), &t});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    return a.mono < b.mono;
  });
  std::string s;
  bool first = true;
  for (const auto& row : rows) {
    BigRational c = row.t->coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (row.mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += row.mono;
    } else {
      s += c.get_str() + '*' + row.mono;
    }
  }
  return s;
}

// ---- Scalar ---------------------------------------------------------------

Scalar::Scalar(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.is_constant()) {
    if (den_.constant_term() != 1) num_ = num_.scaled(1 / den_.constant_term());
    den_ = 1;
    return;
  }
  Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!g.is_one()) {
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
  }
  BigRational lc = den_.leading().coef;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  if (den_.is_constant()) {
    den_ = 1;
    return;
  }
  if (num_ == den_) {
    num_ = 1;
    den_ = 1;
    return;
  }
  if (num_.degree() >= den_.degree()) {
    if (auto q = MultiPoly::divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = 1;
    }
  } else if (!num_.is_constant()) {
    if (auto q = MultiPoly::divide_exact(den_, num_)) {
      // num | den: scalar is 1/q
      BigRational c = q->leading().coef;
      num_ = MultiPoly(1 / c);
      den_ = q->scaled(1 / c);
    }
  }
}

BigRational Scalar::constant() const {
  if (!is_constant()) throw Error("scalar " + to_string() + " is not a constant");
  return num_.constant_term() / den_.constant_term();
}

std::vector<Var> Scalar::variables() const {
  auto a = num_.variables(), b = den_.variables();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

bool is_one(const MultiPoly& p) { return p.is_constant() && p.constant_term() == 1; }

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (is_one(a.den_)) {
      Scalar r;
      r.num_ = a.num_ + b.num_;
      return r;
    }
    return Scalar(a.num_ + b.num_, a.den_);
  }
  if (is_one(a.den_)) return Scalar(a.num_ * b.den_ + b.num_, b.den_);
  if (is_one(b.den_)) return Scalar(a.num_ + b.num_ * a.den_, a.den_);
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (is_one(a.den_) && is_one(b.den_)) {
    Scalar r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  if (a.num_ == b.den_) return Scalar(b.num_, a.den_);
  if (b.num_ == a.den_) return Scalar(a.num_, b.den_);
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (a.num_ == b.num_) return Scalar(b.den_, a.den_);
  if (a.den_ == b.den_) return Scalar(a.num_, b.num_);
  return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::pow(std::uint32_t e) const {
  Scalar r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  if (a.num_.is_zero() || b.num_.is_zero()) return a.num_.is_zero() && b.num_.is_zero();
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string Scalar::to_string() const {
  if (is_one(den_)) return num_.to_string();
  auto wrap = [](const MultiPoly& p) {
    std::string s = p.to_string();
    bool atom = p.terms().size() == 1 &&
                (p.terms()[0].mono.is_one() ? p.terms()[0].coef > 0
                                             : p.terms()[0].coef == 1 && p.terms()[0].mono.factors().size() == 1);
    return atom ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw Error("unknown arithmetic op");
}

Scalar substitute(const MultiPoly& p, const Bindings& b) {
  // Common denominator prod D_v^maxdeg_v avoids pairwise cross-multiplication.
  struct Bound {
    const Scalar* value;
    std::uint32_t maxdeg;
    std::vector<MultiPoly> npow, dpow;
  };
  std::map<Var, Bound> used;
  for (Var v : p.variables()) {
    auto it = b.find(v);
    if (it == b.end()) continue;
    Bound bd{&it->second, p.degree_in(v), {}, {}};
    bd.npow.push_back(MultiPoly(1));
    bd.dpow.push_back(MultiPoly(1));
    for (std::uint32_t k = 1; k <= bd.maxdeg; ++k) {
      bd.npow.push_back(bd.npow.back() * it->second.num());
      bd.dpow.push_back(bd.dpow.back() * it->second.den());
    }
    used.emplace(v, std::move(bd));
  }
  if (used.empty()) return Scalar(p);
  MultiPoly num;
  for (const auto& t : p.terms()) {
    Monomial rest;
    MultiPoly factor(t.coef);
    std::map<Var, std::uint32_t> exps;
    for (const auto& [v, e] : t.mono.factors()) {
      if (used.count(v)) {
        exps[v] = e;
      } else {
        rest = rest * Monomial::of(v, e);
      }
    }
    for (const auto& [v, bd] : used) {
      std::uint32_t e = exps.count(v) ? exps[v] : 0;
      factor = factor * bd.npow[e] * bd.dpow[bd.maxdeg - e];
    }
    num = num + factor.times(rest);
  }
  MultiPoly den(1);
  for (const auto& [v, bd] : used) den = den * bd.dpow[bd.maxdeg];
  return Scalar(num, den);
}

Scalar substitute(const Scalar& s, const Bindings& b) {
  Scalar n = substitute(s.num(), b);
  Scalar d = substitute(s.den(), b);
  if (d.is_zero()) throw DivisionByZero("substitution makes the denominator vanish: " + s.to_string());
  return n / d;
}

std::optional<Scalar> limit_at_zero(const Scalar& s, Var v) {
  if (s.is_zero()) return Scalar();
  std::uint32_t a = s.num().min_degree_in(v), b = s.den().min_degree_in(v);
  if (a < b) return std::nullopt;
  if (a > b) return Scalar();
  MultiPoly n = s.num().divided_by(Monomial::of(v, a)).at_zero(v);
  MultiPoly d = s.den().divided_by(Monomial::of(v, b)).at_zero(v);
  return Scalar(n, d);
}

}  // namespace algtool
