#include "algtool/expr.hpp"

#include <cctype>
#include <map>

namespace algtool {

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Resolver& resolve, SourcePos pos)
      : s_(text), resolve_(resolve), pos_(pos) {}

  Scalar run() {
    skip();
    if (i_ == s_.size()) fail("empty expression");
    Scalar v = expr();
    skip();
    if (i_ != s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_.line, pos_.column + static_cast<int>(i_));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        std::size_t at = i_;
        Scalar d = unary();
        if (d.is_zero()) {
          i_ = at;
          fail("division by zero");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (eat('^')) {
      skip();
      bool negative = eat('-');
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected an integer exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, i_ - start)));
      if (e > 64) fail("exponent too large");
      Scalar r = base.pow(static_cast<std::uint32_t>(e));
      if (!negative) return r;
      if (r.is_zero()) {
        i_ = start;
        fail("division by zero");
      }
      return Scalar(1) / r;
    }
    return base;
  }

  Scalar primary() {
    skip();
    if (i_ == s_.size()) fail("unexpected end of expression");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Scalar(BigRational(BigInteger(std::string(s_.substr(start, i_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string_view id = s_.substr(start, i_ - start);
      if (auto v = resolve_(id)) return *v;
      i_ = start;
      throw UndeclaredParameter("undeclared symbol '" + std::string(id) + "'", pos_.line,
                                pos_.column + static_cast<int>(start));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const Resolver& resolve_;
  SourcePos pos_;
  std::size_t i_ = 0;
};

std::string stem(std::string_view name) {
  std::size_t k = 0;
  while (k < name.size() && std::isalpha(static_cast<unsigned char>(name[k]))) ++k;
  return std::string(name.substr(0, k));
}

}  // namespace

Scalar parse_expression(std::string_view text, const Resolver& resolve, SourcePos pos) {
  return Parser(text, resolve, pos).run();
}

Resolver params_resolver(const std::vector<std::string>& params) {
  return [params](std::string_view id) -> std::optional<Scalar> {
    for (const auto& p : params)
      if (p == id) return Scalar::param(p);
    return std::nullopt;
  };
}

std::vector<std::string> basis_names(std::size_t n, std::string_view prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(std::string(prefix) + std::to_string(k));
  return out;
}

std::vector<Scalar> parse_linear(std::string_view text, const std::vector<std::string>& markers,
                                 const Resolver& params, SourcePos pos) {
  std::map<std::string, Var, std::less<>> mvars;
  for (const auto& m : markers) mvars.emplace(m, intern("#m:" + m));
  std::string mstem = markers.empty() ? std::string() : stem(markers.front());
  Resolver r = [&](std::string_view id) -> std::optional<Scalar> {
    auto it = mvars.find(id);
    if (it != mvars.end()) return Scalar(MultiPoly::variable(it->second));
    if (auto v = params(id)) return v;
    if (!mstem.empty() && id.size() > mstem.size() && stem(id) == mstem &&
        std::isdigit(static_cast<unsigned char>(id[mstem.size()])))
      throw ParseError("'" + std::string(id) + "' is out of range", pos.line, pos.column);
    return std::nullopt;
  };
  Scalar v = parse_expression(text, r, pos);
  auto is_marker = [&](Var x) {
    for (const auto& [n, mv] : mvars)
      if (mv == x) return true;
    return false;
  };
  for (Var x : v.den().variables())
    if (is_marker(x)) throw ParseError("basis symbol in a denominator", pos.line, pos.column);
  std::vector<MultiPoly> coeff(markers.size());
  for (const auto& t : v.num().terms()) {
    int which = -1;
    Monomial rest;
    for (const auto& [x, e] : t.mono.factors()) {
      if (is_marker(x)) {
        if (which >= 0 || e != 1) throw ParseError("expression is not linear in the basis", pos.line, pos.column);
        for (std::size_t k = 0; k < markers.size(); ++k)
          if (mvars.at(markers[k]) == x) which = static_cast<int>(k);
      } else {
        rest = rest * Monomial::of(x, e);
      }
    }
    if (which < 0) throw ParseError("term without a basis symbol", pos.line, pos.column);
    coeff[which] = coeff[which] + MultiPoly::term(rest, t.coef);
  }
  std::vector<Scalar> out;
  out.reserve(markers.size());
  for (auto& c : coeff) out.push_back(Scalar(std::move(c), v.den()));
  return out;
}

}  // namespace algtool
