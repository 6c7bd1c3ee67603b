#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "algtool/catalog.hpp"

namespace algtool {

namespace {

std::string format_file_error(const std::string& file, const ParseError& e) {
  return file + ":" + e.what();
}

}  // namespace

CatalogParseError::CatalogParseError(const std::string& file, const ParseError& e)
    : ParseError(e), file_(file), full_(format_file_error(file, e)) {}

namespace {

struct Line {
  int no = 0;
  std::string body;  // comment stripped, trimmed
  int col = 1;       // column of body[0]
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++no;
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    std::size_t b = 0, e = raw.size();
    while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    if (e > b) out.push_back({no, std::string(raw.substr(b, e - b)), static_cast<int>(b) + 1});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

// First whitespace-delimited word and the trimmed remainder (with its column).
struct Split {
  std::string head;
  std::string rest;
  int rest_col;
};

Split split_head(const Line& l) {
  const std::string& s = l.body;
  std::size_t k = 0;
  while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  std::size_t r = k;
  while (r < s.size() && std::isspace(static_cast<unsigned char>(s[r]))) ++r;
  return {s.substr(0, k), s.substr(r), l.col + static_cast<int>(r)};
}

[[noreturn]] void fail(const std::string& msg, const Line& l, int col = 0) {
  throw ParseError(msg, l.no, col ? col : l.col);
}

bool is_param_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

bool is_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Any lowercase identifier is a parameter; cross-checked after loading.
std::optional<Scalar> any_param(std::string_view id) {
  if (is_param_name(id)) return Scalar::param(id);
  return std::nullopt;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Splits on whitespace outside braces.
std::vector<std::pair<std::string, int>> split_refs(const std::string& s, int col) {
  std::vector<std::pair<std::string, int>> out;
  int depth = 0;
  std::string cur;
  int start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    char c = i < s.size() ? s[i] : ' ';
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.emplace_back(cur, col + start);
      cur.clear();
      continue;
    }
    if (cur.empty()) start = static_cast<int>(i);
    cur += c;
  }
  return out;
}

// Splits on commas at parenthesis depth zero.
std::vector<std::pair<std::string, int>> split_commas(std::string_view s, int col) {
  std::vector<std::pair<std::string, int>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    char c = i < s.size() ? s[i] : ',';
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back(std::string(s.substr(start, i - start)), col + static_cast<int>(start));
      start = i + 1;
    }
  }
  return out;
}

long parse_count(const std::string& s, const Line& l, int col) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail("expected a nonnegative integer, got '" + s + "'", l, col);
  return std::stol(s);
}

// p = expr
std::pair<std::string, Scalar> parse_assignment(const std::string& s, int col, const Line& l, const Resolver& r) {
  auto eq = s.find('=');
  if (eq == std::string::npos) fail("expected '<param> = <value>'", l, col);
  std::string name = s.substr(0, eq);
  name.erase(name.find_last_not_of(" \t") + 1);
  name.erase(0, name.find_first_not_of(" \t"));
  if (!is_param_name(name)) fail("'" + name + "' is not a parameter name", l, col);
  return {name, parse_expression(std::string_view(s).substr(eq + 1), r, {l.no, col + static_cast<int>(eq) + 1})};
}

struct Block {
  const std::vector<Line>& lines;
  std::size_t& i;
  const Line& header;

  // Next line inside the block; nullptr at `end`.
  const Line* next() {
    ++i;
    if (i >= lines.size()) fail("missing 'end' for block", header);
    if (lines[i].body == "end") return nullptr;
    return &lines[i];
  }
};

// n == 0: the dimension is not known here, so structural claims are refused.
Claim parse_claim(const Line& line, const Split& sp, std::size_t n, const Resolver& pr) {
  const Line* l = &line;
  Line inner{l->no, sp.rest, sp.rest_col};
  Split c = split_head(inner);
  Claim claim;
  claim.line = l->no;
  if (c.head == "plus_part" || c.head == "cocycle") {
    if (n == 0) fail("claim '" + c.head + "' is not supported on specializations", *l, c.rest_col);
  }
  if (c.head == "identity" || c.head == "fails") {
    claim.kind = c.head == "identity" ? Claim::Kind::identity : Claim::Kind::fails;
    try {
      identity_spec(c.rest);
    } catch (const UnknownIdentity& e) {
      fail(e.what(), *l, c.rest_col);
    }
    claim.arg = c.rest;
  } else if (c.head == "der_dim" || c.head == "z2_dim") {
    claim.kind = c.head == "der_dim" ? Claim::Kind::der_dim : Claim::Kind::z2_dim;
    claim.value = parse_count(c.rest, *l, c.rest_col);
  } else if (c.head == "orbit_dim") {
    claim.kind = Claim::Kind::orbit_dim;
    auto w = words(c.rest);
    if (w.empty() || w.size() > 2 || (w.size() == 2 && w[1] != "family"))
      fail("expected 'claim orbit_dim <n> [family]'", *l, c.rest_col);
    claim.value = parse_count(w[0], *l, c.rest_col);
    claim.family = w.size() == 2;
  } else if (c.head == "plus_part") {
    claim.kind = Claim::Kind::plus_part;
    if (!is_name(c.rest)) fail("expected an algebra name", *l, c.rest_col);
    claim.arg = c.rest;
  } else if (c.head == "cocycle") {
    claim.kind = Claim::Kind::cocycle;
    std::string body = c.rest;
    int col = c.rest_col;
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
      fail("expected '(<B1>, ..., <Bn>)' in Delta coordinates", *l, col);
    auto parts = split_commas(std::string_view(body).substr(1, body.size() - 2), col + 1);
    if (parts.size() != n) fail("cocycle needs " + std::to_string(n) + " components", *l, col);
    auto dn = delta_names(n);
    for (const auto& [text, pc] : parts) {
      auto v = parse_linear(text, dn, pr, {l->no, pc});
      claim.cocycle.push_back(Vector(v.begin(), v.end()));
    }
  } else {
    fail("unknown claim '" + c.head + "'", *l, c.rest_col - static_cast<int>(c.head.size()) - 1);
  }
  return claim;
}

void parse_algebra(Catalog& cat, Block blk, const std::string& name, const std::string& file) {
  CatalogEntry entry;
  entry.file = file;
  entry.line = blk.header.no;
  std::size_t n = 0;
  std::vector<std::string> params;
  std::vector<std::pair<const Line*, Split>> deferred;
  bool params_seen = false;
  while (const Line* l = blk.next()) {
    Split sp = split_head(*l);
    if (sp.head == "dim") {
      if (n) fail("duplicate 'dim'", *l);
      n = static_cast<std::size_t>(parse_count(sp.rest, *l, sp.rest_col));
      if (n == 0) fail("dimension must be positive", *l, sp.rest_col);
    } else if (sp.head == "params") {
      if (params_seen) fail("duplicate 'params'", *l);
      params_seen = true;
      for (const auto& w : words(sp.rest)) {
        if (!is_param_name(w)) fail("'" + w + "' is not a parameter name", *l, sp.rest_col);
        if (w == kDegenerationVar) fail("'t' is reserved for degenerations", *l, sp.rest_col);
        if (std::find(params.begin(), params.end(), w) != params.end()) fail("duplicate parameter " + w, *l);
        params.push_back(w);
      }
    } else {
      deferred.emplace_back(l, sp);
    }
  }
  if (n == 0) fail("algebra " + name + " has no 'dim'", blk.header);
  entry.algebra = AlgebraDef::zero(name, n);
  entry.algebra.params = params;
  Resolver pr = params_resolver(params);
  auto markers = basis_names(n);
  std::vector<bool> seen(n * n, false);
  for (const auto& [l, sp] : deferred) {
    if (sp.head == "provenance") {
      entry.provenance = sp.rest;
    } else if (sp.head == "exclude") {
      entry.excludes.push_back(parse_assignment(sp.rest, sp.rest_col, *l, pr));
      if (std::find(params.begin(), params.end(), entry.excludes.back().first) == params.end())
        throw UndeclaredParameter("undeclared parameter '" + entry.excludes.back().first + "'", l->no, sp.rest_col);
    } else if (sp.head == "essential") {
      std::vector<std::string> ess;
      for (const auto& w : words(sp.rest)) {
        if (std::find(params.begin(), params.end(), w) == params.end())
          throw UndeclaredParameter("undeclared parameter '" + w + "'", l->no, sp.rest_col);
        ess.push_back(w);
      }
      entry.essential = ess;
    } else if (sp.head == "claim") {
      entry.claims.push_back(parse_claim(*l, sp, n, pr));
    } else if (sp.head.rfind('e', 0) == 0 && sp.head.find('*') != std::string::npos) {
      // e<i>*e<j> = combo; the head may also hold the '=' if written without spaces.
      const std::string& body = l->body;
      auto eq = body.find('=');
      if (eq == std::string::npos) fail("expected 'e<i>*e<j> = <combination>'", *l);
      std::string lhs = body.substr(0, eq);
      lhs.erase(std::remove_if(lhs.begin(), lhs.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                lhs.end());
      auto star = lhs.find('*');
      auto index_of = [&](const std::string& s) -> std::size_t {
        if (s.size() < 2 || s[0] != 'e' ||
            !std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          fail("expected a basis vector, got '" + s + "'", *l);
        std::size_t k = std::stoul(s.substr(1));
        if (k < 1 || k > n) fail("'" + s + "' is out of range", *l);
        return k - 1;
      };
      std::size_t a = index_of(lhs.substr(0, star)), b = index_of(lhs.substr(star + 1));
      if (seen[a * n + b]) fail("product " + lhs + " given twice", *l);
      seen[a * n + b] = true;
      auto v = parse_linear(std::string_view(body).substr(eq + 1), markers, pr, {l->no, l->col + static_cast<int>(eq) + 1});
      for (std::size_t k = 0; k < n; ++k) entry.algebra.at(a, b, k) = v[k];
    } else {
      fail("unknown line '" + sp.head + "' in algebra block", *l);
    }
  }
  cat.entries.push_back(std::move(entry));
}

void parse_specialize(Catalog& cat, Block blk, const Split& head, const std::string& file) {
  // specialize NAME = BASE{p=v,...}
  auto eq = head.rest.find('=');
  if (eq == std::string::npos) fail("expected 'specialize <NAME> = <BASE>{p=v,...}'", blk.header);
  std::string name = head.rest.substr(0, eq);
  name.erase(name.find_last_not_of(" \t") + 1);
  if (!is_name(name)) fail("invalid name '" + name + "'", blk.header, head.rest_col);
  std::size_t off = eq + 1;
  while (off < head.rest.size() && std::isspace(static_cast<unsigned char>(head.rest[off]))) ++off;
  AlgebraRef ref = parse_ref(head.rest.substr(off), {blk.header.no, head.rest_col + static_cast<int>(off)});
  if (!ref.perm.empty()) fail("specializations cannot relabel the basis", blk.header, head.rest_col);
  CatalogEntry entry;
  entry.file = file;
  entry.line = blk.header.no;
  entry.algebra.name = name;
  entry.base = ref.name;
  entry.specialization = ref.subs;
  while (const Line* l = blk.next()) {
    Split sp = split_head(*l);
    Resolver r = any_param;
    if (sp.head == "provenance") {
      entry.provenance = sp.rest;
    } else if (sp.head == "exclude") {
      entry.excludes.push_back(parse_assignment(sp.rest, sp.rest_col, *l, r));
    } else if (sp.head == "essential") {
      entry.essential = words(sp.rest);
    } else if (sp.head == "claim") {
      entry.claims.push_back(parse_claim(*l, sp, 0, r));
    } else {
      fail("unknown line '" + sp.head + "' in specialize block", *l);
    }
  }
  cat.entries.push_back(std::move(entry));
}

void parse_degeneration(Catalog& cat, Block blk, const Split& head) {
  auto arrow = head.rest.find("->");
  if (arrow == std::string::npos) fail("expected 'degeneration <SRC> -> <TGT>'", blk.header);
  NamedWitness nw;
  std::string src = head.rest.substr(0, arrow), tgt = head.rest.substr(arrow + 2);
  auto trim_col = [](std::string& s, int col) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) b = s.size();
    s = s.substr(b);
    s.erase(s.find_last_not_of(" \t") + 1);
    return col + static_cast<int>(b);
  };
  int sc = trim_col(src, head.rest_col);
  int tc = trim_col(tgt, head.rest_col + static_cast<int>(arrow) + 2);
  nw.witness.source = parse_ref(src, {blk.header.no, sc});
  nw.witness.target = parse_ref(tgt, {blk.header.no, tc});
  std::vector<std::pair<const Line*, Split>> rows;
  while (const Line* l = blk.next()) {
    Split sp = split_head(*l);
    if (sp.head == "provenance") {
      nw.witness.provenance = sp.rest;
    } else if (sp.head == "label") {
      nw.label = sp.rest;
    } else if (sp.head == "index") {
      nw.witness.index.push_back(parse_assignment(sp.rest, sp.rest_col, *l, any_param));
    } else if (sp.head == "expect") {
      if (sp.rest != "fails") fail("expected 'expect fails'", *l, sp.rest_col);
      nw.witness.expect_failure = true;
    } else if (sp.head.size() >= 2 && sp.head[0] == 'E' && std::isdigit(static_cast<unsigned char>(sp.head[1]))) {
      rows.emplace_back(l, sp);
    } else {
      fail("unknown line '" + sp.head + "' in degeneration block", *l);
    }
  }
  std::size_t n = rows.size();
  if (n == 0) fail("degeneration without basis rows", blk.header);
  auto markers = basis_names(n);
  std::vector<Vector> e(n);
  std::vector<bool> seen(n, false);
  for (const auto& [l, sp] : rows) {
    std::string lhs = sp.head;
    auto eq = l->body.find('=');
    if (eq == std::string::npos) fail("expected 'E<i> = <combination>'", *l);
    lhs = l->body.substr(0, eq);
    lhs.erase(lhs.find_last_not_of(" \t") + 1);
    std::size_t k = 0;
    if (lhs.size() < 2 || !std::all_of(lhs.begin() + 1, lhs.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        (k = std::stoul(lhs.substr(1))) < 1 || k > n)
      fail("row '" + lhs + "' is out of range for " + std::to_string(n) + " rows", *l);
    if (seen[k - 1]) fail("row " + lhs + " given twice", *l);
    seen[k - 1] = true;
    e[k - 1] = parse_linear(std::string_view(l->body).substr(eq + 1), markers, any_param,
                            {l->no, l->col + static_cast<int>(eq) + 1});
  }
  nw.witness.e = basis_matrix_from_rows(e);
  if (nw.label.empty()) nw.label = nw.witness.source.text + "->" + nw.witness.target.text;
  cat.witnesses.push_back(std::move(nw));
}

void parse_closedset(Catalog& cat, Block blk, const std::string& name) {
  ClosedSet r;
  r.name = name;
  std::vector<std::pair<const Line*, Split>> eqs;
  while (const Line* l = blk.next()) {
    Split sp = split_head(*l);
    if (sp.head == "provenance") {
      r.provenance = sp.rest;
    } else if (sp.head == "dim") {
      r.dim = static_cast<std::size_t>(parse_count(sp.rest, *l, sp.rest_col));
    } else if (sp.head == "params") {
      for (const auto& w : words(sp.rest)) {
        if (!is_param_name(w)) fail("'" + w + "' is not a parameter name", *l, sp.rest_col);
        r.params.push_back(w);
      }
    } else if (sp.head == "eq" || sp.head == "exclude") {
      eqs.emplace_back(l, sp);
    } else if (sp.head == "span") {
      auto w = words(sp.rest);
      if (w.size() != 3) fail("expected 'span <p> <q> <r>'", *l, sp.rest_col);
      std::array<std::size_t, 3> s{};
      for (int k = 0; k < 3; ++k) s[k] = static_cast<std::size_t>(parse_count(w[k], *l, sp.rest_col));
      r.spans.push_back(s);
    } else if (sp.head == "cubezero") {
      r.cube_zero = true;
    } else if (sp.head == "sources" || sp.head == "targets" || sp.head == "rejects") {
      auto& dst = sp.head == "sources" ? r.sources : sp.head == "targets" ? r.targets : r.rejects;
      for (const auto& [text, col] : split_refs(sp.rest, sp.rest_col)) dst.push_back(parse_ref(text, {l->no, col}));
    } else {
      fail("unknown line '" + sp.head + "' in closedset block", *l);
    }
  }
  // Equations: lowercase parameters must be declared; c_i_j_k are the symbols.
  Resolver pr = params_resolver(r.params);
  Resolver res = [&](std::string_view id) -> std::optional<Scalar> {
    if (id.size() >= 7 && id.substr(0, 2) == "c_") {
      std::array<std::size_t, 3> idx{};
      std::size_t pos = 2;
      for (int k = 0; k < 3; ++k) {
        std::size_t st = pos;
        while (pos < id.size() && std::isdigit(static_cast<unsigned char>(id[pos]))) ++pos;
        if (st == pos) return std::nullopt;
        idx[k] = std::stoul(std::string(id.substr(st, pos - st)));
        if (k < 2) {
          if (pos >= id.size() || id[pos] != '_') return std::nullopt;
          ++pos;
        }
      }
      if (pos != id.size()) return std::nullopt;
      Var v = c_symbol(idx[0], idx[1], idx[2]);
      bool known = false;
      for (const auto& s : r.symbols) known = known || s.var == v;
      if (!known) r.symbols.push_back({v, idx[0], idx[1], idx[2]});
      return Scalar(MultiPoly::variable(v));
    }
    return pr(id);
  };
  for (const auto& [l, sp] : eqs) {
    if (sp.head == "exclude") {
      r.excludes.push_back(parse_assignment(sp.rest, sp.rest_col, *l, pr));
      continue;
    }
    auto eq = sp.rest.find('=');
    Scalar v;
    if (eq == std::string::npos) {
      v = parse_expression(sp.rest, res, {l->no, sp.rest_col});
    } else {
      v = parse_expression(std::string_view(sp.rest).substr(0, eq), res, {l->no, sp.rest_col}) -
          parse_expression(std::string_view(sp.rest).substr(eq + 1), res, {l->no, sp.rest_col + static_cast<int>(eq) + 1});
    }
    r.equations.push_back(v);
    r.equation_text.push_back(sp.rest);
  }
  for (const auto& s : r.symbols)
    if (s.i < 1 || s.j < 1 || s.k < 1 || s.i > r.dim || s.j > r.dim || s.k > r.dim)
      fail("symbol c_" + std::to_string(s.i) + "_" + std::to_string(s.j) + "_" + std::to_string(s.k) +
               " is out of range",
           blk.header);
  for (const auto& s : r.spans)
    if (s[0] < 1 || s[1] < 1 || s[0] > r.dim || s[1] > r.dim || s[2] < 1 || s[2] > r.dim + 1)
      fail("span condition out of range", blk.header);
  cat.closed_sets.push_back(std::move(r));
}

void parse_isomorphism(Catalog& cat, Block blk, const Split& head) {
  auto arrow = head.rest.find("->");
  if (arrow == std::string::npos) fail("expected 'isomorphism <SRC> -> <TGT>'", blk.header);
  IsoWitness w;
  std::string src = head.rest.substr(0, arrow), tgt = head.rest.substr(arrow + 2);
  src.erase(src.find_last_not_of(" \t") + 1);
  std::size_t b = tgt.find_first_not_of(" \t");
  tgt = b == std::string::npos ? std::string() : tgt.substr(b);
  w.source = parse_ref(src, {blk.header.no, head.rest_col});
  w.target = parse_ref(tgt, {blk.header.no, head.rest_col + static_cast<int>(arrow + 2 + b)});
  std::vector<const Line*> maps;
  while (const Line* l = blk.next()) {
    Split sp = split_head(*l);
    if (sp.head == "provenance") {
      w.provenance = sp.rest;
    } else if (l->body.find("->") != std::string::npos) {
      maps.push_back(l);
    } else {
      fail("unknown line '" + sp.head + "' in isomorphism block", *l);
    }
  }
  std::size_t n = maps.size();
  if (n == 0) fail("isomorphism without images", blk.header);
  auto markers = basis_names(n);
  Matrix g(n, n);
  std::vector<bool> seen(n, false);
  for (const Line* l : maps) {
    auto a = l->body.find("->");
    std::string lhs = l->body.substr(0, a);
    lhs.erase(lhs.find_last_not_of(" \t") + 1);
    std::size_t k = 0;
    if (lhs.size() < 2 || lhs[0] != 'e' ||
        !std::all_of(lhs.begin() + 1, lhs.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        (k = std::stoul(lhs.substr(1))) < 1 || k > n)
      fail("'" + lhs + "' is out of range", *l);
    if (seen[k - 1]) fail("image of " + lhs + " given twice", *l);
    seen[k - 1] = true;
    auto v = parse_linear(std::string_view(l->body).substr(a + 2), markers, any_param,
                          {l->no, l->col + static_cast<int>(a) + 2});
    for (std::size_t i = 0; i < n; ++i) g(i, k - 1) = v[i];
  }
  w.g = g;
  cat.isomorphisms.push_back(std::move(w));
}

void parse_cocycle(Catalog& cat, Block blk) {
  CocycleFile c;
  std::vector<std::pair<const Line*, Split>> rows;
  while (const Line* l = blk.next()) {
    Split sp = split_head(*l);
    if (sp.head == "dim") {
      c.dim = static_cast<std::size_t>(parse_count(sp.rest, *l, sp.rest_col));
    } else if (sp.head == "params") {
      for (const auto& w : words(sp.rest)) {
        if (!is_param_name(w)) fail("'" + w + "' is not a parameter name", *l, sp.rest_col);
        c.params.push_back(w);
      }
    } else if (sp.head.size() >= 2 && sp.head[0] == 'B') {
      rows.emplace_back(l, sp);
    } else {
      fail("unknown line '" + sp.head + "' in cocycle block", *l);
    }
  }
  if (c.dim == 0) fail("cocycle without 'dim'", blk.header);
  auto dn = delta_names(c.dim);
  c.coords.assign(c.dim, Vector(dn.size()));
  Resolver pr = params_resolver(c.params);
  for (const auto& [l, sp] : rows) {
    auto eq = l->body.find('=');
    if (eq == std::string::npos) fail("expected 'B<i> = <Delta combination>'", *l);
    std::string lhs = l->body.substr(0, eq);
    lhs.erase(lhs.find_last_not_of(" \t") + 1);
    std::size_t k = 0;
    if (!std::all_of(lhs.begin() + 1, lhs.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
        (k = std::stoul(lhs.substr(1))) < 1 || k > c.dim)
      fail("'" + lhs + "' is out of range", *l);
    c.coords[k - 1] = parse_linear(std::string_view(l->body).substr(eq + 1), dn, pr,
                                   {l->no, l->col + static_cast<int>(eq) + 1});
  }
  cat.cocycles.push_back(std::move(c));
}

void parse_collection(Catalog& cat, Block blk, Collection::Kind kind, const std::string& name) {
  Collection c;
  c.kind = kind;
  c.name = name;
  while (const Line* l = blk.next()) {
    Split sp = split_head(*l);
    if (sp.head == "provenance") {
      c.provenance = sp.rest;
    } else if (sp.head == "identity") {
      try {
        identity_spec(sp.rest);
      } catch (const UnknownIdentity& e) {
        fail(e.what(), *l, sp.rest_col);
      }
      c.identity = sp.rest;
    } else if (sp.head == "members") {
      for (const auto& w : words(sp.rest)) {
        if (!is_name(w)) fail("invalid member name '" + w + "'", *l, sp.rest_col);
        c.members.push_back(w);
      }
    } else if (sp.head == "expect") {
      auto w = words(sp.rest);
      static const std::vector<std::string> keys = {"count", "families", "families1", "families2", "classes", "rigid", "dimension"};
      if (w.size() != 2 || std::find(keys.begin(), keys.end(), w[0]) == keys.end())
        fail("expected 'expect <count|families|families1|families2|classes|rigid|dimension> <n>'", *l, sp.rest_col);
      c.expectations.emplace_back(w[0], parse_count(w[1], *l, sp.rest_col));
    } else {
      fail("unknown line '" + sp.head + "' in collection block", *l);
    }
  }
  cat.collections.push_back(std::move(c));
}

}  // namespace

AlgebraRef parse_ref(std::string_view text, SourcePos pos) {
  AlgebraRef ref;
  ref.text = std::string(text);
  std::size_t k = 0;
  while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) ++k;
  if (k == 0) throw ParseError("expected an algebra name", pos.line, pos.column);
  ref.name = std::string(text.substr(0, k));
  if (k < text.size() && text[k] == '{') {
    auto close = text.find('}', k);
    if (close == std::string_view::npos) throw ParseError("missing '}'", pos.line, pos.column + static_cast<int>(k));
    for (const auto& [part, col] : split_commas(text.substr(k + 1, close - k - 1), pos.column + static_cast<int>(k) + 1)) {
      Line l{pos.line, part, col};
      auto a = parse_assignment(part, col, l, any_param);
      for (const auto& [p, v] : ref.subs)
        if (p == a.first) throw ParseError("parameter " + p + " assigned twice", pos.line, col);
      ref.subs.push_back(std::move(a));
    }
    k = close + 1;
  }
  if (k < text.size() && text[k] == '@') {
    ++k;
    for (const auto& [part, col] : split_commas(text.substr(k), pos.column + static_cast<int>(k))) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a basis permutation like @1,3,2", pos.line, col);
      ref.perm.push_back(std::stoul(part) - 1);
    }
    auto sorted = ref.perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw ParseError("'@' must list a permutation of 1..n", pos.line, pos.column);
    k = text.size();
  }
  if (k != text.size())
    throw ParseError("unexpected '" + std::string(1, text[k]) + "' in algebra reference", pos.line,
                     pos.column + static_cast<int>(k));
  return ref;
}

Matrix basis_matrix_from_rows(const std::vector<Vector>& rows) {
  std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ShapeError("basis rows must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void parse_catalog_text(Catalog& cat, std::string_view text, const std::string& file) {
  try {
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Line& l = lines[i];
      Split sp = split_head(l);
      Block blk{lines, i, l};
      auto block_name = [&]() {
        if (!is_name(sp.rest)) fail("expected a name after '" + sp.head + "'", l, sp.rest_col);
        return sp.rest;
      };
      if (sp.head == "algebra") {
        parse_algebra(cat, blk, block_name(), file);
      } else if (sp.head == "specialize") {
        parse_specialize(cat, blk, sp, file);
      } else if (sp.head == "degeneration") {
        parse_degeneration(cat, blk, sp);
      } else if (sp.head == "closedset") {
        parse_closedset(cat, blk, block_name());
      } else if (sp.head == "isomorphism") {
        parse_isomorphism(cat, blk, sp);
      } else if (sp.head == "cocycle") {
        parse_cocycle(cat, blk);
      } else if (sp.head == "collection") {
        parse_collection(cat, blk, Collection::Kind::classification, block_name());
      } else if (sp.head == "components") {
        parse_collection(cat, blk, Collection::Kind::components, block_name());
      } else {
        fail("unknown block '" + sp.head + "'", l);
      }
    }
  } catch (const CatalogParseError&) {
    throw;
  } catch (const UndeclaredParameter& e) {
    throw UndeclaredParameter(CatalogParseError(file, e).what(), e.line(), e.column());
  } catch (const ParseError& e) {
    throw CatalogParseError(file, e);
  }
}

Catalog load_catalog(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  static const std::vector<std::string> exts = {".alg", ".deg", ".cs", ".iso", ".col", ".coc"};
  std::vector<fs::path> files;
  bool dir = fs::is_directory(path);
  if (dir) {
    for (const auto& e : fs::recursive_directory_iterator(path))
      if (e.is_regular_file() && std::find(exts.begin(), exts.end(), e.path().extension().string()) != exts.end())
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else {
    throw Error("cannot read '" + path.string() + "'");
  }
  Catalog cat;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw Error("cannot read '" + f.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    parse_catalog_text(cat, ss.str(), f.string());
  }
  cat.finalize(dir);  // a single file need not carry provenance
  return cat;
}

}  // namespace algtool
