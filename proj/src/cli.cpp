#include "algtool/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "algtool/catalog.hpp"
#include "algtool/verify.hpp"

#ifndef ALGTOOL_DEFAULT_CATALOG
#define ALGTOOL_DEFAULT_CATALOG "catalog"
#endif

namespace algtool {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Catalog load_file(const std::string& path, bool finalize = true) {
  Catalog c;
  parse_catalog_text(c, read_file(path), path);
  if (finalize) c.finalize(false);
  return c;
}

AlgebraDef load_algebra(const std::string& path, const std::string& name) {
  Catalog c = load_file(path);
  if (c.entries.empty()) throw Error(path + " contains no algebra");
  if (!name.empty()) return c.at(name).algebra;
  return c.entries.front().algebra;
}

ClosedSet load_closed_set(const std::string& path) {
  Catalog c = load_file(path, false);
  if (c.closed_sets.empty()) throw Error(path + " contains no closedset block");
  return c.closed_sets.front();
}

Cocycle load_cocycle(const std::string& path) {
  Catalog c = load_file(path, false);
  if (c.cocycles.empty()) throw Error(path + " contains no cocycle block");
  const CocycleFile& f = c.cocycles.front();
  return Cocycle::from_delta(f.dim, f.coords);
}

std::string default_catalog() {
  if (const char* env = std::getenv("ALGTOOL_CATALOG"); env && *env) return env;
  return ALGTOOL_DEFAULT_CATALOG;
}

std::optional<Scalar> lower_param(std::string_view id) {
  if (id.empty() || !std::islower(static_cast<unsigned char>(id[0]))) return std::nullopt;
  return Scalar::param(id);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "e1+e2; e3; e2": one combination per row.
std::vector<Vector> parse_combos(const std::string& text, std::size_t n) {
  std::vector<Vector> out;
  for (const auto& part : split_on(text, ';')) out.push_back(parse_linear(part, basis_names(n), lower_param));
  if (out.size() != n) throw Error("expected " + std::to_string(n) + " combinations separated by ';'");
  return out;
}

// "1, 2; 3, 4"
Matrix parse_matrix(const std::string& text) {
  std::vector<Vector> rows;
  for (const auto& r : split_on(text, ';')) {
    Vector row;
    for (const auto& x : split_on(r, ',')) row.push_back(parse_expression(x, lower_param));
    rows.push_back(row);
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ShapeError("rows of different length");
  return Matrix::from_rows(rows);
}

Matrix columns_matrix(const std::vector<Vector>& cols) {
  std::size_t n = cols.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

std::string verdict_line(const Verdict& v) {
  if (v.status == Status::HoldsGenerically) return "holds generically (" + locus_to_string(v.locus) + ")";
  return v.ok() ? "holds" : v.summary();
}

struct Common {
  std::string format = "text";
  std::uint64_t seed = 0;
};

int emit(const Report& rep, const Common& common, std::ostream& out) {
  out << rep.render(common.format == "records" ? ReportFormat::records : ReportFormat::text);
  return rep.exit_code();
}

Report new_report(const std::string& what, std::uint64_t seed) {
  Report r;
  r.header = {"algtool " + what, "seed " + std::to_string(seed)};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for small nonassociative algebras", "algtool"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"text", "records"}));
  std::string output;
  app.add_option("-o,--output", output, "Write the output to a file instead of stdout");

  std::string identity, alg, alg2, name, aux, text, catalog_dir, rows;
  std::size_t trials = 500, stability = 50, essential = 0;
  bool essential_set = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> sections;

  auto* check = app.add_subcommand("check", "Check an identity on an algebra");
  check->add_option("--identity", identity, "Identity name")->required();
  check->add_option("alg", alg, "Algebra file")->required();
  check->add_option("--name", name, "Algebra name inside the file");

  auto* ders = app.add_subcommand("derivations", "Derivation algebra basis and dimension");
  ders->add_option("alg", alg)->required();
  ders->add_option("--name", name);

  auto* cocs = app.add_subcommand("cocycles", "Basis of Z2(A, A) for a commutative algebra");
  cocs->add_option("alg", alg)->required();
  cocs->add_option("--name", name);

  auto* ext = app.add_subcommand("extend", "Build J + theta from a commutative algebra and a cocycle");
  ext->add_option("alg", alg)->required();
  ext->add_option("cocycle", aux)->required();
  ext->add_option("--name", name);

  auto* deg = app.add_subcommand("degeneration", "Degeneration witnesses");
  deg->require_subcommand(1);
  auto* degv = deg->add_subcommand("verify", "Verify the witnesses of a file against a catalog");
  degv->add_option("witness", aux)->required();
  degv->add_option("--catalog", catalog_dir, "Catalog directory");

  auto* cs = app.add_subcommand("closedset", "Closed-set membership and sampling");
  cs->require_subcommand(1);
  auto* csm = cs->add_subcommand("member", "Exact membership of an algebra");
  csm->add_option("alg", alg)->required();
  csm->add_option("set", aux)->required();
  csm->add_option("--name", name);
  auto* css = cs->add_subcommand("sample", "Randomized search for a representative in the set");
  css->add_option("alg", alg)->required();
  css->add_option("set", aux)->required();
  css->add_option("--name", name);
  css->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  css->add_option("--seed", common.seed);

  auto* inv = app.add_subcommand("invariants", "Basis-independent fingerprint");
  inv->add_option("alg", alg)->required();
  inv->add_option("--name", name);

  auto* iso = app.add_subcommand("iso", "Isomorphism witnesses");
  iso->require_subcommand(1);
  auto* isov = iso->add_subcommand("verify", "Verify the isomorphisms of a file against a catalog");
  isov->add_option("witness", aux)->required();
  isov->add_option("--catalog", catalog_dir);

  auto* cat = app.add_subcommand("catalog", "Batch operations on a catalog directory");
  cat->require_subcommand(1);
  auto* catv = cat->add_subcommand("verify", "Verify every claim of the catalog");
  catv->add_option("dir", catalog_dir, "Catalog directory (default: $ALGTOOL_CATALOG or the shipped corpus)");
  catv->add_option("--section", sections, "Restrict to sections")->check(CLI::IsMember(all_sections()));
  catv->add_option("--seed", common.seed);
  catv->add_option("--trials", trials, "Sampling trials per closed-set target")->check(CLI::NonNegativeNumber);
  catv->add_option("--stability-trials", stability)->check(CLI::NonNegativeNumber);
  catv->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* catl = cat->add_subcommand("list", "List the catalog contents");
  catl->add_option("dir", catalog_dir);

  auto* split_cmd = app.add_subcommand("split", "Show the commutative and anticommutative halves");
  split_cmd->add_option("alg", alg)->required();
  split_cmd->add_option("--name", name);

  auto* rebase = app.add_subcommand("rebase", "Structure constants in a new basis");
  rebase->add_option("alg", alg)->required();
  rebase->add_option("--rows", rows, "New basis, e.g. \"e1+e2; e3; e2\"")->required();
  rebase->add_option("--name", name);

  auto* autom = app.add_subcommand("automorphism", "Check that a linear map is an automorphism");
  autom->add_option("alg", alg)->required();
  autom->add_option("--images", rows, "Images of e1..en, e.g. \"e2; e1; e3\"")->required();
  autom->add_option("--name", name);

  auto* act_cmd = app.add_subcommand("act", "Right action of a linear map on a cocycle");
  act_cmd->add_option("cocycle", aux)->required();
  act_cmd->add_option("--images", rows, "Images of e1..en")->required();

  auto* orbit = app.add_subcommand("orbit", "Orbit and family dimensions");
  orbit->add_option("alg", alg)->required();
  orbit->add_option("--name", name);
  orbit->add_option("--essential", essential, "Number of essential parameters (default: all)")
      ->each([&](const std::string&) { essential_set = true; });

  auto* nec = app.add_subcommand("necessary", "Derivation-dimension test for a degeneration A -> B");
  nec->add_option("source", alg)->required();
  nec->add_option("target", alg2)->required();

  std::string px, py;
  auto* prod = app.add_subcommand("product", "Product of two elements, e.g. \"e1 + e2\" \"alpha*e3\"");
  prod->add_option("alg", alg)->required();
  prod->add_option("x", px)->required();
  prod->add_option("y", py)->required();
  prod->add_option("--name", name);

  auto* eval = app.add_subcommand("eval", "Normalize a scalar expression");
  eval->add_option("expr", text)->required();
  std::string limit_var;
  eval->add_option("--limit", limit_var, "Also take the limit as this variable tends to 0");
  std::string subs;
  eval->add_option("--at", subs, "Substitute, e.g. \"a=1, b=t^2\"");

  auto* mat = app.add_subcommand("matrix", "Exact linear algebra on a matrix \"1, a; 0, 1\"");
  std::string mop;
  mat->add_option("op", mop)->required()->check(CLI::IsMember({"det", "rank", "inverse", "kernel", "normalize"}));
  mat->add_option("matrix", text)->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  std::ostringstream buf;
  std::ostream& o = output.empty() ? out : buf;
  int code = 0;
  try {
    if (*check) {
      AlgebraDef a = load_algebra(alg, name);
      IdentitySpec id = identity_spec(identity);
      Verdict v = check_identity(a, id);
      Report r = new_report("check", common.seed);
      r.add(v.ok() ? Outcome::Pass : Outcome::Fail, "check", a.name + "/" + id.name, verdict_line(v));
      code = emit(r, common, o);
    } else if (*ders) {
      AlgebraDef a = load_algebra(alg, name);
      SolutionSpace s = derivations(a);
      o << "dim " << s.generic_dimension << "\n";
      std::size_t n = a.dim;
      for (const auto& v : s.basis) {
        Matrix d(n, n);
        for (std::size_t i = 0; i < n * n; ++i) d(i / n, i % n) = v[i];
        o << "D " << d.to_string() << "\n";
      }
      if (!s.exceptional_locus.empty()) o << "generic for " << locus_to_string(s.exceptional_locus) << "\n";
    } else if (*cocs) {
      AlgebraDef a = load_algebra(alg, name);
      CocycleSpace z = z2_basis(a);
      o << "dim " << z.space.generic_dimension << "\n";
      for (const auto& c : z.basis) o << "theta " << c.to_string() << "\n";
      if (!z.space.exceptional_locus.empty()) o << "generic for " << locus_to_string(z.space.exceptional_locus) << "\n";
    } else if (*ext) {
      AlgebraDef j = load_algebra(alg, name);
      Cocycle theta = load_cocycle(aux);
      try {
        o << format_algebra(extend(j, theta, j.name + "+theta"));
      } catch (const NotACocycle& e) {
        Report r = new_report("extend", common.seed);
        r.add(Outcome::Fail, "extend", j.name, e.what());
        code = emit(r, common, o);
      }
    } else if (*degv || *isov) {
      Catalog c = load_catalog(catalog_dir.empty() ? default_catalog() : catalog_dir);
      std::size_t w0 = c.witnesses.size(), i0 = c.isomorphisms.size();
      parse_catalog_text(c, read_file(aux), aux);
      // Witnesses from the file replace corpus witnesses with the same label.
      std::set<std::string> labels;
      for (std::size_t k = w0; k < c.witnesses.size(); ++k) labels.insert(c.witnesses[k].label);
      std::size_t dropped = 0;
      for (std::size_t k = 0; k < w0; ++k)
        if (labels.count(c.witnesses[k - dropped].label)) {
          c.witnesses.erase(c.witnesses.begin() + static_cast<std::ptrdiff_t>(k - dropped));
          ++dropped;
        }
      w0 -= dropped;
      c.finalize(false);
      Report r = new_report(*degv ? "degeneration verify" : "iso verify", common.seed);
      if (*degv) {
        for (std::size_t k = w0; k < c.witnesses.size(); ++k) {
          const auto& nw = c.witnesses[k];
          DegenerationReport d = verify_degeneration(nw.witness, c);
          bool ok = nw.witness.expect_failure ? !d.passed() : d.passed();
          r.add(ok ? Outcome::Pass : Outcome::Fail, "degenerations", nw.label, d.detail);
        }
      } else {
        for (std::size_t k = i0; k < c.isomorphisms.size(); ++k) {
          const auto& w = c.isomorphisms[k];
          Verdict v = verify_isomorphism(w, c);
          r.add(v.ok() ? Outcome::Pass : Outcome::Fail, "isomorphisms", w.source.text + " -> " + w.target.text,
                verdict_line(v));
        }
      }
      code = emit(r, common, o);
    } else if (*csm) {
      AlgebraDef a = load_algebra(alg, name);
      ClosedSet set = load_closed_set(aux);
      TargetViolation tv = target_violation(a, set);
      Report r = new_report("closedset member", common.seed);
      std::string d = verdict_line(tv.membership);
      if (!tv.note.empty()) d += "; " + tv.note;
      r.add(tv.membership.ok() ? Outcome::Pass : Outcome::Fail, "closedset", set.name + "/" + a.name, d);
      code = emit(r, common, o);
    } else if (*css) {
      AlgebraDef a = load_algebra(alg, name);
      ClosedSet set = load_closed_set(aux);
      SampleReport s = borel_sample_against_set(a, set, trials, common.seed);
      Report r = new_report("closedset sample", common.seed);
      r.add(s.found_trial ? Outcome::Fail : Outcome::Pass, "closedset", set.name + "/" + a.name, s.detail);
      code = emit(r, common, o);
    } else if (*inv) {
      AlgebraDef a = load_algebra(alg, name);
      Fingerprint f = invariant_fingerprint(a);
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      o << "dim " << f.dim << "\ncommutative " << yn(f.commutative) << "\nanticommutative " << yn(f.anticommutative)
        << "\nsquare " << f.square << "\ncube " << f.cube << "\nleft_annihilator " << f.left_annihilator
        << "\nright_annihilator " << f.right_annihilator << "\nder " << f.der << "\ncirc_square " << f.circ_square
        << "\nbracket_square " << f.bracket_square << "\n";
    } else if (*catv) {
      Catalog c = load_catalog(catalog_dir.empty() ? default_catalog() : catalog_dir);
      VerifyOptions opt;
      opt.sections = cat->get_subcommand("verify")->count("--section") ? sections : all_sections();
      opt.seed = common.seed;
      opt.trials = trials;
      opt.stability_trials = stability;
      opt.jobs = jobs;
      Report r = verify_catalog(c, opt);
      std::string secs;
      for (const auto& s : opt.sections) secs += (secs.empty() ? "" : " ") + s;
      r.header = {"algtool catalog verify", "seed " + std::to_string(opt.seed),
                  "trials " + std::to_string(opt.trials) + ", stability trials " + std::to_string(opt.stability_trials),
                  "sections " + secs};
      code = emit(r, common, o);
    } else if (*catl) {
      Catalog c = load_catalog(catalog_dir.empty() ? default_catalog() : catalog_dir);
      for (const auto& e : c.entries) {
        o << "algebra " << e.algebra.name << " dim " << e.algebra.dim;
        if (!e.algebra.params.empty()) {
          o << " params";
          for (const auto& p : e.algebra.params) o << " " << p;
        }
        o << "\n";
      }
      for (const auto& w : c.witnesses) o << "degeneration " << w.label << "\n";
      for (const auto& r : c.closed_sets) o << "closedset " << r.name << "\n";
      for (const auto& w : c.isomorphisms) o << "isomorphism " << w.source.text << " -> " << w.target.text << "\n";
      for (const auto& col : c.collections) o << "collection " << col.name << " (" << col.members.size() << ")\n";
    } else if (*split_cmd) {
      AlgebraDef a = load_algebra(alg, name);
      PairAlgebraDef p = split(a);
      AlgebraDef circ = circ_part(p), br = bracket_part(p);
      circ.name = a.name + "_plus";
      br.name = a.name + "_minus";
      o << format_algebra(circ) << format_algebra(br);
      if (!same_constants(fuse(p), a)) throw std::logic_error("fuse(split(A)) differs from A");
    } else if (*rebase) {
      AlgebraDef a = load_algebra(alg, name);
      Matrix e = basis_matrix_from_rows(parse_combos(rows, a.dim));
      AlgebraDef b = change_of_basis(a, e);
      b.name = a.name + "_rebased";
      o << format_algebra(b);
    } else if (*autom) {
      AlgebraDef a = load_algebra(alg, name);
      Matrix phi = columns_matrix(parse_combos(rows, a.dim));
      Verdict v = verify_automorphism(a, phi);
      Report r = new_report("automorphism", common.seed);
      r.add(v.ok() ? Outcome::Pass : Outcome::Fail, "automorphism", a.name, verdict_line(v));
      code = emit(r, common, o);
    } else if (*act_cmd) {
      Cocycle theta = load_cocycle(aux);
      Matrix phi = columns_matrix(parse_combos(rows, theta.dim()));
      o << "theta " << act(theta, phi).to_string() << "\n";
    } else if (*orbit) {
      AlgebraDef a = load_algebra(alg, name);
      OrbitDims d = orbit_dimension(a, essential_set ? essential : a.params.size());
      o << "der " << d.der << "\norbit " << d.orbit << "\nfamily " << d.family << "\n";
    } else if (*nec) {
      AlgebraDef a = load_algebra(alg, ""), b = load_algebra(alg2, "");
      Verdict v = necessary_condition(a, b);
      Report r = new_report("necessary", common.seed);
      r.add(v.ok() ? Outcome::Pass : Outcome::Fail, "necessary", a.name + "->" + b.name, v.where);
      code = emit(r, common, o);
    } else if (*prod) {
      AlgebraDef a = load_algebra(alg, name);
      auto names = basis_names(a.dim);
      o << format_combo(product(a, parse_linear(px, names, lower_param), parse_linear(py, names, lower_param)), names)
        << "\n";
    } else if (*eval) {
      Scalar s = parse_expression(text, lower_param);
      if (!subs.empty()) {
        ParamValues pv;
        for (const auto& part : split_on(subs, ',')) {
          auto eq = part.find('=');
          if (eq == std::string::npos) throw Error("expected p=value in --at");
          std::string p = part.substr(0, eq);
          p.erase(0, p.find_first_not_of(" \t"));
          p.erase(p.find_last_not_of(" \t") + 1);
          pv.emplace_back(p, parse_expression(part.substr(eq + 1), lower_param));
        }
        s = substitute(s, to_bindings(pv));
      }
      o << s.to_string() << "\n";
      if (!limit_var.empty()) {
        auto l = limit_at_zero(s, intern(limit_var));
        o << "limit " << (l ? l->to_string() : std::string("none")) << "\n";
      }
    } else if (*mat) {
      Matrix m = parse_matrix(text);
      if (mop == "det") {
        o << det(m).to_string() << "\n";
      } else if (mop == "rank") {
        o << rank(m) << "\n";
      } else if (mop == "inverse") {
        o << invert(m).to_string() << "\n";
      } else if (mop == "normalize") {
        o << normalize_row(m).to_string() << "\n";
      } else {
        SolutionSpace s = kernel(m);
        o << "dim " << s.generic_dimension << "\n";
        for (const auto& v : s.basis) {
          std::string line;
          for (const auto& x : v) line += (line.empty() ? "" : ", ") + x.to_string();
          o << "[" << line << "]\n";
        }
        if (!s.exceptional_locus.empty()) o << "generic for " << locus_to_string(s.exceptional_locus) << "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << output << "'\n";
      return 2;
    }
    f << buf.str();
  }
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err);
}

}  // namespace algtool
