#include "algtool/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

namespace algtool {

const std::vector<std::string>& all_sections() {
  static const std::vector<std::string> s = {"identities",   "z2",           "extensions",   "dimensions", "degenerations",
                                             "closedsets",   "isomorphisms", "fingerprints", "collections"};
  return s;
}

namespace {

using Lines = std::vector<ReportLine>;
using Task = std::function<Lines()>;

template <class T>
std::vector<T> run_parallel(const std::vector<std::function<T()>>& tasks, unsigned jobs) {
  std::vector<T> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next++;
      if (i >= tasks.size()) return;
      out[i] = tasks[i]();
    }
  };
  unsigned n = std::min<std::size_t>(std::max(1u, jobs), tasks.size());
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

ReportLine line(Outcome o, const std::string& section, std::string item, std::string detail) {
  return {o, section, std::move(item), std::move(detail)};
}

// Runs f, turning any exception into a FAIL line.
Task guarded(const std::string& section, const std::string& item, std::function<Lines()> f) {
  return [section, item, f]() -> Lines {
    try {
      return f();
    } catch (const std::exception& e) {
      return {line(Outcome::Fail, section, item, std::string("error: ") + e.what())};
    }
  };
}

std::string verdict_text(const Verdict& v) {
  switch (v.status) {
    case Status::Holds:
      return "holds";
    case Status::HoldsGenerically:
      return "holds generically (" + locus_to_string(v.locus) + ")";
    case Status::Fails:
      return v.summary();
  }
  return "";
}

std::string values_text(const ParamValues& pv) {
  std::string s;
  for (const auto& [p, v] : pv) s += (s.empty() ? "" : ", ") + p + " = " + v.to_string();
  return s;
}

void identity_tasks(const Catalog& cat, std::vector<Task>& out) {
  const std::string sec = "identities";
  for (const auto& e : cat.entries)
    for (const auto& c : e.claims) {
      if (c.kind != Claim::Kind::identity && c.kind != Claim::Kind::fails) continue;
      bool expect = c.kind == Claim::Kind::identity;
      std::string item = e.algebra.name + "/" + (expect ? "" : "not ") + c.arg;
      out.push_back(guarded(sec, item, [&e, c, expect, sec, item]() -> Lines {
        Verdict v = check_identity(e.algebra, identity_spec(c.arg));
        bool ok = v.ok() == expect;
        std::string d = verdict_text(v);
        if (!expect && !v.ok()) d = "fails as claimed: " + d;
        return {line(ok ? Outcome::Pass : Outcome::Fail, sec, item, d)};
      }));
    }
}

void z2_tasks(const Catalog& cat, std::vector<Task>& out) {
  const std::string sec = "z2";
  for (const auto& e : cat.entries)
    for (const auto& c : e.claims) {
      if (c.kind != Claim::Kind::z2_dim) continue;
      out.push_back(guarded(sec, e.algebra.name, [&e, c, sec]() -> Lines {
        CocycleSpace z = z2_basis(e.algebra);
        std::size_t d = z.space.generic_dimension;
        std::string detail = "dim Z2 = " + std::to_string(d) + " (claimed " + std::to_string(c.value) + ")";
        if (!z.space.exceptional_locus.empty()) detail += ", generic for " + locus_to_string(z.space.exceptional_locus);
        return {line(static_cast<long>(d) == c.value ? Outcome::Pass : Outcome::Fail, sec, e.algebra.name, detail)};
      }));
    }
}

void extension_tasks(const Catalog& cat, std::vector<Task>& out) {
  const std::string sec = "extensions";
  for (const auto& e : cat.entries) {
    const Claim* plus = nullptr;
    const Claim* coc = nullptr;
    for (const auto& c : e.claims) {
      if (c.kind == Claim::Kind::plus_part) plus = &c;
      if (c.kind == Claim::Kind::cocycle) coc = &c;
    }
    if (!plus && !coc) continue;
    out.push_back(guarded(sec, e.algebra.name, [&cat, &e, plus, coc, sec]() -> Lines {
      if (!plus || !coc)
        return {line(Outcome::Fail, sec, e.algebra.name, "needs both a plus part and a cocycle claim")};
      const AlgebraDef& j = cat.at(plus->arg).algebra;
      Cocycle theta = Cocycle::from_delta(j.dim, coc->cocycle);
      AlgebraDef r = extend(j, theta, e.algebra.name);
      std::string what = "extend(" + j.name + ", " + theta.to_string() + ")";
      if (!same_constants(r, e.algebra)) {
        for (std::size_t a = 0; a < r.c.size(); ++a)
          if (r.c[a] != e.algebra.c[a]) {
            std::size_t n = r.dim;
            std::size_t i = a / (n * n), jj = (a / n) % n, k = a % n;
            return {line(Outcome::Fail, sec, e.algebra.name,
                         what + " differs at c" + std::to_string(i + 1) + std::to_string(jj + 1) + "^" +
                             std::to_string(k + 1) + ": " + r.c[a].to_string() + " vs " + e.algebra.c[a].to_string())};
          }
      }
      return {line(Outcome::Pass, sec, e.algebra.name, what + " reproduces the table")};
    }));
  }
}

void dimension_tasks(const Catalog& cat, std::vector<Task>& out) {
  const std::string sec = "dimensions";
  for (const auto& e : cat.entries)
    for (const auto& c : e.claims) {
      if (c.kind != Claim::Kind::der_dim && c.kind != Claim::Kind::orbit_dim) continue;
      std::string item = e.algebra.name + (c.kind == Claim::Kind::der_dim ? "/der" : "/orbit");
      out.push_back(guarded(sec, item, [&e, c, sec, item]() -> Lines {
        OrbitDims d = orbit_dimension(e.algebra, e.essential_count());
        if (c.kind == Claim::Kind::der_dim)
          return {line(static_cast<long>(d.der) == c.value ? Outcome::Pass : Outcome::Fail, sec, item,
                       "dim Der = " + std::to_string(d.der) + " (claimed " + std::to_string(c.value) + ")")};
        std::size_t got = c.family ? d.family : d.orbit;
        std::string detail = "orbit " + std::to_string(d.orbit) + ", family " + std::to_string(d.family) +
                             " (claimed " + std::to_string(c.value) + (c.family ? " for the family" : " for the orbit") + ")";
        return {line(static_cast<long>(got) == c.value ? Outcome::Pass : Outcome::Fail, sec, item, detail)};
      }));
    }
}

void degeneration_tasks(const Catalog& cat, std::vector<Task>& out) {
  const std::string sec = "degenerations";
  for (const auto& nw : cat.witnesses) {
    out.push_back(guarded(sec, nw.label, [&cat, &nw, sec]() -> Lines {
      const auto& w = nw.witness;
      DegenerationReport rep = verify_degeneration(w, cat);
      Lines ls;
      if (w.expect_failure) {
        ls.push_back(line(rep.passed() ? Outcome::Fail : Outcome::Pass, sec, nw.label,
                          rep.passed() ? "documented misprint unexpectedly verifies"
                                       : "documented misprint rejected: " + rep.detail));
        return ls;
      }
      ls.push_back(line(rep.passed() ? Outcome::Pass : Outcome::Fail, sec, nw.label, rep.detail));
      if (!rep.passed()) return ls;
      // Families indexed by t contribute their indexed parameters to the source side.
      AlgebraDef s = cat.resolve(w.source), t = cat.resolve(w.target);
      OrbitDims ds = orbit_dimension(s, w.index.size());
      OrbitDims dt = orbit_dimension(t, 0);
      bool ok = dt.orbit < ds.family;
      std::string detail = "dim Der " + std::to_string(ds.der) + " -> " + std::to_string(dt.der);
      if (!w.index.empty()) detail += " (source family of dimension " + std::to_string(ds.family) + ")";
      ls.push_back(line(ok ? Outcome::Pass : Outcome::Fail, sec, nw.label + "/der", detail));
      return ls;
    }));
  }
}

void closedset_tasks(const Catalog& cat, const VerifyOptions& opt, std::vector<Task>& out) {
  const std::string sec = "closedsets";
  for (const auto& r : cat.closed_sets) {
    for (const auto& src : r.sources) {
      std::string item = r.name + "/source/" + src.text;
      out.push_back(guarded(sec, item, [&cat, &r, src, opt, sec, item]() -> Lines {
        AlgebraDef a = cat.resolve(src);
        Verdict v = in_closed_set(a, r);
        Lines ls{line(v.ok() ? Outcome::Pass : Outcome::Fail, sec, item, "member: " + verdict_text(v))};
        if (!v.ok()) return ls;
        SampleReport s = borel_stability(a, r, opt.stability_trials, opt.seed, cat.excludes_for(src));
        ls.push_back(line(s.found_trial ? Outcome::Undecided : Outcome::Pass, sec, r.name + "/stable/" + src.text,
                          s.detail));
        return ls;
      }));
    }
    for (const auto& tgt : r.targets) {
      std::string item = r.name + "/target/" + tgt.text;
      out.push_back(guarded(sec, item, [&cat, &r, tgt, opt, sec, item]() -> Lines {
        AlgebraDef b = cat.resolve(tgt);
        TargetViolation tv = target_violation(b, r);
        bool violated = !tv.membership.ok();
        std::string d = violated ? "violates " + tv.membership.where : "satisfies R: " + verdict_text(tv.membership);
        if (!tv.note.empty()) d += "; " + tv.note;
        Lines ls{line(violated ? Outcome::Pass : Outcome::Fail, sec, item, d)};
        if (!violated) return ls;
        ParamValues ex = cat.excludes_for(tgt);
        // Special values the entry itself excludes need no separate argument.
        ParamValues open, excluded;
        for (const auto& pv : tv.special)
          (std::find(ex.begin(), ex.end(), pv) != ex.end() ? excluded : open).push_back(pv);
        if (!excluded.empty()) ls.front().detail += " (excluded: " + values_text(excluded) + ")";
        if (tv.special_values && (tv.special.empty() || !open.empty()))
          ls.push_back(line(Outcome::Undecided, sec, r.name + "/special/" + tgt.text,
                            "no obstruction where " + (tv.special.empty() ? tv.note : values_text(open))));
        ex.insert(ex.end(), open.begin(), open.end());
        SampleReport s = borel_sample_against_set(b, r, opt.trials, opt.seed, ex);
        ls.push_back(line(s.found_trial ? Outcome::Fail : Outcome::Pass, sec, r.name + "/sample/" + tgt.text,
                          s.detail + ", seed " + std::to_string(opt.seed)));
        return ls;
      }));
    }
    for (const auto& rej : r.rejects) {
      std::string item = r.name + "/reject/" + rej.text;
      out.push_back(guarded(sec, item, [&cat, &r, rej, sec, item]() -> Lines {
        Verdict v = in_closed_set(cat.resolve(rej), r);
        return {line(v.ok() ? Outcome::Fail : Outcome::Pass, sec, item,
                     v.ok() ? "unexpectedly a member" : "not a member, as recorded: " + v.summary())};
      }));
    }
  }
}

void isomorphism_tasks(const Catalog& cat, std::vector<Task>& out) {
  const std::string sec = "isomorphisms";
  for (const auto& w : cat.isomorphisms) {
    std::string item = w.source.text + " -> " + w.target.text;
    out.push_back(guarded(sec, item, [&cat, &w, sec, item]() -> Lines {
      Verdict v = verify_isomorphism(w, cat);
      return {line(v.ok() ? Outcome::Pass : Outcome::Fail, sec, item, verdict_text(v))};
    }));
  }
}

std::string first_difference(const Fingerprint& a, const Fingerprint& b) {
  auto num = [](const char* name, std::size_t x, std::size_t y) {
    return std::string(name) + " " + std::to_string(x) + " vs " + std::to_string(y);
  };
  auto yn = [](bool x) { return x ? "yes" : "no"; };
  if (a.dim != b.dim) return num("dim", a.dim, b.dim);
  if (a.commutative != b.commutative) return std::string("commutative ") + yn(a.commutative) + " vs " + yn(b.commutative);
  if (a.anticommutative != b.anticommutative)
    return std::string("anticommutative ") + yn(a.anticommutative) + " vs " + yn(b.anticommutative);
  if (a.square != b.square) return num("dim A^2", a.square, b.square);
  if (a.cube != b.cube) return num("dim A^3", a.cube, b.cube);
  if (a.left_annihilator != b.left_annihilator) return num("dim left annihilator", a.left_annihilator, b.left_annihilator);
  if (a.right_annihilator != b.right_annihilator)
    return num("dim right annihilator", a.right_annihilator, b.right_annihilator);
  if (a.der != b.der) return num("dim Der", a.der, b.der);
  if (a.circ_square != b.circ_square) return num("dim A+A+", a.circ_square, b.circ_square);
  return num("dim [A,A]", a.bracket_square, b.bracket_square);
}

void fingerprint_section(const Catalog& cat, const VerifyOptions& opt, Report& rep) {
  const std::string sec = "fingerprints";
  std::vector<std::string> names;
  for (const auto& c : cat.collections)
    if (c.kind == Collection::Kind::classification)
      for (const auto& m : c.members)
        if (std::find(names.begin(), names.end(), m) == names.end()) names.push_back(m);
  std::vector<std::function<std::optional<Fingerprint>()>> tasks;
  for (const auto& n : names)
    tasks.push_back([&cat, n]() -> std::optional<Fingerprint> {
      try {
        return invariant_fingerprint(cat.at(n).algebra);
      } catch (const std::exception&) {
        return std::nullopt;
      }
    });
  auto fps = run_parallel(tasks, opt.jobs);
  std::map<std::string, std::optional<Fingerprint>> by_name;
  for (std::size_t i = 0; i < names.size(); ++i) by_name[names[i]] = fps[i];
  for (const auto& c : cat.collections) {
    if (c.kind != Collection::Kind::classification) continue;
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (std::size_t j = i + 1; j < c.members.size(); ++j) {
        const auto& a = by_name[c.members[i]];
        const auto& b = by_name[c.members[j]];
        std::string item = c.name + "/" + c.members[i] + "~" + c.members[j];
        if (!a || !b) {
          rep.add(Outcome::Fail, sec, item, "fingerprint could not be computed");
        } else if (*a == *b) {
          rep.add(Outcome::Undecided, sec, item, "identical fingerprints " + a->to_string());
        } else {
          rep.add(Outcome::Pass, sec, item, "separated by " + first_difference(*a, *b));
        }
      }
  }
}

void collection_tasks(const Catalog& cat, std::vector<Task>& out) {
  const std::string sec = "collections";
  for (const auto& c : cat.collections) {
    if (c.identity) {
      std::string item = c.name + "/identity";
      out.push_back(guarded(sec, item, [&cat, &c, sec, item]() -> Lines {
        std::string bad;
        for (const auto& m : c.members) {
          Verdict v = check_identity(cat.at(m).algebra, identity_spec(*c.identity));
          if (!v.ok()) bad += (bad.empty() ? "" : ", ") + m;
        }
        if (!bad.empty()) return {line(Outcome::Fail, sec, item, *c.identity + " fails for " + bad)};
        return {line(Outcome::Pass, sec, item,
                     "all " + std::to_string(c.members.size()) + " members satisfy " + *c.identity)};
      }));
    }
    for (const auto& [key, value] : c.expectations) {
      std::string item = c.name + "/" + key;
      out.push_back(guarded(sec, item, [&cat, &c, key = key, value = value, sec, item]() -> Lines {
        long got = 0;
        if (key == "count") {
          got = static_cast<long>(c.members.size());
        } else if (key == "dimension") {
          for (const auto& m : c.members) {
            const auto& e = cat.at(m);
            got = std::max<long>(got, static_cast<long>(orbit_dimension(e.algebra, e.essential_count()).family));
          }
        } else {
          for (const auto& m : c.members) {
            std::size_t p = cat.at(m).essential_count();
            if ((key == "families" && p > 0) || (key == "families1" && p == 1) || (key == "families2" && p == 2) ||
                ((key == "classes" || key == "rigid") && p == 0))
              ++got;
          }
        }
        return {line(got == value ? Outcome::Pass : Outcome::Fail, sec, item,
                     key + " = " + std::to_string(got) + " (claimed " + std::to_string(value) + ")")};
      }));
    }
  }
}

}  // namespace

Report verify_catalog(const Catalog& cat, const VerifyOptions& opt) {
  Report rep;
  for (const auto& s : opt.sections)
    if (std::find(all_sections().begin(), all_sections().end(), s) == all_sections().end())
      throw Error("unknown section '" + s + "'");
  for (const auto& s : all_sections()) {
    if (std::find(opt.sections.begin(), opt.sections.end(), s) == opt.sections.end()) continue;
    if (s == "fingerprints") {
      fingerprint_section(cat, opt, rep);
      continue;
    }
    std::vector<Task> tasks;
    if (s == "identities") identity_tasks(cat, tasks);
    if (s == "z2") z2_tasks(cat, tasks);
    if (s == "extensions") extension_tasks(cat, tasks);
    if (s == "dimensions") dimension_tasks(cat, tasks);
    if (s == "degenerations") degeneration_tasks(cat, tasks);
    if (s == "closedsets") closedset_tasks(cat, opt, tasks);
    if (s == "isomorphisms") isomorphism_tasks(cat, tasks);
    if (s == "collections") collection_tasks(cat, tasks);
    for (auto& ls : run_parallel(tasks, opt.jobs)) rep.lines.insert(rep.lines.end(), ls.begin(), ls.end());
  }
  return rep;
}

}  // namespace algtool
