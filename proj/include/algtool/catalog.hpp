#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algtool/algebra.hpp"
#include "algtool/cohomology.hpp"
#include "algtool/degeneration.hpp"
#include "algtool/expr.hpp"
#include "algtool/identities.hpp"

namespace algtool {

class DuplicateName : public Error {
 public:
  explicit DuplicateName(const std::string& name) : Error("duplicate name '" + name + "'") {}
};

// Error raised while loading a file; wraps the parse position.
class CatalogParseError : public ParseError {
 public:
  CatalogParseError(const std::string& file, const ParseError& e);
  const std::string& file() const { return file_; }
  const char* what() const noexcept override { return full_.c_str(); }

 private:
  std::string file_, full_;
};

struct Claim {
  enum class Kind { identity, fails, der_dim, orbit_dim, z2_dim, plus_part, cocycle };
  Kind kind;
  std::string arg;     // identity name or plus-part name
  long value = 0;      // dimensions
  bool family = false; // orbit_dim refers to the family dimension
  std::vector<Vector> cocycle;  // Delta coordinates per component
  int line = 0;
};

struct CatalogEntry {
  AlgebraDef algebra;
  std::string base;          // specializations: the family they come from
  ParamValues specialization;
  std::vector<Claim> claims;
  std::string provenance;
  ParamValues excludes;
  std::optional<std::vector<std::string>> essential;  // default: all parameters
  std::string file;
  int line = 0;

  std::size_t essential_count() const;
};

struct IsoWitness {
  AlgebraRef source, target;
  Matrix g;  // column j = image of e_j
  std::string provenance;
};

struct NamedWitness {
  std::string label;
  DegenerationWitness witness;
};

struct Collection {
  enum class Kind { classification, components };
  Kind kind = Kind::classification;
  std::string name;
  std::string provenance;
  std::optional<std::string> identity;
  std::vector<std::string> members;
  std::vector<std::pair<std::string, long>> expectations;
};

// Standalone cocycle file: cocycle / dim / params / B<i> = Delta combo / end.
struct CocycleFile {
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::vector<Vector> coords;
};

class Catalog : public AlgebraResolver {
 public:
  std::vector<CatalogEntry> entries;
  std::vector<NamedWitness> witnesses;
  std::vector<ClosedSet> closed_sets;
  std::vector<IsoWitness> isomorphisms;
  std::vector<Collection> collections;
  std::vector<CocycleFile> cocycles;

  const CatalogEntry* find(std::string_view name) const;
  const CatalogEntry& at(std::string_view name) const;
  AlgebraDef resolve(const AlgebraRef& ref) const override;
  // Exclusions of the entry behind a reference (with its substitutions applied).
  ParamValues excludes_for(const AlgebraRef& ref) const;

  // Rebuilds the name index and materialises specializations; validates
  // uniqueness and cross references. Single-file inputs may skip the
  // provenance requirement.
  void finalize(bool require_provenance = true);

 private:
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Parses one file's text into the catalog (call finalize afterwards).
void parse_catalog_text(Catalog& cat, std::string_view text, const std::string& file = "<input>");
// Loads a directory (all *.alg, *.deg, *.cs, *.iso, *.col, *.coc files,
// recursively, in path order) or a single file. Directories require provenance
// on every algebra; single files do not.
Catalog load_catalog(const std::filesystem::path& path);

AlgebraRef parse_ref(std::string_view text, SourcePos pos = {});
Matrix basis_matrix_from_rows(const std::vector<Vector>& rows);

Verdict verify_isomorphism(const IsoWitness& w, const AlgebraResolver& catalog);
Verdict verify_isomorphism(const AlgebraDef& source, const AlgebraDef& target, const Matrix& g);

struct Fingerprint {
  std::size_t dim = 0;
  bool commutative = false;
  bool anticommutative = false;
  std::size_t square = 0;
  std::size_t cube = 0;
  std::size_t left_annihilator = 0;
  std::size_t right_annihilator = 0;
  std::size_t der = 0;
  // Extra invariants: dims of the spans of xy+yx and xy-yx over basis pairs.
  std::size_t circ_square = 0;
  std::size_t bracket_square = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

Fingerprint invariant_fingerprint(const AlgebraDef& a);

}  // namespace algtool
