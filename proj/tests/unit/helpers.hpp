#pragma once

#include <string>

#include "algtool/catalog.hpp"

namespace testing {

// The shipped corpus, loaded once.
inline const algtool::Catalog& corpus() {
  static const algtool::Catalog cat = algtool::load_catalog(ALGTOOL_CATALOG_DIR);
  return cat;
}

inline const algtool::AlgebraDef& alg(const std::string& name) { return corpus().at(name).algebra; }

inline algtool::AlgebraDef ref(const std::string& text) { return corpus().resolve(algtool::parse_ref(text)); }

// Parses a single algebra block.
inline algtool::AlgebraDef parse_alg(const std::string& text) {
  algtool::Catalog c;
  algtool::parse_catalog_text(c, text, "<test>");
  c.finalize(false);
  return c.entries.front().algebra;
}

inline algtool::Scalar P(const char* name) { return algtool::Scalar::param(name); }

}  // namespace testing
