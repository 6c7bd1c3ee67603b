#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algtool/catalog.hpp"
#include "algtool/report.hpp"

namespace algtool {

struct VerifyOptions {
  std::vector<std::string> sections;  // empty: nothing runs
  std::uint64_t seed = 0;
  std::size_t trials = 500;           // Borel/general sampling per closed-set target
  std::size_t stability_trials = 50;  // upper-triangular stability per source
  unsigned jobs = 1;
};

// identities, z2, extensions, dimensions, degenerations, closedsets,
// isomorphisms, fingerprints, collections.
const std::vector<std::string>& all_sections();

Report verify_catalog(const Catalog& catalog, const VerifyOptions& options);

}  // namespace algtool
