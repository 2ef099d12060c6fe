#pragma once

#include <string>
#include <vector>

#include "wickgit/geometry.hpp"

namespace wickgit {

// Named verification suites bundling the library's end-to-end checks: each
// item is one verifiable claim with a pass flag and a human-readable detail
// line.  Suites are deterministic for a fixed seed.

struct SuiteItem {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteItem> items;
  bool passed() const;
};

std::vector<std::string> suite_names();

/// Run one suite by name ("walker-table", "einstein", "g2", "lorentz",
/// "sl2-orbits", "triples").  Unknown names are an Error.
SuiteResult run_suite(const std::string& name, unsigned seed = 0);

}  // namespace wickgit
