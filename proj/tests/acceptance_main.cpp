// End-to-end acceptance gate.  Runs every verification suite once and folds
// the item results into eleven numbered checks, one line each.  Exits
// nonzero when any check fails and prints the failing items so the log is
// actionable on its own.

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wickgit/suites.hpp"

using wickgit::SuiteItem;
using wickgit::SuiteResult;

namespace {

struct Check {
  int number;
  std::string description;
  std::string suite;
  std::function<bool(const std::string&)> selects;  // which item ids count
};

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main() {
  std::map<std::string, SuiteResult> suites;
  for (const std::string& name : wickgit::suite_names()) {
    std::printf("running suite %-12s ...\n", name.c_str());
    std::fflush(stdout);
    suites[name] = wickgit::run_suite(name, 0);
  }

  const std::vector<Check> checks = {
      {1,
       "four canonical neutral-signature metrics: curvature weight types "
       "W1..W4 (exact support) with matching orbit verdicts",
       "walker-table", [](const std::string&) { return true; }},
      {2,
       "bi-invariant su(2)+su(2) metric: Einstein constant 1/4 exactly, "
       "preserved by the split-form replacement with signature (4,2)",
       "einstein", [](const std::string&) { return true; }},
      {3,
       "cohomogeneity-one metric pair: |Ric| < 1e-6 at 10 radial samples, "
       "split signature (4,3), curvature span within the 14-dim bound",
       "g2",
       [](const std::string& id) {
         return id == "ricci-flat" || id == "wick-ricci-flat" ||
                id == "wick-signature" || id == "span" || id == "wick-span";
       }},
      {4,
       "Maurer-Cartan residuals below 1e-10 at 50 random points for both "
       "left-invariant coframes",
       "g2",
       [](const std::string& id) { return starts_with(id, "mc-"); }},
      {5,
       "sl(2,R) adjoint orbits: real-orbit counts {2,1} and 500 random "
       "flow verdicts against the discriminant oracle",
       "sl2-orbits",
       [](const std::string& id) {
         return starts_with(id, "count-") || id == "flow-oracle";
       }},
      {6,
       "Lorentz canonical forms for n = 3..6: rotation-conjugate pairs "
       "agree to 1e-8, distinct invariants separate",
       "lorentz",
       [](const std::string& id) { return starts_with(id, "n"); }},
      {7,
       "swapped rotation blocks in the neutral form: one compact orbit, "
       "two orbits under the block subgroup",
       "lorentz", [](const std::string& id) { return id == "swapped-block"; }},
      {8,
       "standard form pairs through n = 6: conjugations commute, slices "
       "split, Cartan pieces of non-isomorphic pairs intersect",
       "triples",
       [](const std::string& id) {
         return id == "commute" || id == "direct-sum" || ends_with(id, "-meets") ||
                starts_with(id, "cartan");
       }},
      {9,
       "Killing-form signatures match (p(p-1)/2 + q(q-1)/2, pq) exactly "
       "for every p + q <= 6",
       "triples",
       [](const std::string& id) { return id == "killing-signature"; }},
      {10,
       "compact-intersection witnesses: minimal to machine precision, "
       "within 1e-8 of the flowed orbit, rotation seeds fixed exactly",
       "sl2-orbits",
       [](const std::string& id) { return starts_with(id, "witness-"); }},
      {11,
       "invariant Hermitian pairing on tensors of valence <= 2 for all "
       "standard form pairs",
       "triples", [](const std::string& id) { return id == "hermitian"; }},
  };

  int failures = 0;
  std::vector<const SuiteItem*> failed_items;
  for (const Check& c : checks) {
    const auto it = suites.find(c.suite);
    bool ok = it != suites.end();
    int selected = 0;
    if (ok) {
      for (const SuiteItem& item : it->second.items) {
        if (!c.selects(item.id)) continue;
        ++selected;
        if (!item.pass) {
          ok = false;
          failed_items.push_back(&item);
        }
      }
    }
    if (selected == 0) ok = false;  // a check with no evidence did not run
    if (!ok) ++failures;
    std::printf("%2d  %s  %s\n", c.number, ok ? "PASS" : "FAIL", c.description.c_str());
  }

  if (!failed_items.empty()) {
    std::printf("\nfailing items:\n");
    for (const SuiteItem* item : failed_items)
      std::printf("  %-20s %s\n", item->id.c_str(), item->detail.c_str());
  }
  std::printf("\n%d of %zu checks passed\n", static_cast<int>(checks.size()) - failures,
              checks.size());
  return failures == 0 ? 0 : 1;
}
