// Acceptance gate: runs the full claim suite and prints one pass/fail line per
// criterion. Exit status is nonzero when any criterion fails.

#include "isocoh/verify.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using isocoh::SuiteResult;
using isocoh::VerificationReport;

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Criterion {
  std::string title;
  std::function<bool(const VerificationReport&)> select;
};

}  // namespace

int main() {
  isocoh::VerifyConfig config;
  const SuiteResult first = isocoh::run_suite(config);
  const SuiteResult second = isocoh::run_suite(config);

  const std::vector<Criterion> criteria{
      {"transitive sphere actions: cohomogeneity 1 and isotropy dimensions",
       [](const VerificationReport& r) { return starts_with(r.claim_id, "sphere."); }},
      {"reducible rows: cohomogeneity 2, faithful on m2, nontrivial on m1",
       [](const VerificationReport& r) { return starts_with(r.claim_id, "reducible."); }},
      {"Jacobi gate on lambda = 2 mu^2 for n = 2, 3, 6, 7",
       [](const VerificationReport& r) { return starts_with(r.claim_id, "jacobi."); }},
      {"bracket completion: n = 7 Killing signatures, n = 6 abelian only",
       [](const VerificationReport& r) { return starts_with(r.claim_id, "completion."); }},
      {"Heisenberg algebras: two-step nilpotent, centers, J anticommutation",
       [](const VerificationReport& r) { return starts_with(r.claim_id, "heisenberg."); }},
      {"curvature: hyperbolic -lambda^2, warped closed form vs finite differences, screw motions flat",
       [](const VerificationReport& r) {
         return starts_with(r.claim_id, "curvature.hyperbolic.") || starts_with(r.claim_id, "curvature.warped.") ||
                starts_with(r.claim_id, "curvature.euclidean_screw");
       }},
      {"splitting criterion: true on the product control, false on the catalog",
       [](const VerificationReport& r) { return starts_with(r.claim_id, "splitting."); }},
      {"every catalog entry has isotropy cohomogeneity 2",
       [](const VerificationReport& r) {
         return starts_with(r.claim_id, "catalog.") && ends_with(r.claim_id, ".cohomogeneity");
       }},
  };

  bool all = true;
  int index = 1;
  for (const Criterion& c : criteria) {
    int total = 0, passed = 0;
    std::string first_failure;
    for (const VerificationReport& r : first.reports) {
      if (!c.select(r)) continue;
      ++total;
      if (r.status == "pass") {
        ++passed;
      } else if (first_failure.empty()) {
        first_failure = r.claim_id;
      }
    }
    const bool ok = total > 0 && passed == total;
    all = all && ok;
    std::printf("criterion %d %s: %s (%d/%d claims)%s%s\n", index++, ok ? "PASS" : "FAIL", c.title.c_str(), passed,
                total, first_failure.empty() ? "" : ", first failure ", first_failure.c_str());
  }

  const bool same = isocoh::render_json_lines(first, false) == isocoh::render_json_lines(second, false);
  all = all && same;
  std::printf("criterion %d %s: two full runs give byte-identical JSON without timing (%zu claims)\n", index,
              same ? "PASS" : "FAIL", first.reports.size());
  return all ? 0 : 1;
}
