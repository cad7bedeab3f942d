// Acceptance harness: runs every verification suite at the documented desk
// scale and prints one PASS/FAIL line per criterion.  Exit status is the
// number of failed criteria.

#include <cstdio>
#include <string>
#include <vector>

#include "braids/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> suites;
  double time_limit_seconds;  // 0 = no limit
};

}  // namespace

int main() {
  using braids::run_suite;
  using braids::VerifyOptions;
  using braids::VerifyReport;

  const std::vector<Criterion> criteria = {
      {1, "braid word problem agrees with the Artin-action oracle", {"word-problem"}, 60},
      {2, "defining relations of B_n, SB_n (both forms), PB_n for n <= 5", {"relations"}, 60},
      {3, "conjugation table rows for all (r, i<j), n in {4,5}", {"lemma32"}, 0},
      {4, "square/delta commutation equivalence in SB_4", {"lemma21"}, 0},
      {5, "eta is injective across all SB_3 words of length <= 4", {"eta-injectivity"}, 300},
      {6, "eta factors through nu with vanishing lower components", {"factorization"}, 0},
      {7, "subindex expansion equals nu on random traces", {"eq32"}, 0},
      {8, "trace equality matches exchange closures; exchange property", {"cf-exchange"}, 0},
      {9, "nu is injective on rank-2 Y-words (conj <= 1, length <= 3)", {"prop41"}, 120},
      {10, "rank-2 hat words separate at truncation N = 12", {"lemma42"}, 0},
      {11, "fixed-product and commutes-with-factors conclusions", {"prop51", "cor52"}, 0},
  };

  VerifyOptions options;  // fixed default seed, full desk-scale bounds
  int failed = 0;
  for (const auto& criterion : criteria) {
    bool pass = true;
    long long checked = 0;
    double elapsed_ms = 0;
    std::string detail;
    for (const auto& suite : criterion.suites) {
      try {
        VerifyReport report = run_suite(suite, options);
        checked += report.checked;
        elapsed_ms += report.elapsed_ms;
        if (!report.pass()) {
          pass = false;
          for (const auto& f : report.failures) detail += "\n    " + f;
          if (report.aborted) detail += "\n    (aborted on budget)";
        }
      } catch (const std::exception& e) {
        pass = false;
        detail += "\n    suite " + suite + " threw: " + e.what();
      }
    }
    if (criterion.time_limit_seconds > 0 && elapsed_ms > criterion.time_limit_seconds * 1000) {
      pass = false;
      detail += "\n    runtime " + std::to_string(elapsed_ms / 1000) + " s exceeds limit of " +
                std::to_string(criterion.time_limit_seconds) + " s";
    }
    if (!pass) ++failed;
    std::printf("criterion %2d: %s — %s (checked %lld, %.0f ms)%s\n", criterion.number,
                pass ? "PASS" : "FAIL", criterion.description.c_str(), checked, elapsed_ms,
                detail.c_str());
    std::fflush(stdout);
  }
  if (failed == 0)
    std::printf("all %zu acceptance criteria pass\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failed);
  return failed;
}
