#ifndef BRAIDS_VERIFY_HPP
#define BRAIDS_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace braids {

struct VerifyOptions {
  std::optional<int> n;
  std::optional<double> budget_seconds;
  std::optional<int> max_len;
  unsigned long long seed = 20250808ULL;
};

struct VerifyReport {
  std::string suite;
  long long checked = 0;
  std::vector<std::string> failures;
  std::map<std::string, long long> info;
  double elapsed_ms = 0;
  bool aborted = false;  // stopped early on budget
  bool pass() const { return failures.empty() && !aborted; }
};

/// Suites: word-problem, relations, lemma32, lemma21, eta-injectivity,
/// factorization, eq32, cf-exchange, prop41, lemma42, prop51, cor52.
std::vector<std::string> suite_names();
VerifyReport run_suite(const std::string& name, const VerifyOptions& options);

std::string report_to_json(const VerifyReport& r);
std::string report_to_text(const VerifyReport& r);

}  // namespace braids

#endif
