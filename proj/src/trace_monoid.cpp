#include "braids/trace_monoid.hpp"

#include <algorithm>

#include "braids/errors.hpp"

namespace braids {

EdgeSetOracle::EdgeSetOracle(std::set<std::pair<std::string, std::string>> edges) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

void EdgeSetOracle::add_edge(const std::string& a, const std::string& b) {
  if (a == b) throw DomainError("loop edge in commutation graph");
  edges_.emplace(std::min(a, b), std::max(a, b));
}

bool EdgeSetOracle::edge(const std::string& a, const std::string& b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

bool MemoizedOracle::edge(const std::string& a, const std::string& b) const {
  std::pair<std::string, std::string> key{std::min(a, b), std::max(a, b)};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  bool value = inner_.edge(a, b);
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(std::move(key), value);
  return value;
}

TraceWord trace_normal_form(const TraceWord& w, const CommutationOracle& o) {
  TraceWord out;
  out.letters.reserve(w.letters.size());
  std::vector<std::string> remaining = w.letters;
  while (!remaining.empty()) {
    // Scan for the least letter whose earlier remaining neighbors all
    // commute with it; the first occurrence of that letter wins.
    size_t best = remaining.size();
    std::vector<std::string> seen;
    for (size_t k = 0; k < remaining.size(); ++k) {
      const std::string& cand = remaining[k];
      bool available = true;
      for (const std::string& prev : seen) {
        if (prev == cand) continue;
        if (!o.edge(prev, cand)) {
          available = false;
          break;
        }
      }
      if (available && (best == remaining.size() || cand < remaining[best])) best = k;
      seen.push_back(cand);
    }
    out.letters.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<long>(best));
  }
  return out;
}

bool trace_equals(const TraceWord& w1, const TraceWord& w2, const CommutationOracle& o) {
  return trace_normal_form(w1, o) == trace_normal_form(w2, o);
}

ExchangeReport exchange_check(const TraceWord& x, const TraceWord& y, int k,
                              const CommutationOracle& o) {
  if (x.letters.empty()) throw DomainError("exchange_check needs a nonempty word");
  if (k < 1 || k > static_cast<int>(y.letters.size()))
    throw DomainError("exchange_check position out of range");
  if (!trace_equals(x, y, o)) throw DomainError("exchange_check requires trace-equal words");
  const std::string& x1 = x.letters.front();
  if (y.letters[k - 1] != x1) throw DomainError("y[k] must equal x[1]");
  for (int i = 1; i < k; ++i)
    if (y.letters[i - 1] == x1) throw DomainError("x[1] occurs in y before position k");

  ExchangeReport report;
  for (int i = 1; i < k; ++i) {
    const std::string& yi = y.letters[i - 1];
    if (!o.edge(yi, x1)) {
      report.counterexample = i;
      return report;
    }
    report.verified_edges.emplace_back(yi, x1);
  }
  return report;
}

}  // namespace braids
