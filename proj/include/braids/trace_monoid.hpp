#ifndef BRAIDS_TRACE_MONOID_HPP
#define BRAIDS_TRACE_MONOID_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace braids {

/// Commutation oracle for a graph monoid: edge(a,b) says whether the two
/// letter keys commute.  Must be symmetric; edge(a,a) is never consulted
/// (equal letters commute as occurrences).
class CommutationOracle {
 public:
  virtual ~CommutationOracle() = default;
  virtual bool edge(const std::string& a, const std::string& b) const = 0;
};

/// Oracle backed by an explicit edge set.
class EdgeSetOracle final : public CommutationOracle {
 public:
  EdgeSetOracle() = default;
  explicit EdgeSetOracle(std::set<std::pair<std::string, std::string>> edges);
  void add_edge(const std::string& a, const std::string& b);
  bool edge(const std::string& a, const std::string& b) const override;

 private:
  std::set<std::pair<std::string, std::string>> edges_;
};

/// Memoizing wrapper, keyed on the ordered pair.  Semantically invisible;
/// safe for concurrent lookup/insert.
class MemoizedOracle final : public CommutationOracle {
 public:
  explicit MemoizedOracle(const CommutationOracle& inner) : inner_(inner) {}
  bool edge(const std::string& a, const std::string& b) const override;

 private:
  const CommutationOracle& inner_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::string, std::string>, bool> memo_;
};

/// Word in a graph monoid over byte-string letter keys, ordered
/// lexicographically.
struct TraceWord {
  std::vector<std::string> letters;
  bool operator==(const TraceWord&) const = default;
};

/// The lexicographically least representative of the trace class of w:
/// repeatedly emit the smallest remaining letter all of whose earlier
/// remaining neighbors commute with it.
TraceWord trace_normal_form(const TraceWord& w, const CommutationOracle& o);

bool trace_equals(const TraceWord& w1, const TraceWord& w2, const CommutationOracle& o);

/// Outcome of the exchange-property check: either every edge {y_i, x_1},
/// i < k, verified, or the index of a counterexample (which would falsify
/// the exchange property and therefore signals an implementation bug).
struct ExchangeReport {
  std::vector<std::pair<std::string, std::string>> verified_edges;
  std::optional<int> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

/// Preconditions (checked): x and y trace-equal, y[k] = x[1], y[i] != x[1]
/// for i < k (1-based).
ExchangeReport exchange_check(const TraceWord& x, const TraceWord& y, int k,
                              const CommutationOracle& o);

}  // namespace braids

#endif
