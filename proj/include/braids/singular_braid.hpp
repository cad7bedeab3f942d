#ifndef BRAIDS_SINGULAR_BRAID_HPP
#define BRAIDS_SINGULAR_BRAID_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braids/group_ring.hpp"
#include "braids/pure_braid.hpp"
#include "braids/trace_monoid.hpp"

namespace braids {

enum class SingularKind { Sigma, Tau, Delta };

/// Letter of a singular braid word: s_i^{+-1}, t_i, or d_i (= s_i t_i).
struct SingularLetter {
  SingularKind kind = SingularKind::Sigma;
  int index = 1;
  int sign = +1;  // only meaningful for Sigma
  bool operator==(const SingularLetter&) const = default;
};

struct SingularWord {
  int n = 1;
  std::vector<SingularLetter> letters;

  SingularWord() = default;
  explicit SingularWord(int strands) : n(strands) {}

  void push_sigma(int index, int sign) { letters.push_back({SingularKind::Sigma, index, sign}); }
  void push_tau(int index) { letters.push_back({SingularKind::Tau, index, +1}); }
  void push_delta(int index) { letters.push_back({SingularKind::Delta, index, +1}); }
};

void validate(const SingularWord& w);
SingularWord concat(const SingularWord& a, const SingularWord& b);
SingularWord to_singular(const BraidWord& w);

/// Vertex of the commutation graph: some a s_i^2 a^{-1}, stored in canonical
/// form together with its conjugacy stratum.  The letter key is the braid's
/// canonical key.
struct Vertex {
  CanonicalBraid braid;
  VertexClass cls;
  std::string key() const { return canonical_key(braid); }
};

/// Canonical form of a singular braid per the semidirect decomposition:
/// a normalized trace word over vertex keys and a braid part.  Record
/// equality is equality in SB_n.
struct SBElement {
  int n = 1;
  TraceWord trace;
  CanonicalBraid braid;
  bool operator==(const SBElement&) const = default;
};

/// Shared per-session state: the memoized vertex commutation oracle.
class SingularContext {
 public:
  explicit SingularContext(int n);
  int n() const { return n_; }
  const CommutationOracle& oracle() const { return *memo_; }

 private:
  int n_;
  std::unique_ptr<CommutationOracle> raw_;
  std::unique_ptr<MemoizedOracle> memo_;
};

/// True iff u v = v u in B_n (the commutator normalizes to the identity).
bool vertex_commutes(const Vertex& u, const Vertex& v);

Vertex make_vertex(const CanonicalBraid& braid);
Vertex vertex_from_conjugate(const BraidWord& conjugator, int i);

/// Left-to-right scan with braid accumulator: s_i^{+-1} extends the braid,
/// d_i emits the vertex (beta s_i^2 beta^{-1}), t_i is s_i^{-1} then d_i.
/// The trace is normalized against the session oracle.
SBElement decompose(const SingularContext& ctx, const SingularWord& w);

bool sb_equals(const SingularContext& ctx, const SingularWord& w1, const SingularWord& w2);

/// Desingularization: s_i^{+-1} -> s_i^{+-1}, t_i -> s_i - s_i^{-1},
/// d_i -> s_i^2 - 1, multiplied out in Z[B_n].
RingElement desingularize(const SingularWord& w);

/// nu(t) = product over letters of (u - 1) in Z[B_n]; letters are vertex
/// canonical keys.
RingElement nu(int n, const TraceWord& t);

/// Direct evaluation of the subindex sum: over all 2^l subindices I, the
/// ordered product of selected vertices with sign (-1)^(l-|I|).  Length is
/// capped at 20.
RingElement nu_subindex_expansion(int n, const TraceWord& t);

/// Verdict of the lowest-component check: with l the trace length and
/// d = degree(expected.braid), every component of P below d must vanish and
/// component_d(P) must be (-1)^l * expected.braid.
struct RecoverReport {
  bool ok = true;
  std::string detail;
};

RecoverReport lowest_component_recover(const RingElement& P, const SBElement& expected);

/// {"trace":[...],"braid":"..."}.
std::string sb_to_json(const SBElement& e);

}  // namespace braids

#endif
