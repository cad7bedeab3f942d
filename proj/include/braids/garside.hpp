#ifndef BRAIDS_GARSIDE_HPP
#define BRAIDS_GARSIDE_HPP

#include <string>
#include <vector>

#include "braids/braid_word.hpp"
#include "braids/permutation.hpp"

namespace braids {

/// Garside left normal form Delta^inf . A_1 ... A_m over permutation-braid
/// factors.  No factor is the identity or Delta, and consecutive factors are
/// left-weighted: the starting set of A_{k+1} is contained in the finishing
/// set of A_k.  Two values are equal as records iff they represent the same
/// element of B_n, which makes the record usable as a group-ring key.
struct CanonicalBraid {
  int n = 1;
  long long inf = 0;
  std::vector<Permutation> factors;

  bool operator==(const CanonicalBraid& o) const {
    return n == o.n && inf == o.inf && factors == o.factors;
  }
  bool operator!=(const CanonicalBraid& o) const { return !(*this == o); }
};

/// The unique left-weighted form of w.  normal_form(w1) == normal_form(w2)
/// iff w1 and w2 represent the same element of B_n.
CanonicalBraid normal_form(const BraidWord& w);

bool braid_equals(const BraidWord& w1, const BraidWord& w2);

/// Group operations on canonical forms.
CanonicalBraid nf_identity(int n);
CanonicalBraid nf_multiply(const CanonicalBraid& a, const CanonicalBraid& b);
CanonicalBraid nf_invert(const CanonicalBraid& a);

/// A positive word for a permutation braid (lowest-index letter first).
BraidWord permutation_braid_word(int n, const Permutation& p);
/// Re-serialize to a braid word representing the same element.
BraidWord to_word(const CanonicalBraid& c);

/// Exponent sum; inf * n(n-1)/2 plus the factor letter counts.
long long degree(const CanonicalBraid& c);

Permutation theta(const CanonicalBraid& c);

/// Canonical key "n|inf|perm1|perm2|...": fixed-width decimal image fields
/// per factor.  The byte string is the group-ring key and the total order
/// used for trace letters.
std::string canonical_key(const CanonicalBraid& c);
CanonicalBraid parse_canonical_key(const std::string& key);

/// True iff the factor sequence is a valid left normal form for Delta^inf
/// prefixing; exposed for tests.
bool is_left_weighted(const CanonicalBraid& c);

}  // namespace braids

#endif
