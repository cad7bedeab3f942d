#ifndef BRAIDS_PURE_BRAID_HPP
#define BRAIDS_PURE_BRAID_HPP

#include <map>
#include <string>
#include <utility>

#include "braids/braid_word.hpp"
#include "braids/garside.hpp"

namespace braids {

/// Coordinates of a pure braid's class in H_1(PB_n), basis {[A_ij]}.
/// Keys are unordered pairs {i,j} with 1 <= i < j <= n; absent means zero.
struct AbelianVector {
  int n = 1;
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const;
  bool operator==(const AbelianVector&) const = default;
};

/// The conjugacy stratum Upsilon_ij a vertex belongs to.
struct VertexClass {
  int i = 0;
  int j = 0;
  bool operator==(const VertexClass&) const = default;
  bool operator<(const VertexClass& o) const { return std::pair(i, j) < std::pair(o.i, o.j); }
};

/// A_ij = s_{j-1} .. s_{i+1} s_i^2 s_{i+1}^{-1} .. s_{j-1}^{-1}.
BraidWord generator_A(int n, int i, int j);

/// True iff theta(w) is the identity.
bool is_pure(const BraidWord& w);

/// Linking-number coordinates: scan the word tracking strand positions,
/// accumulate signed crossings per unordered strand pair, halve each total.
/// The input must be pure; an odd pair total is an internal invariant
/// violation.
AbelianVector abelianize(const BraidWord& w);

AbelianVector abelian_add(const AbelianVector& a, const AbelianVector& b);

/// The unique (i,j) with abelianize(u) the unit vector at {i,j}.  The input
/// is trusted to come from some a s_i^2 a^{-1}; a non-unit abelianization
/// raises NotAVertexError, it is never guessed around.
VertexClass classify_vertex(const CanonicalBraid& u);

/// Right-hand side of the s_r A_ij s_r^{-1} conjugation table.
BraidWord conjugation_table_rhs(int n, int r, int i, int j);

/// Evaluates both sides of the applicable table row with braid_equals.
bool check_conjugation_identity(int n, int r, int i, int j);

/// {"12": v, ...} with every pair listed.
std::string abelian_to_json(const AbelianVector& v);

}  // namespace braids

#endif
