#ifndef BRAIDS_AUTOMORPHISMS_HPP
#define BRAIDS_AUTOMORPHISMS_HPP

#include <string>
#include <vector>

#include "braids/free_word.hpp"

namespace braids {

/// Automorphism of F(X) that fixes one distinguished generator x0 and leaves
/// the subgroup generated by the remaining generators invariant: images of
/// generators other than x0 are words avoiding x0.  An inverse is supplied
/// and both compositions are checked to be the identity.
struct FreeAutomorphismSpec {
  int rank = 0;
  int fixed_gen = 1;                     // x0
  std::vector<FreeWord> images;          // images[g-1]; images[x0-1] = x0
  std::vector<FreeWord> inverse_images;

  static FreeAutomorphismSpec identity(int rank, int fixed_gen);
};

/// Validates the shape and the inverse; throws DomainError on failure.
void validate(const FreeAutomorphismSpec& rho);

FreeWord apply_automorphism(const FreeAutomorphismSpec& rho, const FreeWord& w);
FreeWord apply_automorphism_inverse(const FreeAutomorphismSpec& rho, const FreeWord& w);

/// a then b as maps: (a o b)(w) = a(b(w)).
FreeAutomorphismSpec compose(const FreeAutomorphismSpec& a, const FreeAutomorphismSpec& b);

enum class Prop51Status {
  FixedProductFactorsFixed,  // rho fixes the product and every factor
  ProductMoved,              // hypothesis fails, conclusion vacuous
  Counterexample,            // product fixed but some factor moved: a bug
};

struct Prop51Verdict {
  Prop51Status status = Prop51Status::ProductMoved;
  int bad_factor = 0;  // 1-based, only for Counterexample
  std::string detail;
};

/// Each y_i is conj_i x0 conj_i^{-1}.  If rho fixes y_1...y_l the verdict
/// asserts rho fixes each factor; a counterexample would falsify the
/// fixed-factor property and therefore signals an implementation bug.
Prop51Verdict check_prop51_instance(const FreeAutomorphismSpec& rho,
                                    const std::vector<FreeWord>& conjugators);

}  // namespace braids

#endif
