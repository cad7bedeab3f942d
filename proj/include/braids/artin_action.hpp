#ifndef BRAIDS_ARTIN_ACTION_HPP
#define BRAIDS_ARTIN_ACTION_HPP

#include <vector>

#include "braids/braid_word.hpp"
#include "braids/free_word.hpp"

namespace braids {

/// Automorphism of the free group of rank n, stored as reduced images of the
/// generators together with the images under the inverse automorphism.
/// The braid action is faithful, so equality of actions decides equality in
/// B_n independently of the Garside machinery.
struct FreeAutomorphism {
  int rank = 0;
  std::vector<FreeWord> images;          // images[g-1] = image of x_g
  std::vector<FreeWord> inverse_images;

  static FreeAutomorphism identity(int rank);

  FreeWord apply(const FreeWord& w) const;
  FreeWord apply_inverse(const FreeWord& w) const;

  /// Equal automorphisms have equal generator images.
  bool operator==(const FreeAutomorphism& o) const {
    return rank == o.rank && images == o.images;
  }
};

/// The automorphism s_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i, fixing
/// the rest; extended to words so that action(u v) = action(u) o action(v).
/// Composing images with inverse_images gives the identity on every
/// generator (checked).
FreeAutomorphism artin_action(const BraidWord& w);

}  // namespace braids

#endif
