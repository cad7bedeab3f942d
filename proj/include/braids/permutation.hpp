#ifndef BRAIDS_PERMUTATION_HPP
#define BRAIDS_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace braids {

/// Permutation of {1..n}, stored 0-based.
///
/// Convention used throughout: a braid word is scanned left to right and
/// each letter s_i swaps the strands currently at positions i, i+1.  The
/// permutation of a word maps final position p to the starting position of
/// the strand that ends there, so images() is literally the strand-at-
/// position array after the scan.  Under this convention
/// perm(u v) = compose(perm(u), perm(v)) with compose(a,b)(p) = a(b(p)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images_zero_based);

  static Permutation identity(int n);
  /// The transposition swapping positions i, i+1 (1 <= i <= n-1).
  static Permutation transposition(int n, int i);
  /// The half-twist permutation p -> n+1-p.
  static Permutation delta(int n);

  int n() const { return static_cast<int>(img_.size()); }
  int apply0(int p) const { return img_[p]; }       // 0-based
  int apply1(int p) const { return img_[p - 1] + 1; }  // 1-based

  const std::vector<int>& images0() const { return img_; }
  std::vector<int> images1() const;

  Permutation inverse() const;
  bool is_identity() const;
  bool is_delta() const;

  /// Positions i (1-based, 1 <= i <= n-1) with images(i) > images(i+1).
  std::vector<int> descents() const;
  /// Number of inversions; equals the letter count of the permutation braid.
  int inversions() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

/// perm(u v) for words u, v: apply b's scan first, then a's.
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace braids

#endif
